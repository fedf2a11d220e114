use cww_fuzzy::Fou;

use crate::{Codebook, CodebookError};

/// Turns a word's collected data intervals into its interval type-2 model.
///
/// Interval-based encoders plug in here; the shipped [`TableEncoder`] serves
/// precomputed models straight from a codebook.
pub trait Encoder {
    fn encode(&self, word: &str, intervals: &[(f64, f64)]) -> Result<Fou, CodebookError>;
}

/// Serves the codebook entry for `word`, ignoring the intervals.
#[derive(Debug, Clone)]
pub struct TableEncoder<'a> {
    codebook: &'a Codebook,
}

impl<'a> TableEncoder<'a> {
    pub fn new(codebook: &'a Codebook) -> Self {
        TableEncoder { codebook }
    }
}

impl Encoder for TableEncoder<'_> {
    fn encode(&self, word: &str, _intervals: &[(f64, f64)]) -> Result<Fou, CodebookError> {
        self.codebook.find(word).copied().ok_or_else(|| CodebookError::UnknownWord(word.to_string()))
    }
}
