//! Word codebooks: each criterion owns five ranked words, each word an
//! interval type-2 set on the `[0, 10]` scale.

mod book;
mod encoder;
mod error;
mod sampler;
mod validate;

pub use book::{parse_codebook, parse_codebook_str, serialize_codebook, Codebook, CriterionVocabulary, HEADER};
pub use encoder::{Encoder, TableEncoder};
pub use error::CodebookError;
pub use sampler::{person_fou_sample, IntervalPair, MAX_ATTEMPTS};
pub use validate::{validate_codebook, validate_with, ValidationReport, WordCheck};
