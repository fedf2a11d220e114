use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("unknown word `{word}` for criterion {criterion}")]
    UnknownWord { criterion: String, word: String },
    #[error("unknown weight word `{0}`")]
    UnknownWeight(String),
    #[error("empty aggregation")]
    Empty,
    #[error("{terms} terms but {weights} weights")]
    LengthMismatch { terms: usize, weights: usize },
    #[error("weights sum to {0}, expected 1")]
    WeightSum(f64),
    #[error("codebook has no `{0}` vocabulary")]
    MissingVocabulary(String),
    #[error(transparent)]
    Fuzzy(#[from] cww_fuzzy::FuzzyError),
}
