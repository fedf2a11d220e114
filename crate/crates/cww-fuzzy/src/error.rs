use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("empty aggregation")]
    EmptyAggregation,
    #[error("invalid tri-tuple ({0}, {1}, {2}): need 0 <= l <= m <= r <= 1")]
    InvalidTriTuple(f64, f64, f64),
    #[error("invalid weight profile ({0}, {1}, {2}): weights must be >= 0 and sum to 1")]
    InvalidWeights(f64, f64, f64),
    #[error("unordered knots ({0}, {1}, {2}, {3})")]
    UnorderedKnots(f64, f64, f64, f64),
    #[error("knot outside [0, 10]: {0}")]
    KnotOutOfScale(f64),
    #[error("lmf height {0} outside (0, 1]")]
    InvalidHeight(f64),
    #[error("out of scale: x = {0}")]
    OutOfScale(f64),
    #[error("empty set")]
    EmptySet,
    #[error("undefined similarity")]
    UndefinedSimilarity,
    #[error("grid resolution {got} below minimum {min}")]
    Resolution { got: usize, min: usize },
    #[error("sample length mismatch")]
    LengthMismatch,
}
