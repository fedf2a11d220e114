use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CodebookError {
    #[error("{file}:{line}: {reason}")]
    Malformed { file: String, line: usize, reason: String },
    #[error("{file}: {reason}")]
    Structure { file: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("word not in codebook: {0}")]
    UnknownWord(String),
    #[error("sample size must be positive")]
    EmptySample,
    #[error("interval [{0}, {1}] is not an ordered sub-interval of [0, 10]")]
    BadInterval(f64, f64),
    #[error("no pair with left < right after {0} attempts")]
    Exhausted(usize),
}
