use cww_codebook::CodebookError;
use cww_datasets::{DataError, Phase};
use cww_engines::EngineError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Codebook(#[from] CodebookError),
    #[error("{origin}:{line}: {reason}")]
    Config { origin: String, line: usize, reason: String },
    #[error("user {user}, {game}, phase {phase}: {source}")]
    Engine { user: u32, game: String, phase: Phase, source: EngineError },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl HarnessError {
    /// Process exit status for this error: 2 for bad input data, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Data(_) | HarnessError::Codebook(_) | HarnessError::Config { .. } => 2,
            _ => 1,
        }
    }
}
