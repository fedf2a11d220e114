use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{line}: {reason}")]
    Row { file: String, line: usize, reason: String },
    #[error("{file}: missing cell `{column}` at user {user}, {game}, phase {phase}, {frequency}")]
    MissingCell {
        file: String,
        column: String,
        user: String,
        game: String,
        phase: String,
        frequency: String,
    },
    #[error("{file}: {reason}")]
    Table { file: String, reason: String },
}

pub(crate) fn read(path: &std::path::Path) -> Result<String, DataError> {
    std::fs::read_to_string(path).map_err(|source| DataError::Io { path: path.to_path_buf(), source })
}
