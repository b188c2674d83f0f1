use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Math(#[from] canonframe::Error),
}

impl CliError {
    /// 2 for unreadable or malformed input, 3 for a violated mathematical precondition.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(e) if e.is_math_precondition() => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
