//! CLI error type and its mapping onto process exit codes.

use thiserror::Error;

/// Exit codes: 2 parameter error, 3 verification failure, 4 I/O error.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parameter(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parameter(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<qwell::Error> for CliError {
    fn from(err: qwell::Error) -> Self {
        match err {
            qwell::Error::QuadratureDidNotConverge { .. } => {
                CliError::Verification(err.to_string())
            }
            other => CliError::Parameter(other.to_string()),
        }
    }
}
