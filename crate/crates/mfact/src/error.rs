use mfact_core::error::{FactorizationError, PipelineError};

/// Errors surfaced by the commands, each mapped to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("input is not summand-reduced:\n{0}")]
    Strict(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) | CliError::Malformed(_) => 2,
            CliError::Verification(_) => 3,
            CliError::CapExceeded(_) => 4,
            CliError::Strict(_) => 5,
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Parse(p) => CliError::Parse(p.to_string()),
            PipelineError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            PipelineError::Factorization(FactorizationError::Verification(f)) => {
                CliError::Verification(f.to_string())
            }
            other => CliError::Malformed(other.to_string()),
        }
    }
}
