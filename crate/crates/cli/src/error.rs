use otto_core::OttoError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] OttoError),

    #[error("{0} acceptance criteria failed")]
    AcceptanceFailed(usize),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for invalid input, 3 for numerical non-convergence, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Invalid(_) => 2,
            Self::Core(OttoError::NonConvergence { .. }) => 3,
            Self::Core(OttoError::InvalidParameter(_) | OttoError::DegenerateCubic) => 2,
            Self::Core(OttoError::NotAnEngine { .. }) => 2,
            Self::AcceptanceFailed(_) | Self::Io(_) | Self::Json(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
