use thiserror::Error;

/// Errors raised by cycle evaluation, optimisation and sampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OttoError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Efficiency requested outside the engine regime (W > 0 and Q_h > 0).
    #[error("not an engine: efficiency is undefined (W = {work}, Q_h = {heat_hot})")]
    NotAnEngine { work: f64, heat_hot: f64 },

    #[error("degenerate cubic: leading coefficient is zero")]
    DegenerateCubic,

    #[error("lambda did not converge: {coarse} vs {fine} after doubling the step count")]
    NonConvergence { coarse: f64, fine: f64 },
}

pub type Result<T> = std::result::Result<T, OttoError>;

pub(crate) fn invalid(msg: impl Into<String>) -> OttoError {
    OttoError::InvalidParameter(msg.into())
}
