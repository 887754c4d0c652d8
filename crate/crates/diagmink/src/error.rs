//! Crate-wide error type.

/// Errors surfaced by geometry, measure, and sampler operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{op} does not support this body variant: {detail}")]
    Unsupported { op: &'static str, detail: String },

    #[error("index set must be non-empty")]
    EmptyIndexSet,

    #[error("grid too small: {got} points cannot resolve {need} atoms")]
    GridTooSmall { got: usize, need: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
