use thiserror::Error;

/// Errors raised by the slope engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A slope specification failed to parse.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A 64-bit intermediate did not fit.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// An internal consistency check failed. Never expected on valid input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl SlopeError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        SlopeError::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        SlopeError::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = SlopeError> = std::result::Result<T, E>;
