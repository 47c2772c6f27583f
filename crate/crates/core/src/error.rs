use thiserror::Error;

/// Errors raised by every validated operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} is outside [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("{family} constraint violated: {value} > {bound}")]
    Constraint { family: String, value: f64, bound: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("undefined operation: {0}")]
    Undefined(String),

    #[error("invalid entry at row {row}, column {col}: {message}")]
    InvalidEntry { row: usize, col: usize, message: String },

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
