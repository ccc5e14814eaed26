use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// An enumeration guard or structural size limit was exceeded.
    #[error("size error: {0}")]
    Size(String),
    /// A plug-in table lookup fell outside the supplied entries.
    #[error("range error: {0}")]
    Range(String),
    /// A generator parameter violates the construction's preconditions.
    #[error("validation error: {0}")]
    Validation(String),
    /// A text file failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }
}
