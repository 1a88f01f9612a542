use std::fmt;

/// Errors reported by the library's fallible operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two matrices that must share a dimension do not.
    DimensionMismatch { left: usize, right: usize },
    /// A matrix entry is NaN or infinite where a finite value is required.
    NonFiniteEntry { row: usize, col: usize },
    /// An argument is outside the documented domain of an operation.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NonFiniteEntry { row, col } => {
                write!(f, "non-finite entry at ({row}, {col})")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
