use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated a documented precondition of an operation.
    #[error("invalid {what}: {reason}")]
    Validation { what: &'static str, reason: String },

    /// An operation-specific precondition failed, such as matching invariants or a product constraint.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no real root found below the upper bound {bound}")]
    NoRealRoot { bound: f64 },

    #[error("operation not supported for n = {0}")]
    UnsupportedSize(usize),

    #[error("operation requires odd n, got n = {0}")]
    UnsupportedParity(usize),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Validation {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
