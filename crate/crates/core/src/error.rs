use thiserror::Error;

/// Errors raised by the library. Mathematical "no" answers are never errors;
/// they are reported through verdict types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments whose sizes or grounds do not fit together.
    #[error("shape error: {0}")]
    Shape(String),
    /// A precondition on values (dominance, invertibility, ...) is violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured enumeration budget would be exceeded.
    #[error("resource error: {0}")]
    Resource(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! shape_err {
    ($($arg:tt)*) => { $crate::error::Error::Shape(format!($($arg)*)) };
}
macro_rules! domain_err {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
pub(crate) use domain_err;
pub(crate) use shape_err;
