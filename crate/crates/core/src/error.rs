use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("size limit exceeded: {what} is {actual}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        cap: usize,
    },
    /// A computation produced a value that contradicts a proven identity.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
