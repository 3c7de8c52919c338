use thiserror::Error;

/// Errors raised by the library. The CLI maps every variant to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("n = {n} exceeds the enumeration cap of {cap} (set WIDTHK_MAX_N to raise it)")]
    CapExceeded { n: usize, cap: usize },

    #[error("method not applicable: {0}")]
    NotApplicable(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
