use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Config` covers bad user input (unknown game ids, inapplicable rules,
/// mismatched files). `Contract` covers violated operation preconditions,
/// which indicate a caller bug rather than bad input. `Format` covers
/// malformed or incompatible serialized artifacts.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
