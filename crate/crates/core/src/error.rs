use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input value (bad type vector, length mismatch, ...).
    #[error("invalid input: {0}")]
    Validation(String),
    /// Input is well formed but outside the operation's domain.
    #[error("out of domain: {0}")]
    Domain(String),
    /// An operation's stated precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An enumeration would exceed the configured size guard.
    #[error("enumeration of {what} would produce {predicted} elements (limit {limit})")]
    Resource {
        what: String,
        predicted: String,
        limit: u64,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
