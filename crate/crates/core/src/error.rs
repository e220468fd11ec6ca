use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("mixed degrees {0} and {1} in one Steenrod element")]
    Inhomogeneous(u32, u32),

    #[error("no relation is defined for n = {0} (n = 3 mod 4)")]
    NoRelation(i64),

    #[error("{what} = {value} is out of range (must be at least {min})")]
    OutOfRange { what: &'static str, value: i64, min: i64 },

    #[error("size limit exceeded: {what} needs {required}, cap is {cap}")]
    SizeLimit { what: &'static str, required: u64, cap: u64 },

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("data does not match residue class: {0}")]
    ResidueMismatch(String),

    #[error("internal error: rewriting budget of {0} steps exhausted")]
    RewriteBudget(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }
}
