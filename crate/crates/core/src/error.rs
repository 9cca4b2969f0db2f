use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} ({count} > limit {limit})")]
    Resource {
        what: String,
        count: u128,
        limit: u128,
    },

    #[error("no Jordan table entry for N = {0}; supply one with a table file")]
    MissingJordanEntry(usize),

    #[error("the linear automorphism group of this family is infinite")]
    InfiniteGroup,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn resource(what: impl Into<String>, count: u128, limit: u128) -> Self {
        Error::Resource {
            what: what.into(),
            count,
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
