use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} requires a finite field")]
    RequiresFiniteField(&'static str),

    #[error("not a submodule: {0}")]
    NotSubmodule(String),

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
