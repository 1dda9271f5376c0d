use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structures live over different Hopf algebras")]
    HostMismatch,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("dimension {dim} exceeds the configured maximum {max}")]
    TooLarge { dim: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
