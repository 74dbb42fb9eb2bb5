use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: gl_{left} vs gl_{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("sigma expansion did not terminate within {bound} ad-steps")]
    SigmaBound { bound: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("construction bug: {0}")]
    ConstructionBug(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
