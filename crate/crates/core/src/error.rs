use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("comodule sides do not match: {0}")]
    SideMismatch(String),
    #[error("not a bialgebra: {0}")]
    NotABialgebra(String),
    #[error("module is not rational: {0}")]
    NotRational(String),
    #[error("not an idempotent: {0}")]
    NotIdempotent(String),
    #[error("invalid colinear idempotent: {0}")]
    InvalidIdempotent(String),
    #[error("phi^{order} is nonzero, truncation too short")]
    NotNilpotentEnough { order: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("search inconclusive: {0}")]
    Inconclusive(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
