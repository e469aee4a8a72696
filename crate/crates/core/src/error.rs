use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element is not a unit of the generic ring: {0}")]
    NotAUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("operation requires a nonzero vector")]
    ZeroVector,
    #[error("incompatible fields: conductor {0} vs {1}")]
    FieldMismatch(u32, u32),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("construction check failed: {0}")]
    CheckFailed(String),
    #[error("table fill produced a negative entry at lambda={lambda}, mu={mu}")]
    NegativeEntry { lambda: i64, mu: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
