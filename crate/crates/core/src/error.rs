use thiserror::Error;

use crate::dsl::SyntaxError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scalar {text:?}: bad token {token:?}")]
    ScalarParse { text: String, token: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },

    #[error("state vector is zero")]
    ZeroVector,

    #[error("operator is not hermitian")]
    NotHermitian,

    #[error("operator is not unitary")]
    NotUnitary,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid projector family for {observable}: {reason}")]
    InvalidProjectors { observable: String, reason: String },

    #[error("malformed classical kernel: {0}")]
    MalformedKernel(String),

    #[error("invalid process: {0}")]
    InvalidProcess(String),

    #[error("stage index {index} out of range for a process of {len} stages")]
    StageOutOfRange { index: usize, len: usize },

    #[error("invalid phase space: {0}")]
    InvalidPhaseSpace(String),

    #[error("the subspace lattice is distributive in dimension ≤ 1")]
    DistributiveDimension,

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("unbound variable {0:?}")]
    UnboundVariable(String),

    #[error("element does not belong to the structure: {0}")]
    ForeignElement(String),

    #[error(transparent)]
    Syntax(#[from] SyntaxError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("format error: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
