use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("classes belong to different lattices ({left} vs {right})")]
    LatticeMismatch { left: String, right: String },
    #[error("coordinate vector has length {got}, lattice rank is {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("D·(D+K) = {value} is odd; the lattice is malformed")]
    Parity { value: i64 },
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("malformed lattice: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown table id `{0}`")]
    UnknownTable(String),
    #[error("fixture parse error on line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
