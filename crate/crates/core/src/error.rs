use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element id {id} out of range for semigroup of order {order}")]
    OutOfRange { id: usize, order: usize },
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("semigroup is not regular")]
    NotRegular,
    #[error("element {0} is not absorbing, cannot be the zero")]
    NotAZero(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown catalog name {0:?}")]
    UnknownCatalog(String),
    #[error("invalid structure matrix: {0}")]
    InvalidStructure(String),
    #[error("transformation is not orientation preserving")]
    NotOrientationPreserving,
    #[error("rank {0} is below 2")]
    RankTooSmall(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid kernel signature {0}")]
    InvalidSignature(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("semigroup has no transformation realization")]
    NotTransformations,
    #[error("not a subsemigroup: {0}")]
    NotClosed(String),
    #[error("graph part {part} is not regular of positive degree")]
    IrregularPart { part: usize },
    #[error("internal invariant failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
