use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidContext(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },

    #[error("permutation is not an element of the dihedral representation")]
    NotInGroup,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("target {target} is not reachable by a length-{k} word (wrong parity class)")]
    UnsupportedTarget { target: String, k: usize },

    #[error("internal word construction failure for {target}: {reason}")]
    InternalWord { target: String, reason: String },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("enumeration of {required} items exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error(
        "vertex {0} is unreachable from the identity; generating set does not generate the group"
    )]
    NotStronglyConnected(u64),

    #[error("invalid digraph spec: {0}")]
    InvalidSpec(String),

    #[error("invalid bound parameters: {0}")]
    InvalidBound(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
