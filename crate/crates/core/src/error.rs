use thiserror::Error;

/// Errors raised by the algebra and its combinatorial substrate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("invalid integer partition: {0}")]
    InvalidIntegerPartition(String),
    #[error("partitions {0} and {1} are not comparable")]
    NotComparable(String, String),
    #[error("{0} does not refine {1}")]
    NotRefinement(String, String),
    #[error("minimal-length representative of the double coset of {0} is not unique")]
    NonUniqueMinimum(String),
    #[error("character hosts differ: {0} vs {1}")]
    HostMismatch(String, String),
    #[error("not a virtual character: {0}")]
    NotVirtualCharacter(String),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("support escapes the ambient subgroup: {0}")]
    SupportEscapes(String),
    #[error("character is not honest (has negative multiplicities)")]
    VirtualNotHonest,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
