//! Crate-wide error type.

use thiserror::Error;

/// Errors raised when inputs violate a documented precondition or when an
/// internal structural invariant (one that theory guarantees) fails at runtime.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("a multipartition needs at least one component")]
    EmptyMultiPartition,
    #[error("weight system has length {got}, expected {expected}")]
    WeightLengthMismatch { got: usize, expected: usize },
    #[error("multipartitions must have the same number of components ({0} vs {1})")]
    ComponentCountMismatch(usize, usize),
    #[error("multipartitions must have the same size ({0} vs {1})")]
    SizeMismatch(u32, u32),
    #[error("floor {floor} is below the charged height {min}")]
    FloorTooSmall { floor: i64, min: i64 },
    #[error("root difference needs distinct residues, got s = t = {0}")]
    EqualResidues(u32),
    #[error("residue {residue} out of range for order {order}")]
    ResidueOutOfRange { residue: u32, order: u32 },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLengthMismatch { got: usize, expected: usize },
    #[error("monomial is not primitive: {0:?}")]
    ImprimitiveMonomial(Vec<i64>),
    #[error("monomial exponents do not sum to zero on variable block {block}")]
    NonZeroBlockSum { block: usize },
    #[error("variable blocks cover {got} variables, expected {expected}")]
    BlockCoverMismatch { got: usize, expected: usize },
    #[error("package size {d} does not divide the component count {count}")]
    PackageMismatch { d: usize, count: usize },
    #[error("group action does not close within {order} steps")]
    ActionNotClosing { order: usize },
    #[error("orbit size {size} does not divide the group order {order}")]
    OrbitSizeInvalid { size: usize, order: usize },
    #[error("parent blocks are not stable under the cyclic action")]
    UnstableParentBlocks,
    #[error("expected every orbit to have size {expected}, found one of size {got}")]
    UnexpectedOrbitSize { expected: usize, got: usize },
    #[error("e = {e} does not divide de = {de}")]
    InvalidDivisor { de: usize, e: usize },
    #[error("rank r = {0} is out of range, need r >= 2")]
    RankOutOfRange(u32),
    #[error("label {0} does not belong to this partition")]
    UnknownLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
