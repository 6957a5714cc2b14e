use polyhedra::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KronError {
    #[error("partition sizes differ: {0} and {1}")]
    SizeMismatch(u32, u32),
    #[error("partition of length {len} exceeds l = {l}")]
    LengthExceedsL { len: usize, l: usize },
    #[error("partition of length {len} exceeds m = {m}")]
    LengthExceedsM { len: usize, m: usize },
    #[error("oracle bound is n <= {bound}, got n = {n}")]
    SizeTooLargeForOracle { n: u32, bound: u32 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("alternating sum is negative ({0}); the construction is defective")]
    NegativeCoefficient(num_bigint::BigInt),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
