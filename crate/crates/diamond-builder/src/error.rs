use quiver_core::{QuiverError, VertexId};
use semiinvariants::SemiError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("sizes l = {l}, m = {m} are too small (need l, m >= 2)")]
    SizeTooSmall { l: usize, m: usize },
    #[error("raw label ({i},{j},{n}) is outside the hives for l = {l}, m = {m}")]
    OutOfRange { n: u32, i: u32, j: u32, l: usize, m: usize },
    #[error("weight configuration fails at mutable vertex {0}")]
    WeightConfigInconsistent(VertexId),
    #[error("no twist word for diamond {n} (m = {m})")]
    UnsupportedDiamond { n: u32, m: usize },
    #[error("transported and solved weights disagree at {0}")]
    WeightRoutesDisagree(VertexId),
    #[error("twisted quiver differs from the direct construction")]
    TwistMismatch,
    #[error("adjacent hive points collapse to the same vertex {0}")]
    Collapse(VertexId),
    #[error("arrow weights do not cancel to an integer between {0} and {1}")]
    HalfArrow(VertexId, VertexId),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Semi(#[from] SemiError),
}
