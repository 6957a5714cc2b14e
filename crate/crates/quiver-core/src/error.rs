use crate::VertexId;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("cannot mutate at frozen vertex {0}")]
    MutationAtFrozen(VertexId),
    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(VertexId),
    #[error("weights do not balance at mutable vertex {0}")]
    NotAWeightConfig(VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("2-cycle through mutable vertex between {0} and {1}")]
    TwoCycle(VertexId, VertexId),
    #[error("weight vector of {vertex} has length {got}, expected {expected}")]
    WeightLength { vertex: VertexId, got: usize, expected: usize },
    #[error("cannot parse vertex label {0:?}")]
    BadLabel(String),
}
