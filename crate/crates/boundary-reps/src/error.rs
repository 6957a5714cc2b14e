use diamond_builder::BuildError;
use quiver_core::VertexId;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{0} is not a frozen boundary vertex")]
    NotBoundaryFrozen(VertexId),
    #[error("no {kind} arrow leaves {from}")]
    ArrowMissing { from: VertexId, kind: &'static str },
    #[error("{count} {kind} arrows leave {from}; the straight direction is ambiguous")]
    Ambiguous { from: VertexId, kind: &'static str, count: usize },
    #[error("walk from {0} does not terminate")]
    Runaway(VertexId),
    #[error("diagonal index {n} outside 1..={m}")]
    IndexOutOfRange { n: u32, m: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
}
