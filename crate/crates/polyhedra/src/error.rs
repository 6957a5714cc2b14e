use boundary_reps::RepError;
use diamond_builder::BuildError;
use quiver_core::VertexId;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("the fibre is unbounded, so it holds infinitely many lattice points")]
    UnboundedFibre,
    #[error("weight vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("coordinate {0} is not a vertex of the cone")]
    UnknownCoordinate(VertexId),
    #[error("fixed coordinates must form a prefix of the vertex order")]
    NotAPrefix,
    #[error("bounding box holds more than {limit} points")]
    BoxTooLarge { limit: u64 },
    #[error("malformed cone document: {0}")]
    Format(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
