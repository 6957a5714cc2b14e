use quiver_core::VertexId;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemiError {
    #[error("index out of range: (i,j,n) = ({i},{j},{n}) for l = {l}, m = {m}")]
    IndexOutOfRange { i: u32, j: u32, n: u32, l: usize, m: usize },
    #[error("presentation is not square: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },
    #[error("sample is degenerate: value at {0} vanishes")]
    DegenerateSample(VertexId),
    #[error("representation has shape (l={got_l}, m={got_m}), expected (l={l}, m={m})")]
    ShapeMismatch { got_l: usize, got_m: usize, l: usize, m: usize },
    #[error("degree probe found no non-vanishing sample for {0}")]
    ProbeFailed(VertexId),
}
