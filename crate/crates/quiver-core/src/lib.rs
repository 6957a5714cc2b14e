//! Ice quivers, B-matrices, mutation and weight configurations.

mod bmatrix;
mod error;
pub mod linalg;
mod quiver;
mod vertex;
mod weights;

pub use bmatrix::BMatrix;
pub use error::QuiverError;
pub use quiver::IceQuiver;
pub use vertex::VertexId;
pub use weights::{mutate_weights, WeightConfig, WeightLayout};
