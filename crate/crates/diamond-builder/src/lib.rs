//! Glued hive quivers: single hives, the lifted quiver with its weight
//! configuration, the twist mutation word and the twisted quiver.

mod bar;
mod canon;
mod error;
mod hive;
mod tilde;
mod twist;

pub use bar::{
    build_bar, direct_bar, solve_mutable_weights, ArrowType, BarQuiver, Contribution, R2Status, Typing, WeightSolve,
};
pub use canon::{canonical_vertex, hive_points, on_edge, Edges};
pub use error::BuildError;
pub use hive::{hive, HiveSpec, Orientation};
pub use tilde::{build_tilde, frozen_boundary, vertex_count, Chirality, GluedQuiver};
pub use twist::{diagonal_reversal, full_twist, interior_sweep, twist_sequence};

/// Rejects sizes below the supported range.
pub fn check_size(l: usize, m: usize) -> Result<(), BuildError> {
    if l < 2 || m < 2 {
        return Err(BuildError::SizeTooSmall { l, m });
    }
    Ok(())
}
