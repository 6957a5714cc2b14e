//! The cone of g-vectors, its fibres under the weight grading, exact LP
//! and lattice-point counting.

mod cone;
mod count;
mod error;
mod extent;
mod lattice;
mod lp;
mod num;
mod simplex;

pub use cone::{build_cone, build_cone_with, Breakdown, Cone, ConeDoc};
pub use count::{brute_force_count, count_lattice_points, count_lattice_points_with, CountOptions};
pub use error::PolyError;
pub use extent::{is_essential, lp_extent, Extent};
pub use lattice::FibreLattice;
