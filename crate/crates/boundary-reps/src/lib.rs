//! Boundary representations as path modules, the diagonal modules, and their
//! submodule dimension vectors.

mod error;
mod module;
mod paths;
mod weights;

pub use error::RepError;
pub use module::{DimVector, PathModule};
pub use paths::{boundary_path, column_of, diagonal_module, path_start, DiagonalOrientation};
pub use weights::{cross_check_weights, weight_identity_violations};
