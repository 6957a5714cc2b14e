//! Kronecker coefficients as signed sums of lattice-point counts, with a
//! character-theoretic oracle.

mod character;
mod engine;
mod error;
mod partition;
mod weights;

pub use character::{kronecker_oracle, kronecker_oracle_with_bound, mn_character, z_rho, ORACLE_BOUND};
pub use engine::{default_sizes, kronecker, Engine, Kronecker, Term};
pub use error::KronError;
pub use partition::Partition;
pub use weights::{lambda_shifts, sigma_of, theta, Shift, SigmaWeight};
