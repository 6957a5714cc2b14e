//! Schofield semi-invariants of the flag quiver and their lifts, evaluated on
//! integer representations.

mod error;
mod exchange;
mod matrix;
mod presentation;
mod rep;
mod weight;

pub use error::SemiError;
pub use exchange::{check_exchange_relations, vertex_value, ExchangeReport};
pub use matrix::{det, Matrix};
pub use presentation::{eval_semi_invariant, lifted_presentation, Presentation};
pub use rep::Representation;
pub use weight::{det_weight, probe_degrees, sigma_lambda_weight, vertex_weight};
