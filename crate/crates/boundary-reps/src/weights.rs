use std::collections::BTreeMap;

use diamond_builder::{solve_mutable_weights, BarQuiver, R2Status};
use quiver_core::VertexId;

use crate::{boundary_path, column_of, RepError};

/// Vertices where `dim T_v(u)` differs from the signed weight entry, per
/// boundary vertex `v`.
pub fn weight_identity_violations(bar: &BarQuiver) -> Result<Vec<(VertexId, VertexId)>, RepError> {
    let mut bad = Vec::new();
    for v in bar.boundary_frozen() {
        let t = boundary_path(bar, &v)?;
        let (col, sign) = column_of(&v, bar.l, bar.m).expect("boundary vertex is a hive vertex");
        for (u, w) in bar.weights.iter() {
            if sign * w[col] != t.dim.get(u) as i64 {
                bad.push((v, *u));
            }
        }
    }
    Ok(bad)
}

/// Solves `B·σ = 0` with the columns `±j` pinned by the path modules and
/// compares the result with the transported weights.
pub fn cross_check_weights(bar: &BarQuiver) -> Result<R2Status, RepError> {
    let mut pinned = BTreeMap::new();
    for v in bar.boundary_frozen() {
        let t = boundary_path(bar, &v)?;
        let (col, sign) = column_of(&v, bar.l, bar.m).expect("boundary vertex is a hive vertex");
        for u in bar.quiver.mutable_vertices() {
            pinned.insert((u, col), sign * t.dim.get(&u) as i64);
        }
    }
    let solved = solve_mutable_weights(&bar.quiver, &bar.weights, &pinned)?;
    Ok(solved.compare(&bar.weights)?)
}
