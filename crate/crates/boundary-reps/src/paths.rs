use diamond_builder::{canonical_vertex, ArrowType, BarQuiver};
use quiver_core::{VertexId, WeightLayout};

use crate::{PathModule, RepError};

/// Which end of a diamond diagonal feeds the det vertex in `T_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DiagonalOrientation {
    /// Follow the diagonal arrows of the twisted quiver.
    #[default]
    Socle,
    /// The reversed chain; kept so the oracle can reject it.
    Opposite,
}

/// Weight coordinate matching `dim T_v` and its sign: `-σ(-j)` for plain
/// `v`, `σ(j)` for dual `v`, where `j` is the second coordinate of `v`.
pub fn column_of(v: &VertexId, l: usize, m: usize) -> Option<(usize, i64)> {
    let VertexId::Hive { j, dual, .. } = *v else { return None };
    if j == 0 || j as usize > l {
        return None;
    }
    let lay = WeightLayout::new(l, m);
    Some(if dual { (lay.pos(j as usize), 1) } else { (lay.neg(j as usize), -1) })
}

/// First vertex of the walk for `v`: the opposite copy for odd `m`, the
/// transposed label for even `m`.
pub fn path_start(v: &VertexId, m: usize) -> Option<VertexId> {
    let VertexId::Hive { n, i, j, dual } = *v else { return None };
    Some(if m % 2 == 1 { VertexId::hive(n, 0, j, !dual) } else { VertexId::hive(n, j, i, dual) })
}

fn step(
    bar: &BarQuiver,
    u: &VertexId,
    kind: &'static str,
    keep: impl Fn(&diamond_builder::Contribution) -> bool,
) -> Result<VertexId, RepError> {
    let next = bar.successors(u, keep);
    match next.len() {
        1 => Ok(next[0]),
        0 => Err(RepError::ArrowMissing { from: *u, kind }),
        count => Err(RepError::Ambiguous { from: *u, kind, count }),
    }
}

/// The path module `T_v` of a frozen boundary vertex.
///
/// From the start vertex the walk follows the unique `B` arrow (`C` for a
/// dual `v`) until it reaches the left-edge vertex `(0, j, 1)`, then the
/// unique `A` arrow on `v`'s side until it arrives at `v`.
pub fn boundary_path(bar: &BarQuiver, v: &VertexId) -> Result<PathModule, RepError> {
    if !bar.boundary_frozen().contains(v) {
        return Err(RepError::NotBoundaryFrozen(*v));
    }
    let VertexId::Hive { j, dual, .. } = *v else { unreachable!() };
    let start = path_start(v, bar.m).expect("hive vertex");
    let turn = canonical_vertex(2, 0, j, false, bar.l, bar.m)?;
    let limit = 4 * bar.quiver.vertices().len();
    let (first, name) = if dual { (ArrowType::C, "C") } else { (ArrowType::B, "B") };
    let mut path = vec![start];
    let mut u = start;
    while u != turn {
        u = step(bar, &u, name, |c| c.kind == first)?;
        path.push(u);
        if path.len() > limit {
            return Err(RepError::Runaway(start));
        }
    }
    while u != *v || path.len() == 1 {
        u = step(bar, &u, "A", |c| c.kind == ArrowType::A && c.dual == dual)?;
        path.push(u);
        if path.len() > limit {
            return Err(RepError::Runaway(start));
        }
    }
    Ok(PathModule::new(path))
}

/// The diagonal module `T_n`: simple at `det1` for `n = 1`, otherwise the
/// diagonal chain of diamond `n` ending at `det n`.
pub fn diagonal_module(bar: &BarQuiver, n: u32, orientation: DiagonalOrientation) -> Result<PathModule, RepError> {
    if n == 0 || n as usize > bar.m {
        return Err(RepError::IndexOutOfRange { n, m: bar.m });
    }
    if n == 1 {
        return Ok(PathModule::new(vec![VertexId::det(1)]));
    }
    let mut chain: Vec<VertexId> = (1..bar.l as u32).map(|i| VertexId::plain(n, i, 0)).collect();
    let reverse = (n % 2 == 1) != (orientation == DiagonalOrientation::Opposite);
    if reverse {
        chain.reverse();
    }
    chain.push(VertexId::det(n));
    Ok(PathModule::new(chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use diamond_builder::{build_bar, Chirality};

    #[test]
    fn start_vertices() {
        let v = VertexId::plain(3, 0, 2);
        assert_eq!(path_start(&v, 3), Some(VertexId::hive(3, 0, 2, true)));
        let v = VertexId::hive(4, 1, 2, true);
        assert_eq!(path_start(&v, 4), Some(VertexId::hive(4, 2, 1, true)));
    }

    #[test]
    fn columns() {
        assert_eq!(column_of(&VertexId::plain(3, 0, 2), 3, 3), Some((1, -1)));
        assert_eq!(column_of(&VertexId::hive(3, 0, 2, true), 3, 3), Some((4, 1)));
        assert_eq!(column_of(&VertexId::det(3), 3, 3), None);
    }

    #[test]
    fn rejects_non_boundary() {
        let bar = build_bar(3, 3, Chirality::Standard).unwrap();
        assert_eq!(
            boundary_path(&bar, &VertexId::plain(2, 1, 1)),
            Err(RepError::NotBoundaryFrozen(VertexId::plain(2, 1, 1)))
        );
        assert!(diagonal_module(&bar, 4, DiagonalOrientation::Socle).is_err());
    }

    #[test]
    fn diagonal_sizes() {
        let bar = build_bar(3, 3, Chirality::Standard).unwrap();
        assert_eq!(diagonal_module(&bar, 1, DiagonalOrientation::Socle).unwrap().dim.total(), 1);
        for n in 2..=3 {
            let t = diagonal_module(&bar, n, DiagonalOrientation::Socle).unwrap();
            assert_eq!(t.dim.total(), 3);
            assert_eq!(t.submodule_dims(false).len(), 3);
            assert!(t.missing_arrows(&bar.quiver).is_empty());
            let o = diagonal_module(&bar, n, DiagonalOrientation::Opposite).unwrap();
            assert!(!o.missing_arrows(&bar.quiver).is_empty());
        }
    }
}
