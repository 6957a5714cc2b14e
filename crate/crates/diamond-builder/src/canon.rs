use quiver_core::VertexId;

use crate::BuildError;

/// Points `(i, j)` of a size-`l` hive.
pub fn hive_points(l: usize) -> Vec<(u32, u32)> {
    let l = l as u32;
    let mut out = Vec::new();
    for i in 0..=l {
        for j in 0..=l - i {
            if i + j >= 1 && (i, j) != (l, 0) && (i, j) != (0, l) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Which of the three hive edges a point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edges {
    pub left: bool,
    pub diagonal: bool,
    pub right: bool,
}

impl Edges {
    pub fn meets(&self, other: &Edges) -> bool {
        (self.left && other.left) || (self.diagonal && other.diagonal) || (self.right && other.right)
    }
}

pub fn on_edge(i: u32, j: u32, l: usize) -> Edges {
    Edges { left: i == 0, diagonal: j == 0, right: (i + j) as usize == l }
}

/// Canonical representative of the raw label `(i, j)` in hive `n`.
///
/// Rules, in order: diagonal points are plain; `i = 0` in an even hive moves
/// to index `n - 1` (both copies merge at index 1); `i + j = l` in an odd
/// hive `n > 1` moves to `n - 1`. A diagonal label at index 1 names the
/// shared left-edge vertex.
pub fn canonical_vertex(n: u32, i: u32, j: u32, dual: bool, l: usize, m: usize) -> Result<VertexId, BuildError> {
    let lu = l as u32;
    let bad = || BuildError::OutOfRange { n, i, j, l, m };
    if n == 0 || n as usize > m || i + j == 0 || i + j > lu || (i, j) == (lu, 0) || (i, j) == (0, lu) {
        return Err(bad());
    }
    if n == 1 {
        return match (i, j) {
            (0, j) => Ok(VertexId::plain(1, 0, j)),
            (i, 0) => Ok(VertexId::plain(1, 0, i)),
            _ => Err(bad()),
        };
    }
    let (mut n, mut dual) = (n, dual);
    if j == 0 {
        dual = false;
    }
    if i == 0 && n % 2 == 0 {
        n -= 1;
        if n == 1 {
            dual = false;
        }
    }
    if i + j == lu && n % 2 == 1 && n > 1 {
        n -= 1;
    }
    Ok(VertexId::hive(n, i, j, dual))
}
