use std::collections::BTreeMap;

use quiver_core::{IceQuiver, VertexId};

/// Nonnegative integer vector indexed by vertices, with finite support.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(pub BTreeMap<VertexId, u64>);

impl DimVector {
    pub fn unit(v: VertexId) -> Self {
        DimVector(BTreeMap::from([(v, 1)]))
    }

    pub fn get(&self, v: &VertexId) -> u64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &VertexId> {
        self.0.iter().filter(|(_, &c)| c > 0).map(|(v, _)| v)
    }

    /// Dense form in the given vertex order.
    pub fn dense(&self, order: &[VertexId]) -> Vec<i64> {
        order.iter().map(|v| self.get(v) as i64).collect()
    }
}

/// Uniserial module supported on a walk `v_0 → … → v_t`; the socle is `v_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathModule {
    pub path: Vec<VertexId>,
    pub dim: DimVector,
}

impl PathModule {
    pub fn new(path: Vec<VertexId>) -> Self {
        let dim = Self::count(&path);
        PathModule { path, dim }
    }

    fn count(path: &[VertexId]) -> DimVector {
        let mut d = BTreeMap::new();
        for v in path {
            *d.entry(*v).or_insert(0) += 1;
        }
        DimVector(d)
    }

    pub fn socle(&self) -> Option<&VertexId> {
        self.path.last()
    }

    /// Consecutive pairs that are not arrows of `q`.
    pub fn missing_arrows(&self, q: &IceQuiver) -> Vec<(VertexId, VertexId)> {
        self.path.windows(2).filter(|w| q.multiplicity(&w[0], &w[1]) == 0).map(|w| (w[0], w[1])).collect()
    }

    /// Dimension vectors of the nonzero submodules, smallest first: the
    /// visit counts of the suffixes `v_k … v_t` for `k = t` down to `1`
    /// (`strict`) or `0`.
    pub fn submodule_dims(&self, strict: bool) -> Vec<DimVector> {
        let t = self.path.len();
        let lowest = if strict { 1 } else { 0 };
        (lowest..t).rev().map(|k| Self::count(&self.path[k..])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(k: u32) -> VertexId {
        VertexId::plain(2, k, 0)
    }

    #[test]
    fn suffix_chain() {
        let p = PathModule::new(vec![v(1), v(2), v(1), v(3)]);
        assert_eq!(p.dim.get(&v(1)), 2);
        let s = p.submodule_dims(true);
        assert_eq!(s.len(), 3);
        assert_eq!(s[0], DimVector::unit(v(3)));
        assert_eq!(s.last().unwrap().total(), 3);
        assert_eq!(p.submodule_dims(false).len(), 4);
    }

    #[test]
    fn simple_module() {
        let p = PathModule::new(vec![VertexId::det(1)]);
        assert_eq!(p.submodule_dims(false), vec![DimVector::unit(VertexId::det(1))]);
        assert!(p.submodule_dims(true).is_empty());
    }
}
