use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{QuiverError, VertexId};

/// A quiver with frozen vertices, stored as an arrow multiset.
///
/// Opposite arrows are cancelled on insertion, so the stored multiset never
/// contains a 2-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "QuiverDoc", try_from = "QuiverDoc")]
pub struct IceQuiver {
    vertices: Vec<VertexId>,
    frozen: BTreeSet<VertexId>,
    arrows: BTreeMap<(VertexId, VertexId), u32>,
}

impl IceQuiver {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>, frozen: impl IntoIterator<Item = VertexId>) -> Self {
        let set: BTreeSet<VertexId> = vertices.into_iter().collect();
        let frozen: BTreeSet<VertexId> = frozen.into_iter().collect();
        let mut vertices: BTreeSet<VertexId> = set;
        vertices.extend(frozen.iter().copied());
        IceQuiver { vertices: vertices.into_iter().collect(), frozen, arrows: BTreeMap::new() }
    }

    /// Adds `mult` arrows `a -> b`, cancelling against existing `b -> a`.
    pub fn add_arrows(&mut self, a: VertexId, b: VertexId, mult: u32) -> Result<(), QuiverError> {
        if !self.contains(&a) {
            return Err(QuiverError::UnknownVertex(a));
        }
        if !self.contains(&b) {
            return Err(QuiverError::UnknownVertex(b));
        }
        if a == b {
            return Err(QuiverError::Loop(a));
        }
        self.add_unchecked(a, b, mult as i64);
        Ok(())
    }

    fn add_unchecked(&mut self, a: VertexId, b: VertexId, mult: i64) {
        if mult == 0 {
            return;
        }
        let back = self.arrows.get(&(b, a)).copied().unwrap_or(0) as i64;
        let fwd = self.arrows.get(&(a, b)).copied().unwrap_or(0) as i64;
        let net = fwd + mult - back;
        self.arrows.remove(&(a, b));
        self.arrows.remove(&(b, a));
        match net.cmp(&0) {
            std::cmp::Ordering::Greater => {
                self.arrows.insert((a, b), net as u32);
            }
            std::cmp::Ordering::Less => {
                self.arrows.insert((b, a), (-net) as u32);
            }
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn frozen(&self) -> &BTreeSet<VertexId> {
        &self.frozen
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn is_frozen(&self, v: &VertexId) -> bool {
        self.frozen.contains(v)
    }

    pub fn mutable_vertices(&self) -> Vec<VertexId> {
        self.vertices.iter().filter(|v| !self.frozen.contains(v)).copied().collect()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.arrows.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn multiplicity(&self, a: &VertexId, b: &VertexId) -> u32 {
        self.arrows.get(&(*a, *b)).copied().unwrap_or(0)
    }

    pub fn in_arrows(&self, u: &VertexId) -> Vec<(VertexId, u32)> {
        self.arrows().filter(|(_, b, _)| b == u).map(|(a, _, c)| (a, c)).collect()
    }

    pub fn out_arrows(&self, u: &VertexId) -> Vec<(VertexId, u32)> {
        self.arrows().filter(|(a, _, _)| a == u).map(|(_, b, c)| (b, c)).collect()
    }

    /// Same quiver with every arrow between two frozen vertices removed.
    pub fn without_frozen_arrows(&self) -> IceQuiver {
        let mut q = self.clone();
        q.arrows.retain(|(a, b), _| !(self.frozen.contains(a) && self.frozen.contains(b)));
        q
    }

    /// Equality ignoring arrows between frozen vertices.
    pub fn eq_up_to_frozen(&self, other: &IceQuiver) -> bool {
        self.vertices == other.vertices
            && self.frozen == other.frozen
            && self.without_frozen_arrows().arrows == other.without_frozen_arrows().arrows
    }

    /// The opposite quiver.
    pub fn reversed(&self) -> IceQuiver {
        let mut q = self.clone();
        q.arrows = self.arrows.iter().map(|(&(a, b), &c)| ((b, a), c)).collect();
        q
    }

    /// Checks the structural invariants (no loops, no 2-cycles at mutable vertices).
    pub fn validate(&self) -> Result<(), QuiverError> {
        for &(a, b) in self.arrows.keys() {
            if a == b {
                return Err(QuiverError::Loop(a));
            }
            if self.arrows.contains_key(&(b, a)) && !(self.frozen.contains(&a) && self.frozen.contains(&b)) {
                return Err(QuiverError::TwoCycle(a, b));
            }
        }
        Ok(())
    }

    /// Quiver mutation at a mutable vertex.
    pub fn mutate(&self, u: &VertexId) -> Result<IceQuiver, QuiverError> {
        if !self.contains(u) {
            return Err(QuiverError::UnknownVertex(*u));
        }
        if self.frozen.contains(u) {
            return Err(QuiverError::MutationAtFrozen(*u));
        }
        let ins = self.in_arrows(u);
        let outs = self.out_arrows(u);
        let mut q = IceQuiver { vertices: self.vertices.clone(), frozen: self.frozen.clone(), arrows: BTreeMap::new() };
        for (&(a, b), &c) in &self.arrows {
            if a == *u || b == *u {
                q.arrows.insert((b, a), c);
            } else {
                q.arrows.insert((a, b), c);
            }
        }
        for &(a, ca) in &ins {
            for &(b, cb) in &outs {
                if self.frozen.contains(&a) && self.frozen.contains(&b) {
                    continue;
                }
                q.add_unchecked(a, b, (ca * cb) as i64);
            }
        }
        Ok(q)
    }

    /// Applies a sequence of mutations.
    pub fn mutate_seq<'a>(&self, seq: impl IntoIterator<Item = &'a VertexId>) -> Result<IceQuiver, QuiverError> {
        let mut q = self.clone();
        for u in seq {
            q = q.mutate(u)?;
        }
        Ok(q)
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverDoc {
    vertices: Vec<VertexId>,
    frozen: Vec<VertexId>,
    arrows: Vec<(VertexId, VertexId, String)>,
}

impl From<IceQuiver> for QuiverDoc {
    fn from(q: IceQuiver) -> Self {
        QuiverDoc {
            arrows: q.arrows().map(|(a, b, c)| (a, b, c.to_string())).collect(),
            frozen: q.frozen.iter().copied().collect(),
            vertices: q.vertices,
        }
    }
}

impl TryFrom<QuiverDoc> for IceQuiver {
    type Error = String;

    fn try_from(d: QuiverDoc) -> Result<Self, Self::Error> {
        let mut q = IceQuiver::new(d.vertices, d.frozen);
        for (a, b, c) in d.arrows {
            let c: u32 = c.parse().map_err(|_| format!("bad multiplicity {c:?}"))?;
            q.add_arrows(a, b, c).map_err(|e| e.to_string())?;
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(k: u32) -> VertexId {
        VertexId::plain(1, k, 0)
    }

    fn path3() -> IceQuiver {
        let mut q = IceQuiver::new([v(1), v(2), v(3)], []);
        q.add_arrows(v(1), v(2), 1).unwrap();
        q.add_arrows(v(2), v(3), 1).unwrap();
        q
    }

    #[test]
    fn mutate_middle_of_path_gives_three_cycle() {
        let q = path3().mutate(&v(2)).unwrap();
        let arrows: Vec<_> = q.arrows().collect();
        assert_eq!(arrows.len(), 3);
        assert_eq!(q.multiplicity(&v(2), &v(1)), 1);
        assert_eq!(q.multiplicity(&v(3), &v(2)), 1);
        assert_eq!(q.multiplicity(&v(1), &v(3)), 1);
    }

    #[test]
    fn mutate_source_of_single_arrow() {
        let mut q = IceQuiver::new([v(1), v(2)], []);
        q.add_arrows(v(1), v(2), 1).unwrap();
        let p = q.mutate(&v(1)).unwrap();
        assert_eq!(p.arrows().collect::<Vec<_>>(), vec![(v(2), v(1), 1)]);
    }

    #[test]
    fn mutation_is_involutive() {
        let q = path3();
        for k in 1..=3 {
            assert_eq!(q.mutate(&v(k)).unwrap().mutate(&v(k)).unwrap(), q);
        }
    }

    #[test]
    fn frozen_and_unknown_are_rejected() {
        let mut q = IceQuiver::new([v(1), v(2)], [v(2)]);
        q.add_arrows(v(1), v(2), 1).unwrap();
        assert_eq!(q.mutate(&v(2)), Err(QuiverError::MutationAtFrozen(v(2))));
        assert_eq!(q.mutate(&v(7)), Err(QuiverError::UnknownVertex(v(7))));
    }

    #[test]
    fn no_arrows_created_between_frozen() {
        let (a, u, b) = (v(1), v(2), v(3));
        let mut q = IceQuiver::new([a, u, b], [a, b]);
        q.add_arrows(a, u, 1).unwrap();
        q.add_arrows(u, b, 1).unwrap();
        let p = q.mutate(&u).unwrap();
        assert_eq!(p.multiplicity(&a, &b), 0);
        assert_eq!(p.arrow_count(), 2);
    }

    #[test]
    fn opposite_arrows_cancel() {
        let mut q = IceQuiver::new([v(1), v(2)], []);
        q.add_arrows(v(1), v(2), 3).unwrap();
        q.add_arrows(v(2), v(1), 1).unwrap();
        assert_eq!(q.multiplicity(&v(1), &v(2)), 2);
        assert_eq!(q.multiplicity(&v(2), &v(1)), 0);
        assert!(q.validate().is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let q = path3().mutate(&v(2)).unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert!(s.contains("\"1\""));
        let back: IceQuiver = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }
}
