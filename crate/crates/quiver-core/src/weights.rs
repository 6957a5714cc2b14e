use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{IceQuiver, QuiverError, VertexId};

/// Coordinate layout `(σ(-1..-l), σ(1..l), λ(1..m))` of a weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightLayout {
    pub l: usize,
    pub m: usize,
}

impl WeightLayout {
    pub fn new(l: usize, m: usize) -> Self {
        WeightLayout { l, m }
    }

    pub fn len(&self) -> usize {
        2 * self.l + self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of σ(-i), for i in 1..=l.
    pub fn neg(&self, i: usize) -> usize {
        debug_assert!((1..=self.l).contains(&i));
        i - 1
    }

    /// Index of σ(i), for i in 1..=l.
    pub fn pos(&self, i: usize) -> usize {
        debug_assert!((1..=self.l).contains(&i));
        self.l + i - 1
    }

    /// Index of λ(k), for k in 1..=m.
    pub fn lambda(&self, k: usize) -> usize {
        debug_assert!((1..=self.m).contains(&k));
        2 * self.l + k - 1
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.len()]
    }
}

/// Integer weight vectors attached to the vertices of a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WeightDoc", try_from = "WeightDoc")]
pub struct WeightConfig {
    layout: WeightLayout,
    map: BTreeMap<VertexId, Vec<i64>>,
}

impl WeightConfig {
    pub fn new(layout: WeightLayout) -> Self {
        WeightConfig { layout, map: BTreeMap::new() }
    }

    pub fn layout(&self) -> WeightLayout {
        self.layout
    }

    pub fn insert(&mut self, v: VertexId, w: Vec<i64>) -> Result<(), QuiverError> {
        if w.len() != self.layout.len() {
            return Err(QuiverError::WeightLength { vertex: v, got: w.len(), expected: self.layout.len() });
        }
        self.map.insert(v, w);
        Ok(())
    }

    pub fn get(&self, v: &VertexId) -> Option<&[i64]> {
        self.map.get(v).map(|w| w.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &Vec<i64>)> {
        self.map.iter()
    }

    /// In-sum minus out-sum of weights at `u`.
    pub fn imbalance(&self, q: &IceQuiver, u: &VertexId) -> Result<Vec<i64>, QuiverError> {
        let mut s = self.layout.zero();
        for (a, c) in q.in_arrows(u) {
            let w = self.get(&a).ok_or(QuiverError::UnknownVertex(a))?;
            for (x, y) in s.iter_mut().zip(w) {
                *x += c as i64 * y;
            }
        }
        for (b, c) in q.out_arrows(u) {
            let w = self.get(&b).ok_or(QuiverError::UnknownVertex(b))?;
            for (x, y) in s.iter_mut().zip(w) {
                *x -= c as i64 * y;
            }
        }
        Ok(s)
    }

    /// Verifies `B·σ = 0` and that every vertex carries a weight.
    pub fn check(&self, q: &IceQuiver) -> Result<(), QuiverError> {
        for v in q.vertices() {
            if !self.map.contains_key(v) {
                return Err(QuiverError::UnknownVertex(*v));
            }
        }
        for u in q.mutable_vertices() {
            if self.imbalance(q, &u)?.iter().any(|&x| x != 0) {
                return Err(QuiverError::NotAWeightConfig(u));
            }
        }
        Ok(())
    }
}

/// Weight transport under mutation at `u`: the new weight of `u` is the
/// in-sum minus the old weight.
///
/// With `strict` the configuration is validated against `q` first.
pub fn mutate_weights(
    q: &IceQuiver,
    sigma: &WeightConfig,
    u: &VertexId,
    strict: bool,
) -> Result<WeightConfig, QuiverError> {
    if !q.contains(u) {
        return Err(QuiverError::UnknownVertex(*u));
    }
    if q.is_frozen(u) {
        return Err(QuiverError::MutationAtFrozen(*u));
    }
    if strict {
        sigma.check(q)?;
    }
    let mut new = sigma.layout.zero();
    for (a, c) in q.in_arrows(u) {
        let w = sigma.get(&a).ok_or(QuiverError::UnknownVertex(a))?;
        for (x, y) in new.iter_mut().zip(w) {
            *x += c as i64 * y;
        }
    }
    let old = sigma.get(u).ok_or(QuiverError::UnknownVertex(*u))?;
    for (x, y) in new.iter_mut().zip(old) {
        *x -= y;
    }
    let mut out = sigma.clone();
    out.map.insert(*u, new);
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct WeightDoc {
    l: String,
    m: String,
    weights: BTreeMap<VertexId, Vec<String>>,
}

impl From<WeightConfig> for WeightDoc {
    fn from(w: WeightConfig) -> Self {
        WeightDoc {
            l: w.layout.l.to_string(),
            m: w.layout.m.to_string(),
            weights: w.map.into_iter().map(|(v, x)| (v, x.iter().map(|e| e.to_string()).collect())).collect(),
        }
    }
}

impl TryFrom<WeightDoc> for WeightConfig {
    type Error = String;

    fn try_from(d: WeightDoc) -> Result<Self, Self::Error> {
        let l = d.l.parse().map_err(|_| format!("bad l {:?}", d.l))?;
        let m = d.m.parse().map_err(|_| format!("bad m {:?}", d.m))?;
        let mut w = WeightConfig::new(WeightLayout::new(l, m));
        for (v, xs) in d.weights {
            let xs: Vec<i64> =
                xs.iter().map(|x| x.parse().map_err(|_| format!("bad integer {x:?}"))).collect::<Result<_, _>>()?;
            w.insert(v, xs).map_err(|e| e.to_string())?;
        }
        Ok(w)
    }
}
