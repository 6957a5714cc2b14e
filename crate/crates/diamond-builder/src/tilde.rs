use std::collections::BTreeMap;

use quiver_core::{IceQuiver, VertexId, WeightConfig, WeightLayout};
use semiinvariants::vertex_weight;

use crate::canon::{canonical_vertex, hive_points, on_edge};
use crate::hive::CCW_STEPS;
use crate::{check_size, BuildError};

/// Global arrow orientation. `Mirrored` is the opposite quiver; it is kept
/// so the fixture tests can reject it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Chirality {
    #[default]
    Standard,
    Mirrored,
}

/// A glued quiver with its weight configuration and raw-label map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedQuiver {
    pub l: usize,
    pub m: usize,
    pub quiver: IceQuiver,
    pub weights: WeightConfig,
    /// `(n, i, j, dual)` in hive `n ≥ 2` to its canonical vertex.
    pub labels: BTreeMap<(u32, u32, u32, bool), VertexId>,
}

/// `|vertices|` of the glued diamonds, det vertices excluded.
pub fn vertex_count(l: usize, m: usize) -> usize {
    (l - 1) * (l + 2) + (l * l - 1) * (m - 2)
}

/// Whether a canonical hive vertex lies on the frozen right boundary.
pub fn frozen_boundary(v: &VertexId, l: usize, m: usize) -> bool {
    match *v {
        VertexId::Hive { n, i, j, .. } => {
            n as usize == m && if m.is_multiple_of(2) { (i + j) as usize == l } else { i == 0 }
        }
        VertexId::Det { .. } => false,
    }
}

/// Raw `(n, i, j, dual)` label to canonical vertex.
pub(crate) type LabelMap = BTreeMap<(u32, u32, u32, bool), VertexId>;

pub(crate) fn label_map(l: usize, m: usize) -> Result<LabelMap, BuildError> {
    let mut out = BTreeMap::new();
    for n in 2..=m as u32 {
        for d in [false, true] {
            for (i, j) in hive_points(l) {
                out.insert((n, i, j, d), canonical_vertex(n, i, j, d, l, m)?);
            }
        }
    }
    Ok(out)
}

/// Accumulates doubled arrow weights and resolves them into a quiver.
pub(crate) struct ArrowSum {
    doubled: BTreeMap<(VertexId, VertexId), i64>,
}

impl ArrowSum {
    pub(crate) fn new() -> Self {
        ArrowSum { doubled: BTreeMap::new() }
    }

    /// Adds an arrow of weight 1, or ½ when `half`.
    pub(crate) fn add(&mut self, a: VertexId, b: VertexId, half: bool) -> Result<(), BuildError> {
        if a == b {
            return Err(BuildError::Collapse(a));
        }
        let w = if half { 1 } else { 2 };
        if a < b {
            *self.doubled.entry((a, b)).or_default() += w;
        } else {
            *self.doubled.entry((b, a)).or_default() -= w;
        }
        Ok(())
    }

    pub(crate) fn into_quiver(
        self,
        vertices: impl IntoIterator<Item = VertexId>,
        frozen: impl IntoIterator<Item = VertexId>,
    ) -> Result<IceQuiver, BuildError> {
        let mut q = IceQuiver::new(vertices, frozen);
        for ((a, b), w) in self.doubled {
            if w == 0 || (q.is_frozen(&a) && q.is_frozen(&b)) {
                continue;
            }
            if w % 2 != 0 {
                return Err(BuildError::HalfArrow(a, b));
            }
            if w > 0 {
                q.add_arrows(a, b, (w / 2) as u32)?;
            } else {
                q.add_arrows(b, a, (-w / 2) as u32)?;
            }
        }
        Ok(q)
    }
}

pub(crate) fn add_det_arrows(q: &mut IceQuiver, arrows: &[(VertexId, VertexId)]) -> Result<(), BuildError> {
    for &(a, b) in arrows {
        if !(q.is_frozen(&a) && q.is_frozen(&b)) {
            q.add_arrows(a, b, 1)?;
        }
    }
    Ok(())
}

pub(crate) fn weight_config(q: &IceQuiver, l: usize, m: usize) -> Result<WeightConfig, BuildError> {
    let mut w = WeightConfig::new(WeightLayout::new(l, m));
    for v in q.vertices() {
        w.insert(*v, vertex_weight(v, l, m)?)?;
    }
    Ok(w)
}

pub(crate) fn check_config(q: &IceQuiver, w: &WeightConfig) -> Result<(), BuildError> {
    w.check(q).map_err(|e| match e {
        quiver_core::QuiverError::NotAWeightConfig(u) => BuildError::WeightConfigInconsistent(u),
        e => e.into(),
    })
}

/// The lifted quiver: all hives glued with alternating orientation, det
/// vertices attached, and the semi-invariant weights.
pub fn build_tilde(l: usize, m: usize, chirality: Chirality) -> Result<GluedQuiver, BuildError> {
    check_size(l, m)?;
    let labels = label_map(l, m)?;
    let pts = hive_points(l);
    let mut sum = ArrowSum::new();
    for n in 2..=m as u32 {
        let reverse = n % 2 == 0;
        for d in [false, true] {
            for &(i, j) in &pts {
                for (di, dj) in CCW_STEPS {
                    let (ti, tj) = (i as i32 + di, j as i32 + dj);
                    if ti < 0 || tj < 0 || !pts.contains(&(ti as u32, tj as u32)) {
                        continue;
                    }
                    let (ti, tj) = (ti as u32, tj as u32);
                    let a = labels[&(n, i, j, d)];
                    let b = labels[&(n, ti, tj, d)];
                    let half = on_edge(i, j, l).meets(&on_edge(ti, tj, l));
                    if reverse {
                        sum.add(b, a, half)?;
                    } else {
                        sum.add(a, b, half)?;
                    }
                }
            }
        }
    }
    let hive_vertices: Vec<VertexId> = labels.values().copied().collect();
    let dets: Vec<VertexId> = (1..=m as u32).map(VertexId::det).collect();
    let frozen = hive_vertices
        .iter()
        .filter(|v| frozen_boundary(v, l, m))
        .copied()
        .chain(dets.iter().copied())
        .collect::<Vec<_>>();
    let mut q = sum.into_quiver(hive_vertices.into_iter().chain(dets), frozen)?;
    let c = |n: u32, i: u32, j: u32, d: bool| canonical_vertex(n, i, j, d, l, m);
    let lm1 = l as u32 - 1;
    let mut det_arrows = vec![(VertexId::det(1), c(2, 0, lm1, false)?)];
    for n in 2..=m as u32 {
        let dn = VertexId::det(n);
        det_arrows.push((c(n, lm1, 0, false)?, dn));
        for d in [false, true] {
            let target = if n % 2 == 0 { c(n, lm1, 1, d)? } else { c(n, 0, lm1, d)? };
            det_arrows.push((dn, target));
        }
    }
    add_det_arrows(&mut q, &det_arrows)?;
    if chirality == Chirality::Mirrored {
        q = q.reversed();
    }
    let weights = weight_config(&q, l, m)?;
    check_config(&q, &weights)?;
    Ok(GluedQuiver { l, m, quiver: q, weights, labels })
}
