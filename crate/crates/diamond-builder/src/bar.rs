use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use quiver_core::linalg::{solve, Solution};
use quiver_core::{mutate_weights, BMatrix, IceQuiver, VertexId, WeightConfig};

use crate::canon::{canonical_vertex, hive_points, on_edge};
use crate::tilde::{add_det_arrows, check_config, frozen_boundary, label_map, ArrowSum};
use crate::{build_tilde, check_size, full_twist, BuildError, Chirality};

/// Arrow classes of the twisted quiver: `A` runs east in every hive, `B`
/// and `C` are the other two directions, assigned so each unit triangle
/// carries one of each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowType {
    A,
    B,
    C,
}

/// One hive's share of an arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Contribution {
    pub kind: ArrowType,
    pub diamond: u32,
    pub dual: bool,
}

pub type Typing = BTreeMap<(VertexId, VertexId), Vec<Contribution>>;

/// Agreement between transported and solved weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum R2Status {
    Agrees,
    /// Every solved entry agrees, but `undetermined` entries were left free by
    /// the linear system; the transported weights stand.
    Underdetermined {
        undetermined: usize,
    },
}

/// The twisted quiver with weights and arrow typing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarQuiver {
    pub l: usize,
    pub m: usize,
    pub chirality: Chirality,
    pub quiver: IceQuiver,
    pub weights: WeightConfig,
    pub typing: Typing,
    pub r2: R2Status,
}

impl BarQuiver {
    /// Distinct types carried by the arrow `a → b`.
    pub fn types(&self, a: &VertexId, b: &VertexId) -> Vec<ArrowType> {
        let mut t: Vec<ArrowType> =
            self.typing.get(&(*a, *b)).map(|cs| cs.iter().map(|c| c.kind).collect()).unwrap_or_default();
        t.sort();
        t.dedup();
        t
    }

    /// Out-neighbours of `u` along arrows having a contribution accepted by `keep`.
    pub fn successors(&self, u: &VertexId, keep: impl Fn(&Contribution) -> bool) -> Vec<VertexId> {
        self.quiver
            .out_arrows(u)
            .into_iter()
            .filter(|(b, _)| self.typing.get(&(*u, *b)).is_some_and(|cs| cs.iter().any(&keep)))
            .map(|(b, _)| b)
            .collect()
    }

    /// Frozen hive vertices (the right boundary of the last diamond).
    pub fn boundary_frozen(&self) -> Vec<VertexId> {
        self.quiver.frozen().iter().filter(|v| !v.is_det()).copied().collect()
    }
}

const STEPS: [(i32, i32); 3] = [(0, -1), (1, 0), (-1, 1)];

fn arrow_type(n: u32, dual: bool, step: (i32, i32)) -> ArrowType {
    if step == (1, 0) {
        return ArrowType::A;
    }
    let first = n.is_multiple_of(2) != dual;
    match (step == (0, -1), first) {
        (true, true) | (false, false) => ArrowType::B,
        _ => ArrowType::C,
    }
}

/// Position of the raw label `(i, j)` in hive `n`. Even hives are
/// untouched; odd hives are rotated, with the diagonal reversed.
fn position(n: u32, i: u32, j: u32, l: usize) -> (u32, u32) {
    let l = l as u32;
    if n.is_multiple_of(2) {
        (i, j)
    } else if j == 0 {
        (l - i, 0)
    } else if i + j == l {
        (0, i)
    } else if i == 0 {
        (j, l - j)
    } else {
        (l - i - j, i)
    }
}

/// The twisted quiver built directly: every hive carries the same pattern
/// in position space, and odd hives are relabelled.
pub fn direct_bar(l: usize, m: usize, chirality: Chirality) -> Result<(IceQuiver, Typing), BuildError> {
    check_size(l, m)?;
    let labels = label_map(l, m)?;
    let pts = hive_points(l);
    let mut sum = ArrowSum::new();
    let mut typing: Typing = BTreeMap::new();
    for n in 2..=m as u32 {
        for d in [false, true] {
            let at: BTreeMap<(u32, u32), (u32, u32)> =
                pts.iter().map(|&(i, j)| (position(n, i, j, l), (i, j))).collect();
            for (&p, &(i, j)) in &at {
                for step in STEPS {
                    let t = (p.0 as i32 + step.0, p.1 as i32 + step.1);
                    if t.0 < 0 || t.1 < 0 {
                        continue;
                    }
                    let Some(&(ti, tj)) = at.get(&(t.0 as u32, t.1 as u32)) else { continue };
                    let a = labels[&(n, i, j, d)];
                    let b = labels[&(n, ti, tj, d)];
                    sum.add(a, b, on_edge(i, j, l).meets(&on_edge(ti, tj, l)))?;
                    let kind = arrow_type(n, d, step);
                    typing.entry((a, b)).or_default().push(Contribution { kind, diamond: n, dual: d });
                }
            }
        }
    }
    let hive_vertices: Vec<VertexId> = labels.values().copied().collect();
    let dets: Vec<VertexId> = (1..=m as u32).map(VertexId::det).collect();
    let frozen: Vec<VertexId> =
        hive_vertices.iter().filter(|v| frozen_boundary(v, l, m)).copied().chain(dets.iter().copied()).collect();
    let mut q = sum.into_quiver(hive_vertices.into_iter().chain(dets), frozen)?;

    let c = |n: u32, i: u32, j: u32, d: bool| canonical_vertex(n, i, j, d, l, m);
    let lm1 = l as u32 - 1;
    let d1 = VertexId::det(1);
    let e1 = c(2, 0, lm1, false)?;
    let mut det_arrows = vec![(d1, e1)];
    for (kind, dual) in [(ArrowType::B, false), (ArrowType::C, true)] {
        typing.entry((d1, e1)).or_default().push(Contribution { kind, diamond: 1, dual });
    }
    for n in 2..=m as u32 {
        let dn = VertexId::det(n);
        let feed = if n % 2 == 0 { c(n, lm1, 0, false)? } else { c(n, 1, 0, false)? };
        det_arrows.push((feed, dn));
        for dual in [false, true] {
            typing.entry((feed, dn)).or_default().push(Contribution { kind: ArrowType::A, diamond: n, dual });
            let target = if n % 2 == 0 { c(n, lm1, 1, dual)? } else { c(n, 0, lm1, dual)? };
            det_arrows.push((dn, target));
            let kind = arrow_type(n, dual, (-1, 1));
            typing.entry((dn, target)).or_default().push(Contribution { kind, diamond: n, dual });
        }
    }
    add_det_arrows(&mut q, &det_arrows)?;
    typing.retain(|(a, b), _| q.multiplicity(a, b) > 0);
    if chirality == Chirality::Mirrored {
        q = q.reversed();
        typing = typing.into_iter().map(|((a, b), c)| ((b, a), c)).collect();
    }
    Ok((q, typing))
}

/// Weights of the mutable vertices solved from `B·σ = 0`, given the frozen
/// weights and optionally some pinned entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSolve {
    /// Per mutable vertex, the solved coordinate values (`None` if free).
    pub values: BTreeMap<VertexId, Vec<Option<i64>>>,
    /// Coordinates whose system had no (integer) solution.
    pub inconsistent: Vec<usize>,
}

impl WeightSolve {
    pub fn undetermined(&self) -> usize {
        self.values.values().flatten().filter(|x| x.is_none()).count()
    }

    /// Compares against a reference configuration.
    pub fn compare(&self, reference: &WeightConfig) -> Result<R2Status, BuildError> {
        for (v, col) in &self.values {
            let r = reference.get(v).ok_or(quiver_core::QuiverError::UnknownVertex(*v))?;
            if col.iter().zip(r).any(|(x, y)| x.is_some_and(|x| x != *y)) {
                return Err(BuildError::WeightRoutesDisagree(*v));
            }
        }
        if let Some(&c) = self.inconsistent.first() {
            let v = self.values.keys().next().copied().unwrap_or(VertexId::det(c as u32));
            return Err(BuildError::WeightRoutesDisagree(v));
        }
        Ok(match self.undetermined() {
            0 => R2Status::Agrees,
            k => R2Status::Underdetermined { undetermined: k },
        })
    }
}

/// Solves `B·σ = 0` coordinate by coordinate for the mutable rows.
///
/// `known` supplies the frozen weights; `pinned` fixes individual
/// `(vertex, coordinate)` entries of mutable vertices.
pub fn solve_mutable_weights(
    q: &IceQuiver,
    known: &WeightConfig,
    pinned: &BTreeMap<(VertexId, usize), i64>,
) -> Result<WeightSolve, BuildError> {
    let b = BMatrix::of(q);
    let mutable = q.mutable_vertices();
    let len = known.layout().len();
    let mut values: BTreeMap<VertexId, Vec<Option<i64>>> = mutable.iter().map(|v| (*v, vec![None; len])).collect();
    let mut inconsistent = Vec::new();
    for c in 0..len {
        let unknown: Vec<VertexId> = mutable.iter().filter(|v| !pinned.contains_key(&(**v, c))).copied().collect();
        let mut rows = Vec::with_capacity(mutable.len());
        let mut rhs = Vec::with_capacity(mutable.len());
        for (r, _) in mutable.iter().enumerate() {
            let mut row = vec![0i64; unknown.len()];
            let mut s = 0i64;
            for (k, v) in b.cols.iter().enumerate() {
                let e = b.entries[r][k];
                if e == 0 {
                    continue;
                }
                if let Some(p) = unknown.iter().position(|u| u == v) {
                    row[p] = e;
                } else if let Some(&x) = pinned.get(&(*v, c)) {
                    s -= e * x;
                } else {
                    let w = known.get(v).ok_or(quiver_core::QuiverError::UnknownVertex(*v))?;
                    s -= e * w[c];
                }
            }
            rows.push(row);
            rhs.push(s);
        }
        for v in &mutable {
            if let Some(&x) = pinned.get(&(*v, c)) {
                values.get_mut(v).expect("mutable")[c] = Some(x);
            }
        }
        match solve(&rows, &rhs) {
            Solution::Inconsistent => inconsistent.push(c),
            Solution::Solved(xs) => {
                for (v, x) in unknown.iter().zip(xs) {
                    let Some(x) = x else { continue };
                    if !x.is_integer() {
                        inconsistent.push(c);
                        continue;
                    }
                    values.get_mut(v).expect("mutable")[c] = x.to_integer().to_i64();
                }
            }
        }
    }
    inconsistent.dedup();
    Ok(WeightSolve { values, inconsistent })
}

/// The twisted quiver: the lifted quiver mutated along the twist words of
/// all odd diamonds, with weights transported along the way.
///
/// The result must coincide with [`direct_bar`]; the transported weights
/// are then cross-checked against a direct solve of `B·σ = 0`.
pub fn build_bar(l: usize, m: usize, chirality: Chirality) -> Result<BarQuiver, BuildError> {
    let tilde = build_tilde(l, m, chirality)?;
    let mut q = tilde.quiver;
    let mut w = tilde.weights;
    for u in &full_twist(l, m)? {
        w = mutate_weights(&q, &w, u, false)?;
        q = q.mutate(u)?;
    }
    check_config(&q, &w)?;
    let (direct, typing) = direct_bar(l, m, chirality)?;
    if !q.eq_up_to_frozen(&direct) {
        return Err(BuildError::TwistMismatch);
    }
    let r2 = solve_mutable_weights(&direct, &w, &BTreeMap::new())?.compare(&w)?;
    Ok(BarQuiver { l, m, chirality, quiver: direct, weights: w, typing, r2 })
}
