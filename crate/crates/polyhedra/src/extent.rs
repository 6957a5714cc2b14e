use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use quiver_core::linalg::{integer_kernel, rref};
use quiver_core::VertexId;

use crate::lp::{feasible, minimize, Side};
use crate::{Cone, PolyError};

/// Range of a coordinate over a rational fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extent {
    Infeasible,
    Bounded {
        lo: BigRational,
        hi: BigRational,
    },
    /// At least one side is unbounded; `None` marks the open side.
    Unbounded {
        lo: Option<BigRational>,
        hi: Option<BigRational>,
    },
}

impl Extent {
    /// Integers in the range, if it is bounded.
    pub fn integer_range(&self) -> Option<(BigInt, BigInt)> {
        match self {
            Extent::Bounded { lo, hi } => Some((lo.ceil().to_integer(), hi.floor().to_integer())),
            _ => None,
        }
    }
}

/// The fibre `{g : grading·g = θ, fixed prefix}` as `g = g0 + Σ z_t k_t`
/// with the facet system `A z ≥ b` scaled to integers.
pub(crate) struct Section {
    pub g0: Vec<BigRational>,
    pub kernel: Vec<Vec<BigInt>>,
    pub a: Vec<Vec<i64>>,
    /// `b · scale`.
    pub b: Vec<BigInt>,
    pub scale: BigInt,
}

pub(crate) fn check_theta(cone: &Cone, theta: &[i64]) -> Result<(), PolyError> {
    if theta.len() != cone.weight_len() {
        return Err(PolyError::LengthMismatch { got: theta.len(), expected: cone.weight_len() });
    }
    Ok(())
}

pub(crate) fn section(cone: &Cone, theta: &[i64], fixed: &[i64]) -> Option<Section> {
    let n = cone.dim();
    let mut rows = cone.equations();
    let mut rhs = theta.to_vec();
    for (k, &x) in fixed.iter().enumerate() {
        let mut e = vec![0; n];
        e[k] = 1;
        rows.push(e);
        rhs.push(x);
    }
    let q = |x: i64| BigRational::from_integer(x.into());
    let mut aug: Vec<Vec<BigRational>> =
        rows.iter().zip(&rhs).map(|(r, &t)| r.iter().map(|&x| q(x)).chain([q(t)]).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    let mut g0 = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        g0[c] = aug[r][n].clone();
    }
    let kernel = integer_kernel(&rows, n);
    let a = cone
        .facets
        .iter()
        .map(|f| {
            kernel
                .iter()
                .map(|k| {
                    let s: BigInt = f.iter().zip(k).map(|(x, y)| y * *x).sum();
                    s.to_i64().expect("facet coefficients fit in 64 bits")
                })
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = cone
        .facets
        .iter()
        .map(|f| -f.iter().zip(&g0).map(|(x, y)| y * BigInt::from(*x)).sum::<BigRational>())
        .collect();
    let scale = b.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let b = b.iter().map(|x| (x * &scale).to_integer()).collect();
    Some(Section { g0, kernel, a, b, scale })
}

/// Exact range of `coord` over the rational fibre of `θ` with the first
/// `fixed.len()` coordinates (in vertex order) pinned.
pub fn lp_extent(cone: &Cone, theta: &[i64], coord: &VertexId, fixed: &[i64]) -> Result<Extent, PolyError> {
    check_theta(cone, theta)?;
    let idx = cone.index_of(coord).ok_or(PolyError::UnknownCoordinate(*coord))?;
    if fixed.len() > cone.dim() {
        return Err(PolyError::NotAPrefix);
    }
    let Some(sec) = section(cone, theta, fixed) else { return Ok(Extent::Infeasible) };
    let base = sec.g0[idx].clone();
    let c: Vec<i64> = sec.kernel.iter().map(|k| k[idx].to_i64().expect("small kernel")).collect();
    let neg: Vec<i64> = c.iter().map(|x| -x).collect();
    let lo = minimize(&sec.a, &sec.b, &c);
    let hi = minimize(&sec.a, &sec.b, &neg);
    if lo == Side::Empty || hi == Side::Empty {
        return Ok(Extent::Infeasible);
    }
    let scale = BigRational::from_integer(sec.scale.clone());
    let value = |s: Side, sign: i64| match s {
        Side::Value(v) => Some(&base + v / &scale * BigInt::from(sign)),
        _ => None,
    };
    let open = matches!(lo, Side::Open) || matches!(hi, Side::Open);
    if open && !feasible(&sec.a, &sec.b) {
        return Ok(Extent::Infeasible);
    }
    match (value(lo, 1), value(hi, -1)) {
        (Some(lo), Some(hi)) => Ok(Extent::Bounded { lo, hi }),
        (lo, hi) => Ok(Extent::Unbounded { lo, hi }),
    }
}

/// Whether dropping facet `k` enlarges the cone: `⟨g, f_k⟩` is unbounded
/// below on the cone cut out by the other facets.
pub fn is_essential(cone: &Cone, k: usize) -> bool {
    let others: Vec<Vec<i64>> =
        cone.facets.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, f)| f.clone()).collect();
    let zeros = vec![BigInt::zero(); others.len()];
    minimize(&others, &zeros, &cone.facets[k]) == Side::Open
}
