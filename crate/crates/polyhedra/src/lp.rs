//! Exact LP over `{z : A z ≥ b}` through the dual `max bᵀy, Aᵀy = c, y ≥ 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use quiver_core::linalg::rank;

use crate::num::Exact;
use crate::simplex::{phase1, Max, Overflow, Phase1, Tableau};

/// One side of an LP extent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Value(BigRational),
    /// The dual is infeasible: unbounded, or the primal is empty.
    Open,
    /// The dual is unbounded: the primal is empty.
    Empty,
}

/// Rows of `[M | c]` forming a basis of the row space of `M`; `None` if
/// the system `M y = c` is inconsistent.
pub(crate) fn independent_rows(m: &[Vec<i64>], c: &[i64]) -> Option<Vec<usize>> {
    let mut keep: Vec<usize> = Vec::new();
    let mut r = 0;
    for i in 0..m.len() {
        let mut trial: Vec<Vec<i64>> = keep.iter().map(|&k| m[k].clone()).collect();
        trial.push(m[i].clone());
        let nr = rank(&trial);
        if nr > r {
            keep.push(i);
            r = nr;
        }
    }
    let aug: Vec<Vec<i64>> = m.iter().zip(c).map(|(row, &x)| row.iter().copied().chain([x]).collect()).collect();
    (rank(&aug) == r).then_some(keep)
}

/// `max wᵀy` over `{y ≥ 0 : M y = c}` in big integers, reducing redundant rows.
pub(crate) fn maximize_big(m: &[Vec<i64>], c: &[i64], w: &[BigInt], cols: usize) -> Side {
    let big = "big integers do not overflow";
    match dual_tableau::<BigInt>(m, c, cols).expect(big) {
        None => Side::Open,
        Some(mut t) => match t.maximize(w).expect(big) {
            Max::Unbounded => Side::Empty,
            Max::Optimal { num, den } => Side::Value(BigRational::new(num.to_big(), den.to_big())),
        },
    }
}

/// A phase-one tableau for `{y ≥ 0 : M y = c}` with redundant rows
/// removed; `None` if the system is infeasible.
pub(crate) fn dual_tableau<T: Exact>(m: &[Vec<i64>], c: &[i64], cols: usize) -> Result<Option<Tableau<T>>, Overflow> {
    match phase1::<T>(m, c, cols)? {
        Phase1::Feasible(t) => Ok(Some(t)),
        Phase1::Infeasible => Ok(None),
        Phase1::Deficient => {
            let Some(keep) = independent_rows(m, c) else { return Ok(None) };
            let m2: Vec<Vec<i64>> = keep.iter().map(|&k| m[k].clone()).collect();
            let c2: Vec<i64> = keep.iter().map(|&k| c[k]).collect();
            match phase1::<T>(&m2, &c2, cols)? {
                Phase1::Feasible(t) => Ok(Some(t)),
                Phase1::Infeasible => Ok(None),
                Phase1::Deficient => unreachable!("rows are independent"),
            }
        }
    }
}

pub(crate) fn transpose(a: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    (0..d).map(|k| a.iter().map(|row| row[k]).collect()).collect()
}

/// `min c·z` over `{z : A z ≥ b}`.
pub(crate) fn minimize(a: &[Vec<i64>], b: &[BigInt], c: &[i64]) -> Side {
    let d = c.len();
    if d == 0 {
        return if feasible(a, b) { Side::Value(BigRational::from_integer(0.into())) } else { Side::Empty };
    }
    maximize_big(&transpose(a, d), c, b, a.len())
}

/// Farkas test: `{z : A z ≥ b}` is empty iff some `y ≥ 0` has `Aᵀy = 0`
/// and `bᵀy > 0`.
pub(crate) fn feasible(a: &[Vec<i64>], b: &[BigInt]) -> bool {
    let d = a.first().map_or(0, |r| r.len());
    let rows = a.len();
    let mut m = transpose(a, d);
    for row in m.iter_mut() {
        row.push(0);
    }
    m.push(vec![1; rows + 1]);
    let mut c = vec![0; d];
    c.push(1);
    let mut w: Vec<BigInt> = b.to_vec();
    w.push(BigInt::from(0));
    match maximize_big(&m, &c, &w, rows + 1) {
        Side::Value(v) => v <= BigRational::from_integer(0.into()),
        _ => unreachable!("the normalized Farkas system is feasible and bounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Side {
        Side::Value(BigRational::new(n.into(), d.into()))
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn triangle() {
        // x ≥ 0, y ≥ 0, -2x - 2y ≥ -3
        let a = vec![vec![1, 0], vec![0, 1], vec![-2, -2]];
        let b = big(&[0, 0, -3]);
        assert_eq!(minimize(&a, &b, &[1, 0]), q(0, 1));
        assert_eq!(minimize(&a, &b, &[-1, 0]), q(-3, 2));
        assert!(feasible(&a, &b));
    }

    #[test]
    fn empty_and_open() {
        let a = vec![vec![1], vec![-1]];
        assert!(!feasible(&a, &big(&[1, 0])));
        assert_eq!(minimize(&a, &big(&[1, 0]), &[1]), Side::Empty);
        let a = vec![vec![1, 0]];
        assert_eq!(minimize(&a, &big(&[0]), &[0, 1]), Side::Open);
    }
}
