//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Inconsistent,
    /// Value of each unknown if the system pins it down, `None` otherwise.
    Solved(Vec<Option<BigRational>>),
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = to_q(rows);
    rref(&mut m).len()
}

/// Solves `A x = b`, reporting which unknowns are uniquely determined.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Solution {
    let n = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            r.push(BigRational::from_integer(BigInt::from(bi)));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        if free.iter().all(|&f| m[r][f].is_zero()) {
            out[c] = Some(m[r][n].clone());
        }
    }
    Solution::Solved(out)
}

/// A basis of the rational kernel of an integer matrix, scaled to primitive
/// integer vectors.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m = to_q(rows);
    let pivots = rref(&mut m);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[f] = BigRational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][f].clone();
        }
        let den = v.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        out.push(ints.into_iter().map(|x| x / &g).collect());
    }
    out
}
