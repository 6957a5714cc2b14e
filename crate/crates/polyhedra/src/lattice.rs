//! Integer parametrization `g = g0 + K z` of `{g ∈ Z^N : E g = θ}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreLattice {
    ncols: usize,
    /// `E U` restricted to its pivot columns (column echelon form).
    echelon: Vec<Vec<BigInt>>,
    /// Pivot row of each echelon column.
    pivots: Vec<usize>,
    /// Unimodular column transform `U`.
    transform: Vec<Vec<BigInt>>,
}

impl FibreLattice {
    /// Column-style Hermite reduction of `e` (rows are equations).
    pub fn new(e: &[Vec<i64>], ncols: usize) -> Self {
        let mut a: Vec<Vec<BigInt>> = e.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut u: Vec<Vec<BigInt>> = (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        let col_op = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
            for row in m.iter_mut() {
                let t = &row[src] * f;
                row[dst] -= t;
            }
        };
        let swap = |m: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
            for row in m.iter_mut() {
                row.swap(x, y);
            }
        };
        let mut pivots = Vec::new();
        let mut col = 0;
        for r in 0..a.len() {
            if col == ncols {
                break;
            }
            loop {
                let pick =
                    (col..ncols).filter(|&j| !a[r][j].is_zero()).min_by(|&x, &y| a[r][x].abs().cmp(&a[r][y].abs()));
                let Some(p) = pick else { break };
                swap(&mut a, col, p);
                swap(&mut u, col, p);
                let mut done = true;
                for j in col + 1..ncols {
                    if a[r][j].is_zero() {
                        continue;
                    }
                    let q = a[r][j].div_floor(&a[r][col]);
                    col_op(&mut a, j, col, &q);
                    col_op(&mut u, j, col, &q);
                    if !a[r][j].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if a[r][col].is_zero() {
                continue;
            }
            if a[r][col].is_negative() {
                for m in [&mut a, &mut u] {
                    for row in m.iter_mut() {
                        row[col] = -row[col].clone();
                    }
                }
            }
            pivots.push(r);
            col += 1;
        }
        let rank = pivots.len();
        let echelon = a.iter().map(|row| row[..rank].to_vec()).collect();
        FibreLattice { ncols, echelon, pivots, transform: u }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.ncols - self.rank()
    }

    /// An integer solution of `E g = θ`, if one exists.
    pub fn particular(&self, theta: &[i64]) -> Option<Vec<BigInt>> {
        let rank = self.rank();
        let mut w: Vec<BigInt> = Vec::with_capacity(rank);
        for (r, row) in self.echelon.iter().enumerate() {
            let mut s = BigInt::from(theta[r]);
            for (c, wc) in w.iter().enumerate() {
                s -= &row[c] * wc;
            }
            if w.len() < rank && self.pivots[w.len()] == r {
                let (q, rem) = s.div_rem(&row[w.len()]);
                if !rem.is_zero() {
                    return None;
                }
                w.push(q);
            } else if !s.is_zero() {
                return None;
            }
        }
        Some(self.transform.iter().map(|urow| urow[..rank].iter().zip(&w).map(|(x, y)| x * y).sum()).collect())
    }

    /// Lattice basis of `{g : E g = 0}` as columns (`N × dim`).
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let rank = self.rank();
        self.transform.iter().map(|urow| urow[rank..].to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_spans() {
        // 2x + 4y + 6z = θ0
        let lat = FibreLattice::new(&[vec![2, 4, 6]], 3);
        assert_eq!(lat.rank(), 1);
        assert!(lat.particular(&[3]).is_none());
        let g = lat.particular(&[8]).unwrap();
        let v: BigInt = g.iter().zip([2, 4, 6]).map(|(x, c)| x * c).sum();
        assert_eq!(v, BigInt::from(8));
        for c in 0..lat.dim() {
            let s: BigInt = lat.kernel().iter().zip([2, 4, 6]).map(|(r, c2)| &r[c] * c2).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn dependent_rows() {
        let lat = FibreLattice::new(&[vec![1, 1, 0], vec![2, 2, 0], vec![0, 0, 1]], 3);
        assert_eq!(lat.rank(), 2);
        assert!(lat.particular(&[1, 3, 0]).is_none());
        assert!(lat.particular(&[1, 2, 5]).is_some());
    }
}
