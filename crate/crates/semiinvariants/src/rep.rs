use num_bigint::BigInt;
use rand::Rng;

use crate::Matrix;

/// Integer representation of the flag quiver with `m` central arrows.
///
/// `up[k-1]` is the `k × (k+1)` map `V_{-k} → V_{-(k+1)}`, `down[k-1]` the
/// `(k+1) × k` map `V_{k+1} → V_k`, and `central[n-1]` the `l × l` map of
/// `a_n : V_{-l} → V_l`. Vectors are rows, so a path matrix is the product
/// of its arrow matrices from left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub l: usize,
    pub m: usize,
    pub up: Vec<Matrix>,
    pub down: Vec<Matrix>,
    pub central: Vec<Matrix>,
}

fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R, lo: i64, hi: i64) -> Matrix {
    Matrix { rows, cols, data: (0..rows * cols).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect() }
}

impl Representation {
    /// Entries drawn uniformly from `lo..=hi`.
    pub fn random<R: Rng>(l: usize, m: usize, rng: &mut R, lo: i64, hi: i64) -> Self {
        let up = (1..l).map(|k| random_matrix(k, k + 1, rng, lo, hi)).collect();
        let down = (1..l).map(|k| random_matrix(k + 1, k, rng, lo, hi)).collect();
        let central = (0..m).map(|_| random_matrix(l, l, rng, lo, hi)).collect();
        Representation { l, m, up, down, central }
    }

    /// Standard flag truncations with identity central maps.
    pub fn standard(l: usize, m: usize) -> Self {
        let trunc = |rows: usize, cols: usize| {
            let mut x = Matrix::zeros(rows, cols);
            for t in 0..rows.min(cols) {
                x.set(t, t, BigInt::from(1));
            }
            x
        };
        Representation {
            l,
            m,
            up: (1..l).map(|k| trunc(k, k + 1)).collect(),
            down: (1..l).map(|k| trunc(k + 1, k)).collect(),
            central: (0..m).map(|_| Matrix::identity(l)).collect(),
        }
    }

    /// Matrix of the path `-c → … → -l → (a_k) → l → … → d`, of shape `c × d`.
    pub fn path(&self, c: usize, d: usize, k: usize) -> Matrix {
        let mut x = Matrix::identity(c);
        for t in c..self.l {
            x = x.mul(&self.up[t - 1]);
        }
        x = x.mul(&self.central[k - 1]);
        for t in (d..self.l).rev() {
            x = x.mul(&self.down[t - 1]);
        }
        x
    }

    /// Copy with `a_k` multiplied by `t`.
    pub fn with_scaled_central(&self, k: usize, t: i64) -> Self {
        let mut r = self.clone();
        r.central[k - 1] = r.central[k - 1].scaled(t);
        r
    }

    /// Copy with every arrow leaving the flag vertex `x` multiplied by `t`.
    ///
    /// Negative `x` names `V_{-|x|}`; the arrows leaving `V_{-l}` are all the
    /// central maps. `V_1` has no outgoing arrow.
    pub fn with_scaled_outgoing(&self, x: i64, t: i64) -> Self {
        let mut r = self.clone();
        let c = x.unsigned_abs() as usize;
        if x < 0 {
            if c < self.l {
                r.up[c - 1] = r.up[c - 1].scaled(t);
            } else {
                for a in r.central.iter_mut() {
                    *a = a.scaled(t);
                }
            }
        } else if c >= 2 {
            r.down[c - 2] = r.down[c - 2].scaled(t);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = Representation::random(4, 3, &mut rng, -5, 5);
        assert_eq!(r.up.len(), 3);
        assert_eq!((r.up[1].rows, r.up[1].cols), (2, 3));
        assert_eq!((r.down[1].rows, r.down[1].cols), (3, 2));
        assert_eq!(r.central.len(), 3);
        let p = r.path(2, 1, 3);
        assert_eq!((p.rows, p.cols), (2, 1));
    }

    #[test]
    fn l_two_path_is_conjugated_entry() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r = Representation::random(2, 2, &mut rng, -5, 5);
        let p = r.path(1, 1, 1);
        let direct = r.up[0].mul(&r.central[0]).mul(&r.down[0]);
        assert_eq!(p, direct);
    }
}
