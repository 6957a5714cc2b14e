use itertools::Itertools;

use crate::{KronError, Partition};

/// `σ` indexed by `-1, …, -l, 1, …, l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaWeight {
    l: usize,
    values: Vec<i64>,
}

impl SigmaWeight {
    /// Checks the sign pattern and that both sides have the same size.
    pub fn new(l: usize, values: Vec<i64>) -> Result<Self, KronError> {
        if values.len() != 2 * l {
            return Err(KronError::InvalidWeight(format!("expected {} entries, got {}", 2 * l, values.len())));
        }
        let w = SigmaWeight { l, values };
        if (1..=l).any(|i| w.get(-(i as i64)) > 0 || w.get(i as i64) < 0) {
            return Err(KronError::InvalidWeight("σ(-i) must be ≤ 0 and σ(i) ≥ 0".into()));
        }
        let left: i64 = (1..=l).map(|i| -(i as i64) * w.get(-(i as i64))).sum();
        let right: i64 = (1..=l).map(|i| i as i64 * w.get(i as i64)).sum();
        if left != right {
            return Err(KronError::InvalidWeight(format!("sides have sizes {left} and {right}")));
        }
        Ok(w)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `σ(i)` for `i ∈ {±1, …, ±l}`.
    pub fn get(&self, i: i64) -> i64 {
        let k = i.unsigned_abs() as usize;
        assert!(k >= 1 && k <= self.l, "index {i} out of range");
        if i < 0 {
            self.values[k - 1]
        } else {
            self.values[self.l + k - 1]
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The partition whose conjugate has `-σ(-i)` parts equal to `i`.
    pub fn mu(&self) -> Partition {
        self.side(|i| -self.get(-i))
    }

    /// The partition whose conjugate has `σ(i)` parts equal to `i`.
    pub fn nu(&self) -> Partition {
        self.side(|i| self.get(i))
    }

    fn side(&self, mult: impl Fn(i64) -> i64) -> Partition {
        let mut cols = Vec::new();
        for i in (1..=self.l as i64).rev() {
            cols.extend(std::iter::repeat_n(i as u32, mult(i) as usize));
        }
        Partition::new(cols).expect("sorted").conjugate()
    }
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<(), KronError> {
    if a.size() != b.size() {
        return Err(KronError::SizeMismatch(a.size(), b.size()));
    }
    Ok(())
}

pub fn sigma_of(mu: &Partition, nu: &Partition, l: usize) -> Result<SigmaWeight, KronError> {
    check_sizes(mu, nu)?;
    for p in [mu, nu] {
        if p.len() > l {
            return Err(KronError::LengthExceedsL { len: p.len(), l });
        }
    }
    let mut values = vec![0; 2 * l];
    for x in mu.conjugate().parts() {
        values[*x as usize - 1] -= 1;
    }
    for x in nu.conjugate().parts() {
        values[l + *x as usize - 1] += 1;
    }
    SigmaWeight::new(l, values)
}

/// A surviving term of the alternating sum over `𝔖_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    /// One-line notation, values in `1..=m`.
    pub omega: Vec<usize>,
    pub lambda: Vec<i64>,
    pub sign: i8,
}

/// Permutations `ω` with `λ(i) - i + ω(i) ≥ 0` for all `i`.
pub fn lambda_shifts(lambda: &Partition, m: usize) -> Result<Vec<Shift>, KronError> {
    if lambda.len() > m {
        return Err(KronError::LengthExceedsM { len: lambda.len(), m });
    }
    let lam = lambda.padded(m);
    let mut out = Vec::new();
    for perm in (1..=m).permutations(m) {
        let shifted: Vec<i64> = (0..m).map(|i| lam[i] as i64 - (i as i64 + 1) + perm[i] as i64).collect();
        if shifted.iter().any(|&x| x < 0) {
            continue;
        }
        let inversions = perm.iter().tuple_combinations().filter(|(a, b)| a > b).count();
        out.push(Shift { omega: perm, lambda: shifted, sign: if inversions % 2 == 0 { 1 } else { -1 } });
    }
    Ok(out)
}

/// The target `(σ, λ^ω)` of one term.
pub fn theta(sigma: &SigmaWeight, shift: &Shift) -> Vec<i64> {
    sigma.values().iter().chain(&shift.lambda).copied().collect()
}
