use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{KronError, Partition};

/// Largest `n` the oracle accepts by default.
pub const ORACLE_BOUND: u32 = 12;

type Memo = Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ^λ(ρ)` by removing border strips of length `ρ_1`, `ρ_2`, … in turn.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64, KronError> {
    if lambda.size() != rho.size() {
        return Err(KronError::SizeMismatch(lambda.size(), rho.size()));
    }
    Ok(chi(lambda.parts(), rho.parts()))
}

fn chi(lambda: &[u32], rho: &[u32]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else { return 1 };
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo().lock().expect("memo lock").get(&key) {
        return v;
    }
    let len = lambda.len();
    // beta numbers λ_i + len - 1 - i, strictly decreasing
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &x)| x as i64 + (len - 1 - i) as i64).collect();
    let mut total = 0;
    for &b in &beta {
        let nb = b - r as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| nb < x && x < b).count();
        let mut next: Vec<i64> = beta.iter().map(|&x| if x == b { nb } else { x }).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> =
            next.iter().enumerate().map(|(k, &x)| (x - (len - 1 - k) as i64) as u32).filter(|&x| x > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * chi(&parts, rest);
    }
    memo().lock().expect("memo lock").insert(key, total);
    total
}

/// Size of the centralizer of a permutation of cycle type `ρ`: `Π i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, group) in &rho.parts().iter().chunk_by(|&&x| x) {
        let k = group.count() as u32;
        z *= BigInt::from(part).pow(k);
        for t in 1..=k {
            z *= t;
        }
    }
    z
}

pub fn kronecker_oracle(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<BigInt, KronError> {
    kronecker_oracle_with_bound(mu, nu, lambda, ORACLE_BOUND)
}

/// `Σ_ρ χ^μ(ρ) χ^ν(ρ) χ^λ(ρ) / z_ρ` in exact rationals.
pub fn kronecker_oracle_with_bound(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    bound: u32,
) -> Result<BigInt, KronError> {
    let n = mu.size();
    for p in [nu, lambda] {
        if p.size() != n {
            return Err(KronError::SizeMismatch(n, p.size()));
        }
    }
    if n > bound {
        return Err(KronError::SizeTooLargeForOracle { n, bound });
    }
    let mut sum = BigRational::zero();
    for rho in Partition::all(n) {
        let num = BigInt::from(chi(mu.parts(), rho.parts()))
            * chi(nu.parts(), rho.parts())
            * chi(lambda.parts(), rho.parts());
        sum += BigRational::new(num, z_rho(&rho));
    }
    assert!(sum.is_integer(), "character sum {sum} is not an integer");
    Ok(sum.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn character_examples() {
        for rho in Partition::all(5) {
            assert_eq!(mn_character(&p("5"), &rho).unwrap(), 1);
            let sign = if (5 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&p("1,1,1,1,1"), &rho).unwrap(), sign);
        }
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert!(mn_character(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_rho(&p("1,1,1")), BigInt::from(6));
        assert_eq!(z_rho(&p("2,2,1")), BigInt::from(8));
        assert_eq!(z_rho(&p("")), BigInt::from(1));
    }

    #[test]
    fn oracle_examples() {
        let k = |a: &str, b: &str, c: &str| kronecker_oracle(&p(a), &p(b), &p(c)).unwrap();
        assert_eq!(k("1", "1", "1"), BigInt::from(1));
        assert_eq!(k("2", "1,1", "1,1"), BigInt::from(1));
        assert_eq!(k("2,1", "2,1", "1,1,1"), BigInt::from(1));
        assert_eq!(k("2,1", "2,1", "2,1"), BigInt::from(1));
        assert_eq!(k("", "", ""), BigInt::from(1));
        assert!(matches!(
            kronecker_oracle(&p("13"), &p("13"), &p("13")),
            Err(KronError::SizeTooLargeForOracle { n: 13, bound: 12 })
        ));
    }
}
