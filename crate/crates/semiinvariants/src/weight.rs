use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use quiver_core::VertexId;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::presentation::check_range;
use crate::{eval_semi_invariant, lifted_presentation, Presentation, Representation, SemiError};

const PROBE_SEED: u64 = 0x0005_eed0_fde9;
const PROBE_ATTEMPTS: usize = 64;

fn bump(w: &mut [i64], l: usize, k: i64, c: i64) {
    if k < 0 {
        w[(-k) as usize - 1] += c;
    } else if k > 0 {
        w[l + k as usize - 1] += c;
    }
}

/// Weight of `det a_n`: `σ = e_l − e_{-l}`, `λ = l·e_n`.
pub fn det_weight(n: u32, l: usize, m: usize) -> Vec<i64> {
    let mut w = vec![0; 2 * l + m];
    bump(&mut w, l, l as i64, 1);
    bump(&mut w, l, -(l as i64), -1);
    w[2 * l + n as usize - 1] = l as i64;
    w
}

/// Index actually used by the presentation at `(i, j, n)`.
fn effective_index(i: usize, j: usize, n: usize, l: usize) -> usize {
    if j > 0 && i + j == l && n % 2 == 1 && n > 1 {
        n - 1
    } else {
        n
    }
}

fn closed_sigma(i: usize, j: usize, n: usize, dual: bool, l: usize, w: &mut [i64]) {
    let (si, sj, s) = (i as i64, j as i64, (i + j) as i64);
    if j == 0 {
        bump(w, l, si, 1);
        bump(w, l, -si, -1);
        return;
    }
    if dual {
        bump(w, l, si, 1);
        bump(w, l, sj, 1);
        bump(w, l, -s, -1);
    } else {
        bump(w, l, s, 1);
        bump(w, l, -si, -1);
        bump(w, l, -sj, -1);
    }
    let r = if n.is_multiple_of(2) { (n - 2) / 2 } else { (n - 1) / 2 } as i64;
    bump(w, l, l as i64, r);
    bump(w, l, -(l as i64), -r);
}

fn closed_lambda(i: usize, j: usize, n: usize, l: usize, lam: &mut [i64]) {
    lam[n - 1] += i as i64;
    if j == 0 {
        return;
    }
    let top = if n % 2 == 1 { n } else { n - 1 };
    for k in 1..=top {
        lam[k - 1] += if k % 2 == 1 { j } else { l - j } as i64;
    }
}

/// `(σ, λ)` weight of the lifted semi-invariant at `(i, j, n)`.
///
/// The dual λ-part is read off by [`probe_degrees`] rather than from a
/// closed formula.
pub fn sigma_lambda_weight(i: u32, j: u32, n: u32, dual: bool, l: usize, m: usize) -> Result<Vec<i64>, SemiError> {
    check_range(i, j, n, l, m)?;
    let (iu, ju) = (i as usize, j as usize);
    let nu = effective_index(iu, ju, n as usize, l);
    let mut w = vec![0; 2 * l + m];
    closed_sigma(iu, ju, nu, dual, l, &mut w);
    if dual && j > 0 {
        let p = lifted_presentation(i, j, n, true, l, m)?;
        let probed =
            probe_degrees(&p, l, m, PROBE_SEED).ok_or_else(|| SemiError::ProbeFailed(VertexId::hive(n, i, j, true)))?;
        w[2 * l..].copy_from_slice(&probed[2 * l..]);
    } else {
        closed_lambda(iu, ju, nu, l, &mut w[2 * l..]);
    }
    Ok(w)
}

/// Weight of a canonical vertex label.
pub fn vertex_weight(v: &VertexId, l: usize, m: usize) -> Result<Vec<i64>, SemiError> {
    match *v {
        VertexId::Det { n } => {
            if n == 0 || n as usize > m {
                return Err(SemiError::IndexOutOfRange { i: l as u32, j: 0, n, l, m });
            }
            Ok(det_weight(n, l, m))
        }
        VertexId::Hive { n, i, j, dual } => sigma_lambda_weight(i, j, n, dual, l, m),
    }
}

/// Exponent `e` with `scaled = base · 2^e`, if any.
fn exponent_of_two(base: &BigInt, scaled: &BigInt) -> Option<i64> {
    let (q, r) = scaled.div_rem(base);
    if !r.is_zero() || q <= BigInt::zero() {
        return None;
    }
    let e = q.trailing_zeros()?;
    (q == BigInt::from(1) << e).then_some(e as i64)
}

/// Measures the full `(σ, λ)` degree of `s(p)` numerically.
///
/// λ(k) is the exponent of 2 picked up when `a_k` is doubled. For σ, doubling
/// the arrows out of `V_{-x}` scales every row block with size ≤ x, and
/// doubling the arrow out of `V_x` scales every column block with size < x;
/// differences of the exponents recover the block multiplicities. Returns
/// `None` if no non-vanishing sample is found.
pub fn probe_degrees(p: &Presentation, l: usize, m: usize, seed: u64) -> Option<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (rep, base) = (0..PROBE_ATTEMPTS).find_map(|_| {
        let rep = Representation::random(l, m, &mut rng, -5, 5);
        let v = eval_semi_invariant(p, &rep).ok()?;
        (!v.is_zero()).then_some((rep, v))
    })?;
    let exp = |r: &Representation| -> Option<i64> { exponent_of_two(&base, &eval_semi_invariant(p, r).ok()?) };
    let mut w = vec![0; 2 * l + m];
    for k in 1..=m {
        w[2 * l + k - 1] = exp(&rep.with_scaled_central(k, 2))?;
    }
    let mut prev = 0;
    for x in 1..=l {
        let e = exp(&rep.with_scaled_outgoing(-(x as i64), 2))?;
        w[x - 1] = -(e - prev) / x as i64;
        prev = e;
    }
    let total = prev;
    prev = 0;
    for x in 2..=l {
        let e = exp(&rep.with_scaled_outgoing(x as i64, 2))?;
        w[l + x - 2] = (e - prev) / (x - 1) as i64;
        prev = e;
    }
    w[2 * l - 1] = (total - prev) / l as i64;
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(w: &[i64], l: usize) -> (Vec<i64>, Vec<i64>) {
        (w[..l].to_vec(), w[l..2 * l].to_vec())
    }

    #[test]
    fn diagonal_weight() {
        let w = sigma_lambda_weight(2, 0, 3, false, 3, 3).unwrap();
        assert_eq!(w, vec![0, -1, 0, 0, 1, 0, 0, 0, 2]);
    }

    #[test]
    fn even_small_example() {
        // σ = e_2 − 2e_{-1}, λ = e_1 + e_2
        let w = sigma_lambda_weight(1, 1, 2, false, 3, 3).unwrap();
        assert_eq!(sig(&w, 3), (vec![-2, 0, 0], vec![0, 1, 0]));
        assert_eq!(&w[6..], &[1, 1, 0]);
    }

    #[test]
    fn right_edge_odd_correction_vanishes() {
        let w = sigma_lambda_weight(1, 2, 3, false, 3, 3).unwrap();
        assert_eq!(sig(&w, 3), (vec![-1, -1, 0], vec![0, 0, 1]));
    }

    #[test]
    fn det_weight_layout() {
        assert_eq!(det_weight(2, 3, 3), vec![0, 0, -1, 0, 0, 1, 0, 3, 0]);
    }

    #[test]
    fn presentation_sigma_matches_closed_form() {
        for l in 2..=4usize {
            for m in 1..=5usize {
                for n in 1..=m as u32 {
                    for i in 0..=l as u32 {
                        for j in 0..=l as u32 - i {
                            if i + j == 0 || (n == 1 && i > 0 && j > 0) {
                                continue;
                            }
                            for dual in [false, true] {
                                let p = lifted_presentation(i, j, n, dual, l, m).unwrap();
                                let w = sigma_lambda_weight(i, j, n, dual, l, m).unwrap();
                                assert_eq!(p.sigma(l), w[..2 * l].to_vec());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn probe_reproduces_closed_forms() {
        for l in 2..=4usize {
            for m in 1..=4usize {
                for n in 1..=m as u32 {
                    for i in 0..=l as u32 {
                        for j in 0..=l as u32 - i {
                            if i + j == 0 || (n == 1 && i > 0 && j > 0) {
                                continue;
                            }
                            for dual in [false, true] {
                                let p = lifted_presentation(i, j, n, dual, l, m).unwrap();
                                let probed = probe_degrees(&p, l, m, 99).unwrap();
                                let (iu, ju) = (i as usize, j as usize);
                                let nu = effective_index(iu, ju, n as usize, l);
                                let mut closed = vec![0; 2 * l + m];
                                closed_sigma(iu, ju, nu, dual, l, &mut closed);
                                closed_lambda(iu, ju, nu, l, &mut closed[2 * l..]);
                                assert_eq!(probed, closed, "({i},{j},{n}) dual={dual} l={l}");
                            }
                        }
                    }
                }
            }
        }
    }
}
