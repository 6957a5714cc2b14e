use quiver_core::VertexId;

use crate::{check_size, BuildError};

/// Interior sweep: anti-diagonals `s = 2..=t+1` for `t = l-2` down to 1.
pub fn interior_sweep(l: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for t in (1..l.saturating_sub(1) as u32).rev() {
        for s in 2..=t + 1 {
            out.extend((1..s).map(|i| (i, s - i)));
        }
    }
    out
}

/// Mutation word on a linear chain `1 → 2 → … → k` realizing the relabeling
/// `i ↦ k + 1 - i`.
pub fn diagonal_reversal(k: usize) -> Vec<u32> {
    if k <= 1 {
        return Vec::new();
    }
    let k = k as u32;
    let h = k / 2;
    let mut out = Vec::new();
    if k.is_multiple_of(2) {
        for t in (1..=h).rev() {
            out.extend([t, t + 1]);
            if k + 1 - t != t + 1 {
                out.push(k + 1 - t);
            }
        }
    } else {
        out.push(h + 1);
        for t in (1..=h).rev() {
            out.push(t);
            if t < h {
                out.push(t + 1);
            }
            out.push(k + 1 - t);
        }
    }
    out.extend([1, k, 1]);
    for t in 1..h {
        out.extend([k - t, t + 1]);
    }
    if k % 2 == 1 {
        out.push(h + 1);
    }
    out
}

/// Twist word for diamond `n`: the interior sweep (plain, then dual at each
/// point) followed by the reversal of the diagonal chain. Diamond 2 needs
/// no twist.
pub fn twist_sequence(l: usize, m: usize, n: u32) -> Result<Vec<VertexId>, BuildError> {
    check_size(l, m)?;
    if n == 2 {
        return Ok(Vec::new());
    }
    if n < 3 || n as usize > m || n.is_multiple_of(2) {
        return Err(BuildError::UnsupportedDiamond { n, m });
    }
    let mut out = Vec::new();
    for (i, j) in interior_sweep(l) {
        out.push(VertexId::hive(n, i, j, false));
        out.push(VertexId::hive(n, i, j, true));
    }
    out.extend(diagonal_reversal(l - 1).into_iter().map(|i| VertexId::plain(n, i, 0)));
    Ok(out)
}

/// Concatenated twist words of all odd diamonds.
pub fn full_twist(l: usize, m: usize) -> Result<Vec<VertexId>, BuildError> {
    let mut out = Vec::new();
    for n in (3..=m as u32).step_by(2) {
        out.extend(twist_sequence(l, m, n)?);
    }
    Ok(out)
}
