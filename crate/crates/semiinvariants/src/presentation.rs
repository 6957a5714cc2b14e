use num_bigint::BigInt;

use crate::{det, Matrix, Representation, SemiError};

/// Block presentation `⊕ P_{pos} → ⊕ P_{-neg}` with path entries.
///
/// Row block `b` has size `neg[b]`, column block `a` has size `pos[a]`;
/// `entries[b][a] = Some(k)` is the path through the central arrow `a_k`.
/// Signs of the blocks are not normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub neg: Vec<usize>,
    pub pos: Vec<usize>,
    pub entries: Vec<Vec<Option<usize>>>,
}

impl Presentation {
    /// σ-part of the weight: `Σ e_pos − Σ e_{-neg}` in the
    /// `(σ(-1..-l), σ(1..l))` layout.
    pub fn sigma(&self, l: usize) -> Vec<i64> {
        let mut s = vec![0; 2 * l];
        for &c in self.neg.iter().filter(|&&c| c > 0) {
            s[c - 1] -= 1;
        }
        for &d in self.pos.iter().filter(|&&d| d > 0) {
            s[l + d - 1] += 1;
        }
        s
    }

    pub fn size(&self) -> (usize, usize) {
        (self.neg.iter().sum(), self.pos.iter().sum())
    }
}

pub(crate) fn check_range(i: u32, j: u32, n: u32, l: usize, m: usize) -> Result<(), SemiError> {
    let s = (i + j) as usize;
    // index 1 carries only the left-edge labels (0, j, 1) and the diagonal
    if s == 0 || s > l || n == 0 || n as usize > m || (n == 1 && i > 0 && j > 0) {
        return Err(SemiError::IndexOutOfRange { i, j, n, l, m });
    }
    Ok(())
}

/// Inverse-free presentation of the lifted semi-invariant at `(i, j, n)`.
///
/// `i + j = l` with `n` odd uses the presentation for `n - 1`.
pub fn lifted_presentation(i: u32, j: u32, n: u32, dual: bool, l: usize, m: usize) -> Result<Presentation, SemiError> {
    check_range(i, j, n, l, m)?;
    let (i, j) = (i as usize, j as usize);
    if j == 0 {
        return Ok(Presentation { neg: vec![i], pos: vec![i], entries: vec![vec![Some(n as usize)]] });
    }
    let mut nn = n as usize;
    if i + j == l && nn % 2 == 1 && nn > 1 {
        nn -= 1;
    }
    let (r, top) = if nn.is_multiple_of(2) { ((nn - 2) / 2, nn - 1) } else { ((nn - 1) / 2, nn) };
    // `wide[a][b]`: from summand `a` of [i+j, l^r] to summand `b` of [i, j, l^r]
    let wide_sizes = std::iter::once(i + j).chain(std::iter::repeat_n(l, r)).collect::<Vec<_>>();
    let narrow_sizes = [i, j].into_iter().chain(std::iter::repeat_n(l, r)).collect::<Vec<_>>();
    let mut wide = vec![vec![None; r + 2]; r + 1];
    wide[0][0] = Some(nn);
    if r == 0 {
        wide[0][1] = Some(1);
    } else {
        wide[0][2] = Some(top);
        for t in 1..r {
            wide[t][t + 1] = Some(top + 1 - 2 * t);
            wide[t][t + 2] = Some(top - 2 * t);
        }
        wide[r][1] = Some(1);
        wide[r][r + 1] = Some(2);
    }
    Ok(if dual {
        Presentation { neg: wide_sizes, pos: narrow_sizes, entries: wide }
    } else {
        let entries = (0..r + 2).map(|b| (0..r + 1).map(|a| wide[a][b]).collect()).collect();
        Presentation { neg: narrow_sizes, pos: wide_sizes, entries }
    })
}

/// Numeric block matrix of `p` at `rep`.
pub fn assemble(p: &Presentation, rep: &Representation) -> Result<Matrix, SemiError> {
    let (rows, cols) = p.size();
    if rows != cols {
        return Err(SemiError::NonSquare { rows, cols });
    }
    let mut out = Matrix::zeros(rows, cols);
    let mut r0 = 0;
    for (b, &c) in p.neg.iter().enumerate() {
        let mut c0 = 0;
        for (a, &d) in p.pos.iter().enumerate() {
            if let Some(k) = p.entries[b][a] {
                if c > 0 && d > 0 {
                    let block = rep.path(c, d, k);
                    for x in 0..c {
                        for y in 0..d {
                            out.set(r0 + x, c0 + y, block.at(x, y).clone());
                        }
                    }
                }
            }
            c0 += d;
        }
        r0 += c;
    }
    Ok(out)
}

/// `s(f)(M) = det M(f)`.
pub fn eval_semi_invariant(p: &Presentation, rep: &Representation) -> Result<BigInt, SemiError> {
    Ok(det(&assemble(p, rep)?))
}
