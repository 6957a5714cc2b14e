//! Fraction-free simplex over `{y ≥ 0 : M y = c}`.
//!
//! The tableau holds `det · B⁻¹ [M | c]` with `det = ±det B > 0`, so every
//! entry stays an integer and pivots use exact division (Edmonds' scheme).
//! Bland's rule keeps it finite.

use crate::num::Exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

#[derive(Clone, Debug)]
pub(crate) struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basic: Vec<usize>,
    det: T,
    cols: usize,
}

pub(crate) enum Phase1<T> {
    Feasible(Tableau<T>),
    Infeasible,
    /// `M` lacks full row rank.
    Deficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Max<T> {
    /// Optimal value `num / den`, `den > 0`.
    Optimal {
        num: T,
        den: T,
    },
    Unbounded,
}

fn ov<T>(x: Option<T>) -> Result<T, Overflow> {
    x.ok_or(Overflow)
}

impl<T: Exact> Tableau<T> {
    fn pivot(&mut self, mut obj: Option<&mut Vec<T>>, p: usize, q: usize) -> Result<(), Overflow> {
        let piv = self.rows[p][q].clone();
        let prow = self.rows[p].clone();
        let update = |row: &mut Vec<T>, det: &T| -> Result<(), Overflow> {
            let f = row[q].clone();
            for (x, pk) in row.iter_mut().zip(&prow) {
                let a = ov(piv.mul(x))?;
                let b = ov(f.mul(pk))?;
                *x = ov(ov(a.sub(&b))?.div_exact(det))?;
            }
            Ok(())
        };
        for i in 0..self.rows.len() {
            if i != p {
                update(&mut self.rows[i], &self.det)?;
            }
        }
        if let Some(o) = obj.as_deref_mut() {
            update(o, &self.det)?;
        }
        self.det = piv;
        self.basic[p] = q;
        if self.det.sign() < 0 {
            self.det = ov(self.det.neg())?;
            for row in self.rows.iter_mut().chain(obj) {
                for x in row.iter_mut() {
                    *x = ov(x.neg())?;
                }
            }
        }
        Ok(())
    }

    /// `det` times the reduced costs of `w`, with the objective value last.
    fn objective_row(&self, w: &[T]) -> Result<Vec<T>, Overflow> {
        let mut r = Vec::with_capacity(self.cols + 1);
        for j in 0..=self.cols {
            let mut s = T::zero();
            for (i, row) in self.rows.iter().enumerate() {
                let wb = &w[self.basic[i]];
                if wb.sign() != 0 && row[j].sign() != 0 {
                    s = ov(s.add(&ov(wb.mul(&row[j]))?))?;
                }
            }
            if j < self.cols && w[j].sign() != 0 {
                s = ov(s.sub(&ov(self.det.mul(&w[j]))?))?;
            }
            r.push(s);
        }
        Ok(r)
    }

    /// Maximizes `w · y` from the current (feasible) basis, which is kept.
    pub(crate) fn maximize(&mut self, w: &[T]) -> Result<Max<T>, Overflow> {
        let n = self.cols;
        let mut obj = self.objective_row(w)?;
        loop {
            let Some(q) = (0..n).find(|&j| obj[j].sign() < 0) else {
                return Ok(Max::Optimal { num: obj[n].clone(), den: self.det.clone() });
            };
            let mut best: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][q].sign() <= 0 {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        let lhs = ov(self.rows[i][n].mul(&self.rows[b][q]))?;
                        let rhs = ov(self.rows[b][n].mul(&self.rows[i][q]))?;
                        if lhs < rhs || (lhs == rhs && self.basic[i] < self.basic[b]) {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(p) = best else { return Ok(Max::Unbounded) };
            self.pivot(Some(&mut obj), p, q)?;
        }
    }
}

/// Finds a feasible basis of `{y ≥ 0 : M y = c}` with artificial variables.
pub(crate) fn phase1<T: Exact>(m: &[Vec<i64>], c: &[i64], cols: usize) -> Result<Phase1<T>, Overflow> {
    let p = m.len();
    let mut rows = Vec::with_capacity(p);
    for (i, (mi, &ci)) in m.iter().zip(c).enumerate() {
        let s = if ci < 0 { -1 } else { 1 };
        let mut row: Vec<T> = mi.iter().map(|&x| T::from_i64(s * x)).collect();
        row.extend((0..p).map(|k| T::from_i64((k == i) as i64)));
        row.push(T::from_i64(s * ci));
        rows.push(row);
    }
    let mut t = Tableau { rows, basic: (cols..cols + p).collect(), det: T::from_i64(1), cols: cols + p };
    let w: Vec<T> = (0..cols + p).map(|j| T::from_i64(if j < cols { 0 } else { -1 })).collect();
    match t.maximize(&w)? {
        Max::Optimal { num, .. } if num.sign() < 0 => return Ok(Phase1::Infeasible),
        Max::Optimal { .. } => {}
        Max::Unbounded => unreachable!("phase one objective is bounded above by zero"),
    }
    for i in 0..p {
        if t.basic[i] < cols {
            continue;
        }
        match (0..cols).find(|&q| t.rows[i][q].sign() != 0) {
            Some(q) => t.pivot(None, i, q)?,
            None => return Ok(Phase1::Deficient),
        }
    }
    for row in t.rows.iter_mut() {
        let rhs = row.pop().expect("rhs column");
        row.truncate(cols);
        row.push(rhs);
    }
    t.cols = cols;
    Ok(Phase1::Feasible(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn solve<T: Exact>(m: &[Vec<i64>], c: &[i64], w: &[i64]) -> Option<Max<T>> {
        match phase1::<T>(m, c, w.len()).unwrap() {
            Phase1::Feasible(mut t) => {
                let w: Vec<T> = w.iter().map(|&x| T::from_i64(x)).collect();
                Some(t.maximize(&w).unwrap())
            }
            _ => None,
        }
    }

    #[test]
    fn small_lp() {
        // y1 + y2 + y3 = 4, y1 - y2 = 1; max 2y1 + y2
        let m = vec![vec![1, 1, 1], vec![1, -1, 0]];
        let r = solve::<i128>(&m, &[4, 1], &[2, 1, 0]).unwrap();
        // optimum at y1 = 5/2, y2 = 3/2: value 13/2
        let Max::Optimal { num, den } = r else { panic!() };
        assert_eq!(num * 2, den * 13);
        let r = solve::<BigInt>(&m, &[4, 1], &[2, 1, 0]).unwrap();
        let Max::Optimal { num, den } = r else { panic!() };
        assert_eq!(num * BigInt::from(2), den * BigInt::from(13));
    }

    #[test]
    fn unbounded_and_infeasible() {
        let m = vec![vec![1, -1]];
        assert_eq!(solve::<i128>(&m, &[1], &[1, 1]), Some(Max::Unbounded));
        let m = vec![vec![1, 1]];
        assert!(solve::<i128>(&m, &[-1], &[0, 0]).is_none());
    }

    #[test]
    fn deficient_rows_are_reported() {
        let m = vec![vec![1, 1], vec![2, 2]];
        assert!(matches!(phase1::<i128>(&m, &[1, 2], 2).unwrap(), Phase1::Deficient));
    }

    #[test]
    fn warm_start_reuses_basis() {
        let m = vec![vec![1, 1, 1]];
        let Phase1::Feasible(mut t) = phase1::<i128>(&m, &[3], 3).unwrap() else { panic!() };
        for (w, want) in [([1, 0, 0], 3), ([0, 5, 0], 15), ([0, 0, -1], 0)] {
            let Max::Optimal { num, den } = t.maximize(&w).unwrap() else { panic!() };
            assert_eq!(num, want * den);
        }
    }
}
