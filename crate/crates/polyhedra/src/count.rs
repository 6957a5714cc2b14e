use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::extent::{check_theta, lp_extent, Extent};
use crate::lp::{dual_tableau, feasible, transpose};
use crate::num::Exact;
use crate::simplex::{Max, Overflow, Tableau};
use crate::{Cone, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub workers: usize,
    /// Depth at which subtrees are handed to workers.
    pub split_depth: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        CountOptions { workers, split_depth: 2 }
    }
}

pub fn count_lattice_points(cone: &Cone, theta: &[i64]) -> Result<BigUint, PolyError> {
    count_lattice_points_with(cone, theta, CountOptions::default())
}

/// θ-independent data of the fibre family: the facet system in lattice
/// coordinates and warm-startable tableaux.
#[derive(Debug)]
pub(crate) struct System {
    a: Vec<Vec<i64>>,
    /// Bounds of each lattice coordinate over `A z ≥ b`; `None` when the
    /// cone has a recession direction inside the fibres.
    root: Option<Vec<Level<i128>>>,
    levels: Mutex<HashMap<Vec<usize>, Levels>>,
}

impl System {
    pub(crate) fn new(cone: &Cone) -> Self {
        let kernel = cone.lattice().kernel();
        let d = cone.lattice().dim();
        let a: Vec<Vec<i64>> = cone
            .facets
            .iter()
            .map(|f| {
                (0..d)
                    .map(|t| {
                        let s: BigInt = f.iter().zip(&kernel).map(|(x, row)| &row[t] * *x).sum();
                        s.to_i64().expect("facet coefficients fit in 64 bits")
                    })
                    .collect()
            })
            .collect();
        let root = root_tableaux::<i128>(&a).unwrap_or(None);
        System { a, root, levels: Mutex::new(HashMap::new()) }
    }

    fn levels(&self, order: &[usize], a: &[Vec<i64>]) -> Result<Levels, Overflow> {
        if let Some(lv) = self.levels.lock().expect("cache lock").get(order) {
            return Ok(lv.clone());
        }
        let lv = Arc::new(levels::<i128>(a)?);
        self.levels.lock().expect("cache lock").insert(order.to_vec(), lv.clone());
        Ok(lv)
    }
}

/// `Ok(None)` if some coordinate is unbounded over the recession cone.
fn root_tableaux<T: Exact>(a: &[Vec<i64>]) -> Result<Option<Vec<Level<T>>>, Overflow> {
    let d = a.first().map_or(0, |r| r.len());
    let at = transpose(a, d);
    let mut out = Vec::with_capacity(d);
    for t in 0..d {
        let mut c = vec![0; d];
        c[t] = 1;
        let Some(lo) = dual_tableau::<T>(&at, &c, a.len())? else { return Ok(None) };
        c[t] = -1;
        let Some(hi) = dual_tableau::<T>(&at, &c, a.len())? else { return Ok(None) };
        out.push(Level { lo, hi });
    }
    Ok(Some(out))
}

/// Width of each coordinate range, `None` if some range is empty.
fn root_widths<T: Exact>(root: &[Level<T>], b: &[BigInt]) -> Result<Option<Vec<BigInt>>, Overflow> {
    let w = b.iter().map(|x| T::from_big(x).ok_or(Overflow)).collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(root.len());
    for lv in root {
        let mut lv = lv.clone();
        match range(&mut lv, &w)? {
            None => return Ok(None),
            Some((lo, hi)) => out.push(hi.to_big() - lo.to_big()),
        }
    }
    Ok(Some(out))
}

/// Integer points of the fibre `{g : F g ≥ 0, grading·g = θ}`.
///
/// The fibre lattice is written `g = g0 + K z`; the search fixes `z` one
/// coordinate at a time, narrowest range first, and bounds each level by
/// exact LP over the remaining coordinates.
pub fn count_lattice_points_with(cone: &Cone, theta: &[i64], opts: CountOptions) -> Result<BigUint, PolyError> {
    check_theta(cone, theta)?;
    let lat = cone.lattice();
    let Some(g0) = lat.particular(theta) else { return Ok(BigUint::zero()) };
    let sys = cone.system();
    let a = &sys.a;
    let d = lat.dim();
    let b: Vec<BigInt> = cone.facets.iter().map(|f| -f.iter().zip(&g0).map(|(x, y)| y * *x).sum::<BigInt>()).collect();
    if d == 0 {
        return Ok(if b.iter().all(|x| !x.is_positive()) { BigUint::one() } else { BigUint::zero() });
    }
    let Some(root) = &sys.root else {
        return if feasible(a, &b) { Err(PolyError::UnboundedFibre) } else { Ok(BigUint::zero()) };
    };
    let widths = match root_widths(root, &b) {
        Ok(w) => w,
        Err(Overflow) => {
            let big = root_tableaux::<BigInt>(a).expect("big integers do not overflow").expect("bounded");
            root_widths(&big, &b).expect("big integers do not overflow")
        }
    };
    let Some(widths) = widths else { return Ok(BigUint::zero()) };
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&t| (widths[t].clone(), t));
    let a: Vec<Vec<i64>> = a.iter().map(|row| order.iter().map(|&t| row[t]).collect()).collect();
    let fast = sys.levels(&order, &a).and_then(|lv| search::<i128>(&a, &b, (*lv).clone(), opts));
    let n = match fast {
        Ok(n) => n,
        Err(Overflow) => {
            let lv = levels::<BigInt>(&a).expect("big integers do not overflow");
            search::<BigInt>(&a, &b, lv, opts).expect("big integers do not overflow")
        }
    };
    Ok(BigUint::from(n))
}

type Levels = Arc<Vec<Level<i128>>>;

#[derive(Clone, Debug)]
struct Level<T> {
    lo: Tableau<T>,
    hi: Tableau<T>,
}

fn levels<T: Exact>(a: &[Vec<i64>]) -> Result<Vec<Level<T>>, Overflow> {
    let d = a[0].len();
    let at = transpose(a, d);
    (0..d - 1)
        .map(|k| {
            let m = &at[k..];
            let mut c = vec![0; d - k];
            c[0] = 1;
            let lo = dual_tableau::<T>(m, &c, a.len())?.expect("bounded fibre");
            c[0] = -1;
            let hi = dual_tableau::<T>(m, &c, a.len())?.expect("bounded fibre");
            Ok(Level { lo, hi })
        })
        .collect()
}

fn ceil_div<T: Exact>(p: &T, q: &T) -> Result<T, Overflow> {
    p.neg().and_then(|np| np.floor_div(q)).and_then(|x| x.neg()).ok_or(Overflow)
}

/// Integer range of the level-`k` coordinate, `None` if empty.
fn range<T: Exact>(lv: &mut Level<T>, w: &[T]) -> Result<Option<(T, T)>, Overflow> {
    let lo = match lv.lo.maximize(w)? {
        Max::Unbounded => return Ok(None),
        Max::Optimal { num, den } => ceil_div(&num, &den)?,
    };
    let hi = match lv.hi.maximize(w)? {
        Max::Unbounded => return Ok(None),
        Max::Optimal { num, den } => ceil_div(&num, &den)?.neg().ok_or(Overflow)?,
    };
    Ok((lo <= hi).then_some((lo, hi)))
}

/// Integers `z` with `a_r z ≥ w_r` for every row.
fn last_level<T: Exact>(a: &[Vec<i64>], k: usize, w: &[T]) -> Result<u128, Overflow> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for (row, wr) in a.iter().zip(w) {
        let c = row[k];
        if c == 0 {
            if wr.sign() > 0 {
                return Ok(0);
            }
            continue;
        }
        let ct = T::from_i64(c);
        if c > 0 {
            let x = ceil_div(wr, &ct)?;
            if lo.as_ref().is_none_or(|l| x > *l) {
                lo = Some(x);
            }
        } else {
            let x = wr.floor_div(&ct).ok_or(Overflow)?;
            if hi.as_ref().is_none_or(|h| x < *h) {
                hi = Some(x);
            }
        }
    }
    let (lo, hi) = (lo.expect("bounded fibre"), hi.expect("bounded fibre"));
    if lo > hi {
        return Ok(0);
    }
    let n = hi.sub(&lo).ok_or(Overflow)?.to_big() + 1u32;
    n.to_u128().ok_or(Overflow)
}

fn shift<T: Exact>(a: &[Vec<i64>], k: usize, w: &[T], z: &T) -> Result<Vec<T>, Overflow> {
    a.iter().zip(w).map(|(row, x)| T::from_i64(row[k]).mul(z).and_then(|p| x.sub(&p)).ok_or(Overflow)).collect()
}

fn dfs<T: Exact>(lv: &mut [Level<T>], a: &[Vec<i64>], k: usize, w: &[T]) -> Result<u128, Overflow> {
    if k == lv.len() {
        return last_level(a, k, w);
    }
    let Some((lo, hi)) = range(&mut lv[k], w)? else { return Ok(0) };
    let mut total = 0u128;
    let mut z = lo;
    while z <= hi {
        let next = shift(a, k, w, &z)?;
        total = total.checked_add(dfs(lv, a, k + 1, &next)?).ok_or(Overflow)?;
        z = z.add(&T::from_i64(1)).ok_or(Overflow)?;
    }
    Ok(total)
}

/// Right-hand sides of the nodes at depth `depth`.
fn expand<T: Exact>(
    lv: &mut [Level<T>],
    a: &[Vec<i64>],
    k: usize,
    depth: usize,
    w: Vec<T>,
    out: &mut Vec<Vec<T>>,
) -> Result<(), Overflow> {
    if k == depth {
        out.push(w);
        return Ok(());
    }
    let Some((lo, hi)) = range(&mut lv[k], &w)? else { return Ok(()) };
    let mut z = lo;
    while z <= hi {
        let next = shift(a, k, &w, &z)?;
        expand(lv, a, k + 1, depth, next, out)?;
        z = z.add(&T::from_i64(1)).ok_or(Overflow)?;
    }
    Ok(())
}

fn search<T: Exact>(a: &[Vec<i64>], b: &[BigInt], mut lv: Vec<Level<T>>, opts: CountOptions) -> Result<u128, Overflow> {
    let w = b.iter().map(|x| T::from_big(x).ok_or(Overflow)).collect::<Result<Vec<_>, _>>()?;
    let depth = opts.split_depth.min(lv.len());
    if opts.workers <= 1 || depth == 0 {
        return dfs(&mut lv, a, 0, &w);
    }
    let mut nodes = Vec::new();
    expand(&mut lv, a, 0, depth, w, &mut nodes)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build().expect("thread pool");
    pool.install(|| {
        nodes
            .par_iter()
            .map_init(|| lv.clone(), |lv, w| dfs(lv, a, depth, w))
            .try_reduce(|| 0, |x, y| x.checked_add(y).ok_or(Overflow))
    })
}

/// Naive enumeration over the integer box spanned by the coordinate
/// extents; fails if the box holds more than `limit` points.
pub fn brute_force_count(cone: &Cone, theta: &[i64], limit: u64) -> Result<BigUint, PolyError> {
    check_theta(cone, theta)?;
    let mut ranges = Vec::with_capacity(cone.dim());
    let mut size: u64 = 1;
    for v in &cone.vertices {
        match lp_extent(cone, theta, v, &[])? {
            Extent::Infeasible => return Ok(BigUint::zero()),
            Extent::Unbounded { .. } => return Err(PolyError::UnboundedFibre),
            e @ Extent::Bounded { .. } => {
                let (lo, hi) = e.integer_range().expect("bounded");
                if lo > hi {
                    return Ok(BigUint::zero());
                }
                let (lo, hi) = (lo.to_i64().expect("small"), hi.to_i64().expect("small"));
                size = size
                    .checked_mul((hi - lo + 1) as u64)
                    .filter(|&s| s <= limit)
                    .ok_or(PolyError::BoxTooLarge { limit })?;
                ranges.push((lo, hi));
            }
        }
    }
    let mut g: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    let mut count = 0u64;
    loop {
        if cone.degree(&g) == theta && cone.contains(&g) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == g.len() {
                return Ok(BigUint::from(count));
            }
            if g[k] < ranges[k].1 {
                g[k] += 1;
                break;
            }
            g[k] = ranges[k].0;
            k += 1;
        }
    }
}
