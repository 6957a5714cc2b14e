use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use quiver_core::{IceQuiver, VertexId};

use crate::{det, eval_semi_invariant, lifted_presentation, Representation, SemiError};

/// Outcome of checking every exchange relation of a quiver at one sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExchangeReport {
    pub checked: usize,
    pub failures: Vec<VertexId>,
}

impl ExchangeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Value at `rep` of the cluster variable attached to `v`.
pub fn vertex_value(v: &VertexId, rep: &Representation) -> Result<BigInt, SemiError> {
    match *v {
        VertexId::Det { n } => {
            if n == 0 || n as usize > rep.m {
                return Err(SemiError::IndexOutOfRange { i: rep.l as u32, j: 0, n, l: rep.l, m: rep.m });
            }
            Ok(det(&rep.central[n as usize - 1]))
        }
        VertexId::Hive { n, i, j, dual } => {
            let p = lifted_presentation(i, j, n, dual, rep.l, rep.m)?;
            eval_semi_invariant(&p, rep)
        }
    }
}

/// Checks that `x_u` divides `Π_in ± Π_out` at every mutable `u`.
///
/// Presentations carry unnormalized signs, so either sign is accepted.
pub fn check_exchange_relations(
    q: &IceQuiver,
    l: usize,
    m: usize,
    rep: &Representation,
) -> Result<ExchangeReport, SemiError> {
    if rep.l != l || rep.m != m {
        return Err(SemiError::ShapeMismatch { got_l: rep.l, got_m: rep.m, l, m });
    }
    let mut values = BTreeMap::new();
    for v in q.vertices() {
        let x = vertex_value(v, rep)?;
        if x.is_zero() {
            return Err(SemiError::DegenerateSample(*v));
        }
        values.insert(*v, x);
    }
    let mut report = ExchangeReport::default();
    for u in q.mutable_vertices() {
        let prod =
            |nbrs: Vec<(VertexId, u32)>| nbrs.into_iter().fold(BigInt::one(), |acc, (w, c)| acc * values[&w].pow(c));
        let pin = prod(q.in_arrows(&u));
        let pout = prod(q.out_arrows(&u));
        let x = &values[&u];
        let ok = (&pin + &pout).mod_floor(x).is_zero() || (&pin - &pout).mod_floor(x).is_zero();
        report.checked += 1;
        if !ok {
            report.failures.push(u);
        }
    }
    Ok(report)
}
