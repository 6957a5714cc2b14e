use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use boundary_reps::DiagonalOrientation;
use diamond_builder::Chirality;
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use polyhedra::{build_cone_with, count_lattice_points_with, Cone, CountOptions};

use crate::{lambda_shifts, sigma_of, theta, KronError, Partition, Shift};

/// One term `sgn(ω) · #(fibre of (σ, λ^ω))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub shift: Shift,
    pub theta: Vec<i64>,
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kronecker {
    pub value: BigInt,
    pub l: usize,
    pub m: usize,
    pub terms: Vec<Term>,
}

/// Default sizes: `l = max(2, len μ, len ν)`, `m = max(2, len λ)`.
pub fn default_sizes(mu: &Partition, nu: &Partition, lambda: &Partition) -> (usize, usize) {
    (2.max(mu.len()).max(nu.len()), 2.max(lambda.len()))
}

/// Computes coefficients through lattice-point counts, keeping one cone per
/// `(l, m)`.
#[derive(Debug)]
pub struct Engine {
    pub chirality: Chirality,
    pub orientation: DiagonalOrientation,
    pub options: CountOptions,
    cones: Mutex<HashMap<(usize, usize), Arc<Cone>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Chirality::Standard, DiagonalOrientation::Socle, CountOptions::default())
    }
}

impl Engine {
    pub fn new(chirality: Chirality, orientation: DiagonalOrientation, options: CountOptions) -> Self {
        Engine { chirality, orientation, options, cones: Mutex::new(HashMap::new()) }
    }

    /// Seeds the cache, e.g. with a cone loaded from disk.
    pub fn insert_cone(&self, cone: Cone) -> Arc<Cone> {
        let cone = Arc::new(cone);
        self.cones.lock().expect("cone cache").insert((cone.l, cone.m), cone.clone());
        cone
    }

    pub fn cached(&self, l: usize, m: usize) -> Option<Arc<Cone>> {
        self.cones.lock().expect("cone cache").get(&(l, m)).cloned()
    }

    pub fn cone(&self, l: usize, m: usize) -> Result<Arc<Cone>, KronError> {
        if let Some(c) = self.cached(l, m) {
            return Ok(c);
        }
        let cone = build_cone_with(l, m, self.chirality, self.orientation)?;
        Ok(self.insert_cone(cone))
    }

    /// `Σ_ω sgn(ω) · #(fibre of (σ(μ, ν), λ^ω))`.
    pub fn kronecker(
        &self,
        mu: &Partition,
        nu: &Partition,
        lambda: &Partition,
        l: Option<usize>,
        m: Option<usize>,
    ) -> Result<Kronecker, KronError> {
        if lambda.size() != mu.size() {
            return Err(KronError::SizeMismatch(mu.size(), lambda.size()));
        }
        let (dl, dm) = default_sizes(mu, nu, lambda);
        let (l, m) = (l.unwrap_or(dl), m.unwrap_or(dm));
        let sigma = sigma_of(mu, nu, l)?;
        let shifts = lambda_shifts(lambda, m)?;
        let cone = self.cone(l, m)?;
        let mut value = BigInt::from(0);
        let mut terms = Vec::with_capacity(shifts.len());
        for shift in shifts {
            let theta = theta(&sigma, &shift);
            let count = count_lattice_points_with(&cone, &theta, self.options)?;
            let signed = BigInt::from(count.clone());
            value += if shift.sign > 0 { signed } else { -signed };
            terms.push(Term { shift, theta, count });
        }
        if value.is_negative() {
            return Err(KronError::NegativeCoefficient(value));
        }
        Ok(Kronecker { value, l, m, terms })
    }
}

/// One-off computation with a fresh engine.
pub fn kronecker(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    l: Option<usize>,
    m: Option<usize>,
) -> Result<Kronecker, KronError> {
    Engine::default().kronecker(mu, nu, lambda, l, m)
}
