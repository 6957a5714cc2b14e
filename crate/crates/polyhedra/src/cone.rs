use std::collections::BTreeSet;
use std::sync::OnceLock;

use boundary_reps::{boundary_path, diagonal_module, DiagonalOrientation, PathModule};
use diamond_builder::{build_bar, Chirality};
use num_integer::Integer;
use quiver_core::VertexId;
use serde::{Deserialize, Serialize};

use crate::count::System;
use crate::{FibreLattice, PolyError};

/// Facet counts by source module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    /// Strict submodules of the boundary path modules.
    pub boundary: usize,
    /// Submodules of `T_n` for `n ≥ 2`.
    pub diagonal: usize,
    /// The simple `T_1`.
    pub simple: usize,
}

/// The cone `{g : ⟨g, d⟩ ≥ 0 for every facet d}` with its grading.
#[derive(Debug)]
pub struct Cone {
    pub l: usize,
    pub m: usize,
    pub vertices: Vec<VertexId>,
    pub facets: Vec<Vec<i64>>,
    /// Row `u` is the weight of `vertices[u]`.
    pub grading: Vec<Vec<i64>>,
    /// Absent for cones loaded from a document.
    pub breakdown: Option<Breakdown>,
    lattice: OnceLock<FibreLattice>,
    system: OnceLock<System>,
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        Cone {
            l: self.l,
            m: self.m,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            grading: self.grading.clone(),
            breakdown: self.breakdown,
            lattice: self.lattice.clone(),
            system: OnceLock::new(),
        }
    }
}

impl PartialEq for Cone {
    fn eq(&self, o: &Self) -> bool {
        (self.l, self.m, &self.vertices, &self.facets, &self.grading) == (o.l, o.m, &o.vertices, &o.facets, &o.grading)
    }
}

/// JSON form of a cone; every integer is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    pub l: String,
    pub m: String,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub grading: Vec<Vec<String>>,
}

fn normalize(mut d: Vec<i64>) -> Vec<i64> {
    let g = d.iter().fold(0i64, |g, x| g.gcd(x));
    if g > 1 {
        d.iter_mut().for_each(|x| *x /= g);
    }
    d
}

impl Cone {
    pub fn new(l: usize, m: usize, vertices: Vec<VertexId>, facets: Vec<Vec<i64>>, grading: Vec<Vec<i64>>) -> Self {
        Cone { l, m, vertices, facets, grading, breakdown: None, lattice: OnceLock::new(), system: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len()
    }

    /// Length of a weight vector, `2l + m`.
    pub fn weight_len(&self) -> usize {
        2 * self.l + self.m
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// The equations `grading·g = θ`, one row per weight coordinate.
    pub fn equations(&self) -> Vec<Vec<i64>> {
        (0..self.weight_len()).map(|k| self.grading.iter().map(|row| row[k]).collect()).collect()
    }

    pub fn lattice(&self) -> &FibreLattice {
        self.lattice.get_or_init(|| FibreLattice::new(&self.equations(), self.dim()))
    }

    pub(crate) fn system(&self) -> &System {
        self.system.get_or_init(|| System::new(self))
    }

    /// `⟨g, d⟩ ≥ 0` for every facet.
    pub fn contains(&self, g: &[i64]) -> bool {
        self.facets.iter().all(|d| d.iter().zip(g).map(|(a, b)| a * b).sum::<i64>() >= 0)
    }

    /// Weight `grading·g`.
    pub fn degree(&self, g: &[i64]) -> Vec<i64> {
        let mut s = vec![0; self.weight_len()];
        for (row, &x) in self.grading.iter().zip(g) {
            for (a, b) in s.iter_mut().zip(row) {
                *a += x * b;
            }
        }
        s
    }

    pub fn to_doc(&self) -> ConeDoc {
        let strs = |rows: &[Vec<i64>]| rows.iter().map(|r| r.iter().map(i64::to_string).collect()).collect();
        ConeDoc {
            l: self.l.to_string(),
            m: self.m.to_string(),
            vertices: self.vertices.iter().map(VertexId::to_string).collect(),
            facets: strs(&self.facets),
            grading: strs(&self.grading),
        }
    }

    pub fn from_doc(doc: &ConeDoc) -> Result<Self, PolyError> {
        let bad = |what: &str, s: &str| PolyError::Format(format!("{what} {s:?}"));
        let int = |s: &String| s.parse::<i64>().map_err(|_| bad("integer", s));
        let l: usize = doc.l.parse().map_err(|_| bad("size l", &doc.l))?;
        let m: usize = doc.m.parse().map_err(|_| bad("size m", &doc.m))?;
        let vertices = doc
            .vertices
            .iter()
            .map(|s| s.parse::<VertexId>().map_err(|_| bad("vertex", s)))
            .collect::<Result<Vec<_>, _>>()?;
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(PolyError::Format("vertices are not in canonical order".into()));
        }
        let rows = |rows: &[Vec<String>], width: usize, what: &str| {
            rows.iter()
                .map(|r| {
                    if r.len() != width {
                        return Err(PolyError::Format(format!("{what} row of length {}", r.len())));
                    }
                    r.iter().map(int).collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let facets = rows(&doc.facets, vertices.len(), "facet")?;
        let grading = rows(&doc.grading, 2 * l + m, "grading")?;
        if grading.len() != vertices.len() {
            return Err(PolyError::Format("one grading row per vertex expected".into()));
        }
        Ok(Cone::new(l, m, vertices, facets, grading))
    }
}

pub fn build_cone(l: usize, m: usize) -> Result<Cone, PolyError> {
    build_cone_with(l, m, Chirality::Standard, DiagonalOrientation::Socle)
}

pub fn build_cone_with(
    l: usize,
    m: usize,
    chirality: Chirality,
    orientation: DiagonalOrientation,
) -> Result<Cone, PolyError> {
    let bar = build_bar(l, m, chirality)?;
    let vertices: Vec<VertexId> = bar.quiver.vertices().to_vec();
    let grading = vertices.iter().map(|v| bar.weights.get(v).expect("every vertex is weighted").to_vec()).collect();
    let mut seen = BTreeSet::new();
    let mut facets = Vec::new();
    let mut add = |modules: &[PathModule], strict: bool| {
        let before = facets.len();
        for p in modules {
            for s in p.submodule_dims(strict) {
                let d = normalize(s.dense(&vertices));
                if seen.insert(d.clone()) {
                    facets.push(d);
                }
            }
        }
        facets.len() - before
    };
    let paths = bar.boundary_frozen().iter().map(|v| boundary_path(&bar, v)).collect::<Result<Vec<_>, _>>()?;
    let diagonal = (2..=m as u32).map(|n| diagonal_module(&bar, n, orientation)).collect::<Result<Vec<_>, _>>()?;
    let simple = diagonal_module(&bar, 1, orientation)?;
    let breakdown =
        Breakdown { boundary: add(&paths, true), diagonal: add(&diagonal, false), simple: add(&[simple], false) };
    let mut cone = Cone::new(l, m, vertices, facets, grading);
    cone.breakdown = Some(breakdown);
    Ok(cone)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_normalization() {
        assert_eq!(normalize(vec![0, 2, 4]), vec![0, 1, 2]);
        assert_eq!(normalize(vec![0, 1, 3]), vec![0, 1, 3]);
    }

    #[test]
    fn doc_round_trip() {
        let cone = build_cone(2, 2).unwrap();
        let back = Cone::from_doc(&cone.to_doc()).unwrap();
        assert_eq!(back, cone);
        let mut doc = cone.to_doc();
        doc.facets[0].pop();
        assert!(Cone::from_doc(&doc).is_err());
    }
}
