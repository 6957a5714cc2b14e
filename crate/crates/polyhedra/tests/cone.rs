use boundary_reps::DiagonalOrientation;
use diamond_builder::{vertex_count, Chirality};
use polyhedra::{build_cone, build_cone_with, is_essential, Breakdown, Cone, ConeDoc};

#[test]
fn fixture_cone_has_43_facets() {
    let cone = build_cone(3, 3).unwrap();
    assert_eq!(cone.facets.len(), 43);
    assert_eq!(cone.breakdown, Some(Breakdown { boundary: 36, diagonal: 6, simple: 1 }));
    assert_eq!(cone.dim(), 21);
}

#[test]
fn ambient_dimension_counts_det_vertices() {
    for l in 2..=4 {
        for m in 2..=4 {
            let cone = build_cone(l, m).unwrap();
            assert_eq!(cone.dim(), vertex_count(l, m) + m, "l={l} m={m}");
            assert_eq!(cone.grading.len(), cone.dim());
            assert!(cone.grading.iter().all(|r| r.len() == 2 * l + m));
        }
    }
}

#[test]
fn normals_are_primitive_and_distinct() {
    for (l, m) in [(2, 2), (3, 3), (4, 3)] {
        let cone = build_cone(l, m).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for f in &cone.facets {
            assert!(f.iter().all(|&x| x >= 0));
            let g = f.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
            assert_eq!(g, 1, "{f:?}");
            assert!(seen.insert(f.clone()));
        }
    }
}

#[test]
fn every_normal_meets_one_frozen_vertex() {
    for (l, m) in [(2, 2), (3, 3), (3, 4), (4, 3)] {
        let cone = build_cone(l, m).unwrap();
        let bar = diamond_builder::build_bar(l, m, Chirality::Standard).unwrap();
        for f in &cone.facets {
            let frozen = cone.vertices.iter().zip(f).filter(|(v, &x)| x != 0 && bar.quiver.is_frozen(v)).count();
            assert_eq!(frozen, 1, "{f:?}");
        }
    }
}

#[test]
fn every_facet_is_essential() {
    for (l, m) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let cone = build_cone(l, m).unwrap();
        for k in 0..cone.facets.len() {
            assert!(is_essential(&cone, k), "l={l} m={m} facet {k}");
        }
    }
}

#[test]
fn duplicated_facet_is_redundant() {
    let mut cone = build_cone(2, 2).unwrap();
    let dup = cone.facets[0].clone();
    cone.facets.push(dup);
    let last = cone.facets.len() - 1;
    assert!(!is_essential(&cone, 0));
    assert!(!is_essential(&cone, last));
}

#[test]
fn json_uses_decimal_strings() {
    let cone = build_cone(3, 3).unwrap();
    let text = serde_json::to_string(&cone.to_doc()).unwrap();
    let doc: ConeDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.l, "3");
    assert_eq!(doc.vertices.len(), 21);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(value["facets"][0][0].is_string());
    assert_eq!(Cone::from_doc(&doc).unwrap(), cone);
}

#[test]
fn alternative_constructions() {
    assert!(build_cone_with(3, 3, Chirality::Mirrored, DiagonalOrientation::Socle).is_err());
    let opposite = build_cone_with(3, 3, Chirality::Standard, DiagonalOrientation::Opposite).unwrap();
    assert_eq!(opposite.facets.len(), 43);
    assert_ne!(opposite.facets, build_cone(3, 3).unwrap().facets);
}

#[test]
fn sizes_below_two_are_rejected() {
    assert!(build_cone(1, 3).is_err());
    assert!(build_cone(3, 1).is_err());
}
