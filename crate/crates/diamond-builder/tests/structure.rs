use diamond_builder::{
    build_bar, build_tilde, canonical_vertex, full_twist, hive_points, vertex_count, ArrowType, BuildError, Chirality,
};
use proptest::prelude::*;
use quiver_core::{mutate_weights, BMatrix, VertexId};

fn parse(labels: &[&str]) -> Vec<VertexId> {
    labels.iter().map(|s| s.parse().unwrap()).collect()
}

fn fixture_paths() -> [Vec<VertexId>; 2] {
    [
        parse(&[
            "(0,1,3)v", "(1,1,3)v", "(2,0,3)", "(1,2,2)", "(1,1,2)", "(1,0,2)", "(0,1,1)", "(1,1,2)", "(2,1,2)",
            "(0,1,3)",
        ]),
        parse(&[
            "(0,2,3)v", "(1,0,3)", "(1,1,3)", "(2,1,2)", "(2,0,2)", "(1,1,2)v", "(0,2,1)", "(1,2,2)", "(1,1,3)",
            "(0,2,3)",
        ]),
    ]
}

#[test]
fn fixture_arrows_pin_the_chirality() {
    let std = build_bar(3, 3, Chirality::Standard).unwrap();
    let mir = build_bar(3, 3, Chirality::Mirrored).unwrap();
    for p in fixture_paths() {
        for w in p.windows(2) {
            assert!(std.quiver.multiplicity(&w[0], &w[1]) > 0, "{} -> {}", w[0], w[1]);
        }
        assert!(p.windows(2).any(|w| mir.quiver.multiplicity(&w[0], &w[1]) == 0));
    }
}

#[test]
fn weight_configurations_hold() {
    for l in 2..=4 {
        for m in 2..=4 {
            let t = build_tilde(l, m, Chirality::Standard).unwrap();
            t.weights.check(&t.quiver).unwrap();
            let b = build_bar(l, m, Chirality::Standard).unwrap();
            b.weights.check(&b.quiver).unwrap();
            for f in b.quiver.frozen() {
                assert_eq!(b.weights.get(f), t.weights.get(f), "frozen weight moved at {f}");
            }
        }
    }
}

#[test]
fn full_row_rank() {
    for l in 2..=5 {
        for m in 2..=5 {
            let b = build_bar(l, m, Chirality::Standard).unwrap();
            assert!(BMatrix::of(&b.quiver).has_full_row_rank(), "l={l} m={m}");
        }
    }
}

#[test]
fn vertex_counts() {
    for l in 2..=6 {
        for m in 2..=6 {
            let t = build_tilde(l, m, Chirality::Standard).unwrap();
            assert_eq!(t.quiver.vertices().len(), vertex_count(l, m) + m);
            assert_eq!(t.quiver.vertices().iter().filter(|v| v.is_det()).count(), m);
        }
    }
}

#[test]
fn three_cycles_carry_one_arrow_of_each_type() {
    for l in 2..=4 {
        for m in 2..=4 {
            let b = build_bar(l, m, Chirality::Standard).unwrap();
            let q = &b.quiver;
            for (x, y, _) in q.arrows() {
                for (z, _) in q.out_arrows(&y) {
                    if q.multiplicity(&z, &x) == 0 || !(x < y && x < z) {
                        continue;
                    }
                    let sets = [b.types(&x, &y), b.types(&y, &z), b.types(&z, &x)];
                    let perms = [
                        [ArrowType::A, ArrowType::B, ArrowType::C],
                        [ArrowType::A, ArrowType::C, ArrowType::B],
                        [ArrowType::B, ArrowType::A, ArrowType::C],
                        [ArrowType::B, ArrowType::C, ArrowType::A],
                        [ArrowType::C, ArrowType::A, ArrowType::B],
                        [ArrowType::C, ArrowType::B, ArrowType::A],
                    ];
                    let ok = perms.iter().any(|p| (0..3).all(|k| sets[k].contains(&p[k])));
                    assert!(ok, "l={l} m={m}: {x} -> {y} -> {z} typed {sets:?}");
                }
            }
            for (x, y, _) in q.arrows() {
                assert!(!b.types(&x, &y).is_empty(), "untyped arrow {x} -> {y}");
            }
        }
    }
}

#[test]
fn reversed_twist_restores_the_lifted_quiver() {
    for l in 2..=5 {
        for m in 2..=5 {
            let t = build_tilde(l, m, Chirality::Standard).unwrap();
            let b = build_bar(l, m, Chirality::Standard).unwrap();
            let mut seq = full_twist(l, m).unwrap();
            seq.reverse();
            let back = b.quiver.mutate_seq(&seq).unwrap();
            assert!(back.eq_up_to_frozen(&t.quiver), "l={l} m={m}");
        }
    }
}

#[test]
fn size_gate() {
    assert!(matches!(build_bar(1, 3, Chirality::Standard), Err(BuildError::SizeTooSmall { .. })));
    assert!(matches!(build_bar(3, 1, Chirality::Standard), Err(BuildError::SizeTooSmall { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonicalization_is_idempotent(l in 2usize..8, m in 2usize..8, n in 1u32..8, k in 0usize..64, d: bool) {
        let pts = hive_points(l);
        let (i, j) = pts[k % pts.len()];
        prop_assume!(n as usize <= m);
        if let Ok(v) = canonical_vertex(n, i, j, d, l, m) {
            let VertexId::Hive { n, i, j, dual } = v else { unreachable!() };
            prop_assert_eq!(canonical_vertex(n, i, j, dual, l, m).unwrap(), v);
        }
    }

    #[test]
    fn transported_weights_stay_valid(l in 2usize..5, m in 2usize..5, picks in prop::collection::vec(0usize..1000, 0..25)) {
        let t = build_tilde(l, m, Chirality::Standard).unwrap();
        let mutable = t.quiver.mutable_vertices();
        let (mut q, mut w) = (t.quiver.clone(), t.weights.clone());
        for p in picks {
            let u = mutable[p % mutable.len()];
            w = mutate_weights(&q, &w, &u, true).unwrap();
            q = q.mutate(&u).unwrap();
        }
        prop_assert!(w.check(&q).is_ok());
        prop_assert!(BMatrix::of(&q).has_full_row_rank());
    }
}
