use diamond_builder::{build_tilde, Chirality};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semiinvariants::{check_exchange_relations, Representation, SemiError};

/// Checks `samples` non-degenerate representations; returns the failure count.
fn sample(l: usize, m: usize, chirality: Chirality, samples: usize, seed: u64) -> usize {
    let t = build_tilde(l, m, chirality).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut done, mut failures) = (0, 0);
    while done < samples {
        let rep = Representation::random(l, m, &mut rng, -5, 5);
        match check_exchange_relations(&t.quiver, l, m, &rep) {
            Ok(r) => {
                failures += r.failures.len();
                done += 1;
            }
            Err(SemiError::DegenerateSample(_)) => continue,
            Err(e) => panic!("{e}"),
        }
    }
    failures
}

#[test]
fn exchange_relations_hold() {
    for l in 2..=3 {
        for m in 2..=3 {
            assert_eq!(sample(l, m, Chirality::Standard, 25, 17), 0, "l={l} m={m}");
        }
    }
}

#[test]
fn exchange_relations_at_four() {
    assert_eq!(sample(4, 3, Chirality::Standard, 5, 5), 0);
    assert_eq!(sample(3, 4, Chirality::Standard, 5, 6), 0);
}

#[test]
fn dropping_det_arrows_breaks_corner_relations() {
    use quiver_core::IceQuiver;
    let (l, m) = (3, 3);
    let t = build_tilde(l, m, Chirality::Standard).unwrap();
    let mut q = IceQuiver::new(t.quiver.vertices().iter().copied(), t.quiver.frozen().iter().copied());
    for (a, b, c) in t.quiver.arrows() {
        if !a.is_det() && !b.is_det() {
            q.add_arrows(a, b, c).unwrap();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = 0;
    for _ in 0..20 {
        let rep = Representation::random(l, m, &mut rng, -5, 5);
        if let Ok(r) = check_exchange_relations(&q, l, m, &rep) {
            failures += r.failures.len();
        }
    }
    assert!(failures > 0);
}
