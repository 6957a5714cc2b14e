//! One pass/fail line per acceptance criterion.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use boundary_reps::{boundary_path, weight_identity_violations};
use diamond_builder::{build_bar, build_tilde, vertex_count, Chirality};
use kronecker::{default_sizes, kronecker_oracle, lambda_shifts, sigma_of, theta, Engine, Partition};
use polyhedra::{brute_force_count, build_cone, count_lattice_points_with, Breakdown, CountOptions};
use quiver_core::{BMatrix, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiinvariants::{check_exchange_relations, Representation, SemiError};

const FACET_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(600);
const EXCHANGE_SAMPLES: usize = 100;
const COUNT_TARGETS: usize = 20;
const PADDING_SAMPLE: usize = 10;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn facet_fixture() -> Outcome {
    let start = Instant::now();
    let cone = build_cone(3, 3).unwrap();
    let took = start.elapsed();
    let b = cone.breakdown.unwrap();
    let ok = cone.facets.len() == 43 && b == Breakdown { boundary: 36, diagonal: 6, simple: 1 } && took < FACET_BUDGET;
    outcome(
        ok,
        format!(
            "{} facets = {} + {} + {} in {took:.2?} (budget {FACET_BUDGET:?})",
            cone.facets.len(),
            b.boundary,
            b.diagonal,
            b.simple
        ),
    )
}

fn path_fixtures() -> Outcome {
    let bar = build_bar(3, 3, Chirality::Standard).unwrap();
    let fixtures = [
        ("(0,1,3)", "(0,1,3)v (1,1,3)v (2,0,3) (1,2,2) (1,1,2) (1,0,2) (0,1,1) (1,1,2) (2,1,2) (0,1,3)"),
        ("(0,2,3)", "(0,2,3)v (1,0,3) (1,1,3) (2,1,2) (2,0,2) (1,1,2)v (0,2,1) (1,2,2) (1,1,3) (0,2,3)"),
    ];
    let mut bad = Vec::new();
    for (v, want) in fixtures {
        let want: Vec<VertexId> = want.split(' ').map(|s| s.parse().unwrap()).collect();
        match boundary_path(&bar, &v.parse().unwrap()) {
            Ok(p) if p.path == want => {}
            Ok(p) => bad.push(format!("{v}: got {:?}", p.path.iter().map(|x| x.to_string()).collect::<Vec<_>>())),
            Err(e) => bad.push(format!("{v}: {e}")),
        }
    }
    let detail = if bad.is_empty() { "both fixture sequences verbatim".into() } else { bad.join("; ") };
    outcome(bad.is_empty(), detail)
}

fn sweep_triples() -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let ps = Partition::with_length_at_most(n, 3);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

type Values = HashMap<(Partition, Partition, Partition), num_bigint::BigInt>;

fn oracle_sweep(engine: &Engine, values: &mut Values) -> Outcome {
    let start = Instant::now();
    let triples = sweep_triples();
    let mut bad = Vec::new();
    for (mu, nu, lam) in &triples {
        match engine.kronecker(mu, nu, lam, None, None) {
            Ok(k) => {
                let want = kronecker_oracle(mu, nu, lam).unwrap();
                if k.value != want {
                    bad.push(format!("{mu} {nu} {lam}: {} vs {want}", k.value));
                }
                values.insert((mu.clone(), nu.clone(), lam.clone()), k.value);
            }
            Err(e) => bad.push(format!("{mu} {nu} {lam}: {e}")),
        }
    }
    let took = start.elapsed();
    let detail = format!(
        "{} of {} triples agree exactly in {took:.2?} (budget {SWEEP_BUDGET:?}){}",
        triples.len() - bad.len(),
        triples.len(),
        bad.first().map(|b| format!(", first mismatch {b}")).unwrap_or_default()
    );
    outcome(bad.is_empty() && took <= SWEEP_BUDGET, detail)
}

fn structural_suite() -> Outcome {
    let mut bad = Vec::new();
    for l in 2..=4 {
        for m in 2..=4 {
            let tilde = build_tilde(l, m, Chirality::Standard).unwrap();
            let bar = build_bar(l, m, Chirality::Standard).unwrap();
            let expected = vertex_count(l, m) + m;
            if expected != (l - 1) * (l + 2) + (l * l - 1) * (m - 2) + m {
                bad.push(format!("{l},{m}: vertex formula"));
            }
            for (name, q, w) in [("tilde", &tilde.quiver, &tilde.weights), ("bar", &bar.quiver, &bar.weights)] {
                if let Err(e) = w.check(q) {
                    bad.push(format!("{l},{m} {name}: {e}"));
                }
                if !BMatrix::of(q).has_full_row_rank() {
                    bad.push(format!("{l},{m} {name}: rank"));
                }
                if q.vertices().len() != expected {
                    bad.push(format!("{l},{m} {name}: {} vertices", q.vertices().len()));
                }
            }
            match weight_identity_violations(&bar) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => bad.push(format!("{l},{m}: {} weight identity violations", v.len())),
                Err(e) => bad.push(format!("{l},{m}: {e}")),
            }
        }
    }
    let detail =
        if bad.is_empty() { "9 sizes: balance, full rank, counts, weight identity".into() } else { bad.join("; ") };
    outcome(bad.is_empty(), detail)
}

fn exchange_sampling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let (mut relations, mut failures, mut skipped) = (0, 0, 0);
    let mut errors = Vec::new();
    for l in 2..=3 {
        for m in 2..=3 {
            let t = build_tilde(l, m, Chirality::Standard).unwrap();
            let mut done = 0;
            while done < EXCHANGE_SAMPLES {
                let rep = Representation::random(l, m, &mut rng, -5, 5);
                match check_exchange_relations(&t.quiver, l, m, &rep) {
                    Ok(r) => {
                        relations += r.checked;
                        failures += r.failures.len();
                        done += 1;
                    }
                    Err(SemiError::DegenerateSample(_)) => skipped += 1,
                    Err(e) => {
                        errors.push(e.to_string());
                        break;
                    }
                }
            }
        }
    }
    outcome(
        failures == 0 && errors.is_empty(),
        format!(
            "{failures} failures among {relations} relations, {EXCHANGE_SAMPLES} samples per size, {skipped} degenerate draws redrawn{}",
            errors.first().map(|e| format!(", error {e}")).unwrap_or_default()
        ),
    )
}

fn counting_soundness() -> Outcome {
    let cone = build_cone(2, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let mut targets: Vec<Vec<i64>> = Vec::new();
    while targets.len() < COUNT_TARGETS / 2 {
        let n = rng.gen_range(1..=5);
        let ps = Partition::with_length_at_most(n, 2);
        let pick = |rng: &mut ChaCha8Rng| ps[rng.gen_range(0..ps.len())].clone();
        let (mu, nu, lam) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let sigma = sigma_of(&mu, &nu, 2).unwrap();
        for s in lambda_shifts(&lam, 2).unwrap() {
            targets.push(theta(&sigma, &s));
        }
    }
    targets.truncate(COUNT_TARGETS / 2);
    while targets.len() < COUNT_TARGETS {
        let mut t: Vec<i64> = (0..6).map(|_| rng.gen_range(-3..=3)).collect();
        t[4] = t[4].abs();
        t[5] = t[5].abs();
        targets.push(t);
    }
    let (mut bad, mut nonzero) = (Vec::new(), 0);
    for t in &targets {
        let one = count_lattice_points_with(&cone, t, CountOptions { workers: 1, split_depth: 0 }).unwrap();
        let four = count_lattice_points_with(&cone, t, CountOptions { workers: 4, split_depth: 2 }).unwrap();
        let naive = brute_force_count(&cone, t, 50_000_000).unwrap();
        if one != naive || four != one {
            bad.push(format!("{t:?}: {one} / {four} / {naive}"));
        }
        if one > 0u32.into() {
            nonzero += 1;
        }
    }
    let detail = format!(
        "{} of {COUNT_TARGETS} targets ({nonzero} nonempty) agree with enumeration and across 1 and 4 workers{}",
        targets.len() - bad.len(),
        bad.first().map(|b| format!(", first mismatch {b}")).unwrap_or_default()
    );
    outcome(bad.is_empty(), detail)
}

fn symmetry_and_positivity(engine: &Engine, values: &Values) -> Outcome {
    let mut bad = Vec::new();
    for ((mu, nu, lam), v) in values {
        if *v < 0.into() {
            bad.push(format!("{mu} {nu} {lam}: negative"));
        }
        match values.get(&(nu.clone(), mu.clone(), lam.clone())) {
            Some(w) if w == v => {}
            w => bad.push(format!("{mu} {nu} {lam}: {v} vs swapped {w:?}")),
        }
    }
    let checked = values.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9ad);
    let triples = sweep_triples();
    for _ in 0..PADDING_SAMPLE {
        let (mu, nu, lam) = &triples[rng.gen_range(0..triples.len())];
        let (l, m) = default_sizes(mu, nu, lam);
        let base = &values[&(mu.clone(), nu.clone(), lam.clone())];
        for (pl, pm) in [(l + 1, m), (l, m + 1)] {
            match engine.kronecker(mu, nu, lam, Some(pl), Some(pm)) {
                Ok(k) if &k.value == base => {}
                r => bad.push(format!("{mu} {nu} {lam} at ({pl},{pm}): {:?}", r.map(|k| k.value))),
            }
        }
    }
    let detail = format!(
        "symmetry and nonnegativity on {checked} triples, padding l+1 and m+1 on {PADDING_SAMPLE}{}",
        bad.first().map(|b| format!(", first failure {b}")).unwrap_or_default()
    );
    outcome(bad.is_empty(), detail)
}

#[test]
fn acceptance() {
    let engine = Engine::default();
    let mut values = Values::new();
    let results = [
        facet_fixture(),
        path_fixtures(),
        oracle_sweep(&engine, &mut values),
        structural_suite(),
        exchange_sampling(),
        counting_soundness(),
        symmetry_and_positivity(&engine, &values),
    ];
    for (k, r) in results.iter().enumerate() {
        println!("criterion {}: {} ({})", k + 1, if r.passed { "PASS" } else { "FAIL" }, r.detail);
    }
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, r)| !r.passed).map(|(k, _)| k + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
