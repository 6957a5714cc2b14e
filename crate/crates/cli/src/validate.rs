use boundary_reps::{boundary_path, weight_identity_violations};
use diamond_builder::{build_bar, build_tilde, check_size, vertex_count, Chirality};
use kronecker::{kronecker_oracle_with_bound, Engine, Partition};
use polyhedra::Breakdown;
use quiver_core::{BMatrix, IceQuiver, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semiinvariants::{check_exchange_relations, Representation, SemiError};
use serde::Serialize;

use crate::args::Level;
use crate::commands::RunConfig;
use crate::{cache, CliError};

#[derive(Serialize, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub l: String,
    pub m: String,
    pub level: Level,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Suite(Vec<Check>);

impl Suite {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

fn weights_balance(name: &str, suite: &mut Suite, q: &IceQuiver, w: &quiver_core::WeightConfig) {
    match w.check(q) {
        Ok(()) => suite.push(name, true, format!("{} mutable vertices", q.mutable_vertices().len())),
        Err(e) => suite.push(name, false, e.to_string()),
    }
}

/// Exchange relations on `samples` non-degenerate random representations.
fn exchange(q: &IceQuiver, l: usize, m: usize, samples: usize) -> Result<(usize, usize), SemiError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut done, mut checked, mut failures) = (0, 0, 0);
    let mut attempts = 0;
    while done < samples {
        attempts += 1;
        if attempts > 50 * samples {
            break;
        }
        let rep = Representation::random(l, m, &mut rng, -5, 5);
        match check_exchange_relations(q, l, m, &rep) {
            Ok(r) => {
                checked += r.checked;
                failures += r.failures.len();
                done += 1;
            }
            Err(SemiError::DegenerateSample(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if done < samples {
        return Err(SemiError::DegenerateSample(VertexId::det(1)));
    }
    Ok((checked, failures))
}

const FIXTURE_PATHS: [(&str, [&str; 10]); 2] = [
    (
        "(0,1,3)",
        [
            "(0,1,3)v", "(1,1,3)v", "(2,0,3)", "(1,2,2)", "(1,1,2)", "(1,0,2)", "(0,1,1)", "(1,1,2)", "(2,1,2)",
            "(0,1,3)",
        ],
    ),
    (
        "(0,2,3)",
        [
            "(0,2,3)v", "(1,0,3)", "(1,1,3)", "(2,1,2)", "(2,0,2)", "(1,1,2)v", "(0,2,1)", "(1,2,2)", "(1,1,3)",
            "(0,2,3)",
        ],
    ),
];

pub fn run(cfg: &RunConfig, l: usize, m: usize) -> Result<Report, CliError> {
    check_size(l, m)?;
    let mut s = Suite(Vec::new());
    let tilde = build_tilde(l, m, Chirality::Standard)?;
    let bar = build_bar(l, m, Chirality::Standard)?;
    weights_balance("tilde_weights_balance", &mut s, &tilde.quiver, &tilde.weights);
    weights_balance("bar_weights_balance", &mut s, &bar.quiver, &bar.weights);
    for (name, q) in [("tilde_full_row_rank", &tilde.quiver), ("bar_full_row_rank", &bar.quiver)] {
        let b = BMatrix::of(q);
        s.push(name, b.has_full_row_rank(), format!("{} x {}", b.rows.len(), b.cols.len()));
    }
    let expected = vertex_count(l, m) + m;
    for (name, q) in [("tilde_vertex_count", &tilde.quiver), ("bar_vertex_count", &bar.quiver)] {
        let n = q.vertices().len();
        s.push(name, n == expected, format!("{n} vertices, expected {expected}"));
    }

    let samples = match cfg.level {
        Level::Quick => 5,
        Level::Full => 100,
    };
    match exchange(&tilde.quiver, l, m, samples) {
        Ok((checked, 0)) => s.push("exchange_relations", true, format!("{checked} relations on {samples} samples")),
        Ok((checked, f)) => s.push("exchange_relations", false, format!("{f} of {checked} relations fail")),
        Err(e) => s.push("exchange_relations", false, e.to_string()),
    }

    let mut walks = Vec::new();
    let mut walk_errors = Vec::new();
    for v in bar.boundary_frozen() {
        match boundary_path(&bar, &v) {
            Ok(p) if p.missing_arrows(&bar.quiver).is_empty() => walks.push((v, p)),
            Ok(_) => walk_errors.push(format!("{v}: not an arrow walk")),
            Err(e) => walk_errors.push(e.to_string()),
        }
    }
    s.push(
        "boundary_paths",
        walk_errors.is_empty(),
        if walk_errors.is_empty() { format!("{} path modules", walks.len()) } else { walk_errors.join("; ") },
    );
    if (l, m) == (3, 3) {
        let mut bad = Vec::new();
        for (target, labels) in FIXTURE_PATHS {
            let want: Vec<VertexId> = labels.iter().map(|x| x.parse().expect("fixture label")).collect();
            let got = walks.iter().find(|(v, _)| v.to_string() == target).map(|(_, p)| &p.path);
            if got != Some(&want) {
                bad.push(target);
            }
        }
        s.push("fixture_paths", bad.is_empty(), if bad.is_empty() { "both verbatim".into() } else { bad.join(", ") });
    }
    match weight_identity_violations(&bar) {
        Ok(v) if v.is_empty() => s.push("weight_dimension_identity", true, "holds at every vertex"),
        Ok(v) => s.push("weight_dimension_identity", false, format!("{} violations", v.len())),
        Err(e) => s.push("weight_dimension_identity", false, e.to_string()),
    }

    let cone =
        cache::cone(cfg.cache_dir.as_deref(), l, m, Chirality::Standard, boundary_reps::DiagonalOrientation::Socle)?;
    let facets = cone.facets.len();
    let breakdown = cone
        .breakdown
        .unwrap_or_else(|| polyhedra::build_cone(l, m).ok().and_then(|c| c.breakdown).unwrap_or_default());
    let detail = format!(
        "{facets} facets ({} boundary, {} diagonal, {} simple), dimension {}",
        breakdown.boundary,
        breakdown.diagonal,
        breakdown.simple,
        cone.dim()
    );
    let fixture = (l, m) != (3, 3) || (facets == 43 && breakdown == Breakdown { boundary: 36, diagonal: 6, simple: 1 });
    s.push("facets", fixture && facets == breakdown.boundary + breakdown.diagonal + breakdown.simple, detail);

    if cfg.level == Level::Full {
        let engine = Engine::new(Chirality::Standard, boundary_reps::DiagonalOrientation::Socle, cfg.count_options());
        engine.insert_cone(cone);
        let mut total = 0;
        let mut bad = Vec::new();
        for n in 1..=6u32 {
            let sides = Partition::with_length_at_most(n, l);
            let lams = Partition::with_length_at_most(n, m);
            for mu in &sides {
                for nu in &sides {
                    for lam in &lams {
                        total += 1;
                        let got = engine.kronecker(mu, nu, lam, Some(l), Some(m)).map(|k| k.value);
                        let want = kronecker_oracle_with_bound(mu, nu, lam, cfg.oracle_bound);
                        match (got, want) {
                            (Ok(a), Ok(b)) if a == b => {}
                            (a, b) => bad.push(format!("{mu} {nu} {lam}: {a:?} vs {b:?}")),
                        }
                    }
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{total} triples agree")
        } else {
            format!("{} of {total} disagree, first {}", bad.len(), bad[0])
        };
        s.push("oracle_sweep", bad.is_empty(), detail);
    }
    let passed = s.0.iter().all(|c| c.passed);
    Ok(Report { l: l.to_string(), m: m.to_string(), level: cfg.level, passed, checks: s.0 })
}
