use std::fs;
use std::path::{Path, PathBuf};

use boundary_reps::DiagonalOrientation;
use diamond_builder::{build_bar, build_tilde, check_size, Chirality};
use kronecker::{default_sizes, kronecker_oracle_with_bound, Engine, KronError, Kronecker, Partition};
use polyhedra::{count_lattice_points_with, CountOptions};
use serde_json::{json, Value};

use crate::args::{Level, Orientation, RunArgs, Stage, Triple};
use crate::{cache, CliError};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cache_dir: Option<PathBuf>,
    pub workers: usize,
    pub oracle_bound: u32,
    pub level: Level,
}

impl RunConfig {
    pub fn from_args(a: &RunArgs) -> Self {
        let workers = a.workers.map_or_else(|| CountOptions::default().workers, |w| w as usize);
        RunConfig { cache_dir: a.cache_dir.clone(), workers, oracle_bound: a.oracle_bound, level: Level::Quick }
    }

    pub fn count_options(&self) -> CountOptions {
        CountOptions { workers: self.workers, ..CountOptions::default() }
    }
}

fn partition(flag: &str, s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e: KronError| CliError::Usage(format!("--{flag}: {e}")))
}

fn triple(t: &Triple) -> Result<(Partition, Partition, Partition), CliError> {
    Ok((partition("mu", &t.mu)?, partition("nu", &t.nu)?, partition("lam", &t.lam)?))
}

fn parts(p: &Partition) -> Value {
    json!(p.parts().iter().map(u32::to_string).collect::<Vec<_>>())
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    json!(xs.iter().map(T::to_string).collect::<Vec<_>>())
}

fn emit(out: Option<&Path>, text: String) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text + "\n").map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn coeff(
    cfg: &RunConfig,
    t: &Triple,
    l: Option<usize>,
    m: Option<usize>,
    verify: bool,
    as_json: bool,
) -> Result<(), CliError> {
    let (mu, nu, lam) = triple(t)?;
    if mu.size() != nu.size() || mu.size() != lam.size() {
        let other = if mu.size() != nu.size() { nu.size() } else { lam.size() };
        return Err(KronError::SizeMismatch(mu.size(), other).into());
    }
    let (dl, dm) = default_sizes(&mu, &nu, &lam);
    let (l, m) = (l.unwrap_or(dl), m.unwrap_or(dm));
    check_size(l, m)?;
    let engine = Engine::new(Chirality::Standard, DiagonalOrientation::Socle, cfg.count_options());
    // validate lengths before touching the cache
    kronecker::sigma_of(&mu, &nu, l)?;
    kronecker::lambda_shifts(&lam, m)?;
    engine.insert_cone(cache::cone(cfg.cache_dir.as_deref(), l, m, Chirality::Standard, DiagonalOrientation::Socle)?);
    let k: Kronecker = engine.kronecker(&mu, &nu, &lam, Some(l), Some(m))?;
    let oracle = if verify {
        match kronecker_oracle_with_bound(&mu, &nu, &lam, cfg.oracle_bound) {
            Ok(v) => Some(v),
            Err(KronError::SizeTooLargeForOracle { n, bound }) => {
                eprintln!("warning: n = {n} exceeds the oracle bound {bound}; result is unverified");
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    if as_json {
        let terms: Vec<Value> = k
            .terms
            .iter()
            .map(|t| {
                json!({
                    "omega": strings(&t.shift.omega),
                    "lambda": strings(&t.shift.lambda),
                    "sign": t.shift.sign.to_string(),
                    "theta": strings(&t.theta),
                    "count": t.count.to_string(),
                })
            })
            .collect();
        let mut doc = json!({
            "mu": parts(&mu), "nu": parts(&nu), "lam": parts(&lam),
            "l": k.l.to_string(), "m": k.m.to_string(),
            "value": k.value.to_string(),
            "terms": terms,
        });
        if let Some(o) = &oracle {
            doc["oracle"] = json!(o.to_string());
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{}", k.value);
    }
    match oracle {
        Some(o) if o != k.value => Err(CliError::Mismatch(format!("lattice count {} but oracle {}", k.value, o))),
        _ => Ok(()),
    }
}

pub fn oracle(cfg: &RunConfig, t: &Triple) -> Result<(), CliError> {
    let (mu, nu, lam) = triple(t)?;
    println!("{}", kronecker_oracle_with_bound(&mu, &nu, &lam, cfg.oracle_bound)?);
    Ok(())
}

pub fn build_quiver(l: usize, m: usize, stage: Stage, out: Option<&Path>) -> Result<(), CliError> {
    check_size(l, m)?;
    let (quiver, weights) = match stage {
        Stage::Tilde => {
            let t = build_tilde(l, m, Chirality::Standard)?;
            (t.quiver, t.weights)
        }
        Stage::Bar => {
            let b = build_bar(l, m, Chirality::Standard)?;
            (b.quiver, b.weights)
        }
    };
    let stage = match stage {
        Stage::Tilde => "tilde",
        Stage::Bar => "bar",
    };
    let doc = json!({
        "l": l.to_string(),
        "m": m.to_string(),
        "stage": stage,
        "quiver": quiver,
        "weights": weights,
    });
    emit(out, serde_json::to_string_pretty(&doc)?)
}

pub fn cone(cfg: &RunConfig, l: usize, m: usize, o: Orientation, out: Option<&Path>) -> Result<(), CliError> {
    check_size(l, m)?;
    let o = match o {
        Orientation::Socle => DiagonalOrientation::Socle,
        Orientation::Opposite => DiagonalOrientation::Opposite,
    };
    let c = cache::cone(cfg.cache_dir.as_deref(), l, m, Chirality::Standard, o)?;
    emit(out, serde_json::to_string_pretty(&c.to_doc())?)
}

pub fn count(cfg: &RunConfig, l: usize, m: usize, theta: &str, as_json: bool) -> Result<(), CliError> {
    check_size(l, m)?;
    let theta: Vec<i64> = theta
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("--theta: bad integer {s:?}"))))
        .collect::<Result<_, _>>()?;
    let c = cache::cone(cfg.cache_dir.as_deref(), l, m, Chirality::Standard, DiagonalOrientation::Socle)?;
    let n = count_lattice_points_with(&c, &theta, cfg.count_options())?;
    if as_json {
        let doc = json!({ "l": l.to_string(), "m": m.to_string(), "theta": strings(&theta), "count": n.to_string() });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{n}");
    }
    Ok(())
}
