use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kron", version, about = "Kronecker coefficients by lattice-point counting")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by all commands.
#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Cone cache directory.
    #[arg(long, global = true, env = "KRON_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for lattice-point counting.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    /// Largest n the character oracle accepts.
    #[arg(long, global = true, default_value_t = 12)]
    pub oracle_bound: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kronecker coefficient through lattice-point counts.
    Coeff {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Also evaluate the character oracle and fail on disagreement.
        #[arg(long)]
        verify: bool,
        /// Print the per-permutation breakdown as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Kronecker coefficient from symmetric-group characters.
    Oracle {
        #[command(flatten)]
        triple: Triple,
    },
    /// Write a quiver and its weights as JSON.
    BuildQuiver {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Stage::Bar)]
        stage: Stage,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the cone as JSON.
    Cone {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Orientation::Socle)]
        orientation: Orientation,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lattice points in one fibre.
    Count {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        /// Target weight `σ(-1..-l), σ(1..l), λ(1..m)`, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant checks and print a JSON report.
    Validate {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Triple {
    /// Comma-separated parts, e.g. 2,1.
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub nu: String,
    #[arg(long)]
    pub lam: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Tilde,
    Bar,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Socle,
    Opposite,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}
