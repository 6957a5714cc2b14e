use std::path::PathBuf;

use diamond_builder::BuildError;
use kronecker::KronError;
use polyhedra::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("the fibre is unbounded")]
    Unbounded,
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Kron(KronError),
    #[error(transparent)]
    Poly(PolyError),
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::UnboundedFibre => CliError::Unbounded,
            PolyError::LengthMismatch { .. } => CliError::Usage(e.to_string()),
            PolyError::Build(b) => CliError::Build(b),
            e => CliError::Poly(e),
        }
    }
}

impl From<KronError> for CliError {
    fn from(e: KronError) -> Self {
        match e {
            KronError::Poly(p) => p.into(),
            KronError::NegativeCoefficient(_) => CliError::Mismatch(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 2,
            CliError::Unbounded => 3,
            _ => 1,
        }
    }
}
