//! On-disk cone cache: one JSON file per construction, guarded by a
//! SHA-256 of the cone document.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use boundary_reps::DiagonalOrientation;
use diamond_builder::Chirality;
use polyhedra::{build_cone_with, Cone, ConeDoc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Serialize, Deserialize)]
struct Entry {
    sha256: String,
    cone: ConeDoc,
}

fn digest(doc: &ConeDoc) -> Result<String, CliError> {
    let bytes = serde_json::to_vec(doc)?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

pub fn entry_path(dir: &Path, l: usize, m: usize, chirality: Chirality, orientation: DiagonalOrientation) -> PathBuf {
    let c = match chirality {
        Chirality::Standard => "standard",
        Chirality::Mirrored => "mirrored",
    };
    let o = match orientation {
        DiagonalOrientation::Socle => "socle",
        DiagonalOrientation::Opposite => "opposite",
    };
    dir.join(format!("cone-l{l}-m{m}-{c}-{o}.json"))
}

/// A cached cone whose hash checks out, or `None`.
fn load(path: &Path) -> Option<Cone> {
    let text = fs::read(path).ok()?;
    let entry: Entry = serde_json::from_slice(&text).ok()?;
    if digest(&entry.cone).ok()? != entry.sha256 {
        return None;
    }
    Cone::from_doc(&entry.cone).ok()
}

fn store(dir: &Path, path: &Path, cone: &Cone) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    fs::create_dir_all(dir).map_err(io)?;
    let doc = cone.to_doc();
    let entry = Entry { sha256: digest(&doc)?, cone: doc };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(&serde_json::to_vec(&entry)?).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Loads a cone from `dir`, rebuilding (and rewriting) missing or corrupt entries.
pub fn cone(
    dir: Option<&Path>,
    l: usize,
    m: usize,
    chirality: Chirality,
    orientation: DiagonalOrientation,
) -> Result<Cone, CliError> {
    let Some(dir) = dir else { return Ok(build_cone_with(l, m, chirality, orientation)?) };
    let path = entry_path(dir, l, m, chirality, orientation);
    if let Some(c) = load(&path) {
        if (c.l, c.m) == (l, m) {
            return Ok(c);
        }
    }
    let c = build_cone_with(l, m, chirality, orientation)?;
    store(dir, &path, &c)?;
    Ok(c)
}
