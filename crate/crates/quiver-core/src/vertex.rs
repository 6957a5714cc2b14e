use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::QuiverError;

/// A vertex of a glued hive quiver.
///
/// Hive vertices carry the diamond index `n`, hive coordinates `(i, j)` and a
/// dual flag. Det vertices stand for the central determinants `det a_n`.
/// The textual form is `(i,j,n)` for plain hive vertices, `(i,j,n)v` for dual
/// ones and `det<n>` for det vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexId {
    Hive { n: u32, i: u32, j: u32, dual: bool },
    Det { n: u32 },
}

impl VertexId {
    pub const fn hive(n: u32, i: u32, j: u32, dual: bool) -> Self {
        VertexId::Hive { n, i, j, dual }
    }

    pub const fn plain(n: u32, i: u32, j: u32) -> Self {
        VertexId::Hive { n, i, j, dual: false }
    }

    pub const fn det(n: u32) -> Self {
        VertexId::Det { n }
    }

    pub fn is_det(&self) -> bool {
        matches!(self, VertexId::Det { .. })
    }

    /// Diamond (or det) index.
    pub fn diamond(&self) -> u32 {
        match *self {
            VertexId::Hive { n, .. } | VertexId::Det { n } => n,
        }
    }

    fn sort_key(&self) -> (u8, u32, bool, u32, u32) {
        match *self {
            VertexId::Hive { n, i, j, dual } => (0, n, dual, i, j),
            VertexId::Det { n } => (1, n, false, 0, 0),
        }
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexId::Hive { n, i, j, dual } => {
                write!(f, "({i},{j},{n})")?;
                if dual {
                    f.write_str("v")?;
                }
                Ok(())
            }
            VertexId::Det { n } => write!(f, "det{n}"),
        }
    }
}

impl FromStr for VertexId {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QuiverError::BadLabel(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("det") {
            let n = rest.parse().map_err(|_| bad())?;
            return Ok(VertexId::Det { n });
        }
        let (body, dual) = match t.strip_suffix('v') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let inner = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let nums: Vec<u32> =
            inner.split(',').map(|x| x.trim().parse::<u32>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        match nums[..] {
            [i, j, n] => Ok(VertexId::Hive { n, i, j, dual }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
