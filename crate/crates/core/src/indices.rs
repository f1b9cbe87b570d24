//! ABC, ABC_GG and Wiener indices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::scalar::{radical, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Abc,
    AbcGg,
    Wiener,
}

impl IndexKind {
    pub const ALL: [IndexKind; 3] = [IndexKind::Abc, IndexKind::AbcGg, IndexKind::Wiener];

    /// Lowercase key used in JSON/CSV output and on the command line.
    pub fn key(self) -> &'static str {
        match self {
            IndexKind::Abc => "abc",
            IndexKind::AbcGg => "abc_gg",
            IndexKind::Wiener => "wiener",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::Abc => "ABC",
            IndexKind::AbcGg => "ABC_GG",
            IndexKind::Wiener => "WIENER",
        })
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "abc" => Ok(IndexKind::Abc),
            "abc_gg" | "gg" => Ok(IndexKind::AbcGg),
            "wiener" | "w" => Ok(IndexKind::Wiener),
            other => Err(Error::InvalidParams(format!("unknown index {other:?}"))),
        }
    }
}

/// Sum over edges of `sqrt((d_u + d_v - 2) / (d_u d_v))`.
///
/// Works on disconnected graphs; isolated vertices are rejected.
pub fn abc<T: Scalar>(g: &Graph) -> Result<T> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.edges().iter().map(|&(u, v)| radical::<T>(deg[u], deg[v])).sum())
}

/// Sum over edges of `sqrt((n_u + n_v - 2) / (n_u n_v))`. Requires a connected graph.
pub fn abc_gg<T: Scalar>(g: &Graph) -> Result<T> {
    Ok(g
        .proximity_pairs()?
        .into_iter()
        .map(|(_, p)| radical::<T>(p.n_u, p.n_v))
        .sum())
}

/// ABC_GG summed over connected components, each evaluated on its own.
pub fn abc_gg_componentwise<T: Scalar>(g: &Graph) -> Result<T> {
    let mut total = T::zero();
    for comp in g.components() {
        total = total + abc_gg::<T>(&g.induced(&comp)?)?;
    }
    Ok(total)
}

/// Sum of distances over unordered vertex pairs. Requires a connected graph.
pub fn wiener(g: &Graph) -> Result<u64> {
    let mut twice = 0u64;
    for s in 0..g.num_vertices() {
        for d in g.bfs_distances(s)? {
            if d == UNREACHABLE {
                return Err(Error::NotConnected);
            }
            twice += d as u64;
        }
    }
    Ok(twice / 2)
}

pub fn compute<T: Scalar>(g: &Graph, kind: IndexKind) -> Result<T> {
    match kind {
        IndexKind::Abc => abc(g),
        IndexKind::AbcGg => abc_gg(g),
        IndexKind::Wiener => {
            let w = wiener(g)?;
            T::from_u64(w).ok_or_else(|| Error::InvalidParams(format!("{w} overflows scalar")))
        }
    }
}
