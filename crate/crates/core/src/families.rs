//! Generators for the named graph families and the edge degree-class census.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::{bouquet_mapped, chain, circuit_mapped, identify, link, Anchored};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Edge counts keyed by the endpoint degree pair `(larger, smaller)`.
pub type DegreeClasses = BTreeMap<(usize, usize), usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    QMn,
    Spiro,
    Polyphenylene,
    ChainTriangular,
    ParaSquare,
    OrthoSquare,
    OrthoHex,
    ParaHex,
    MetaHex,
    Triangulane,
    DendrimerD3,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::QMn,
        Family::Spiro,
        Family::Polyphenylene,
        Family::ChainTriangular,
        Family::ParaSquare,
        Family::OrthoSquare,
        Family::OrthoHex,
        Family::ParaHex,
        Family::MetaHex,
        Family::Triangulane,
        Family::DendrimerD3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::QMn => "Q_MN",
            Family::Spiro => "SPIRO",
            Family::Polyphenylene => "POLYPHENYLENE",
            Family::ChainTriangular => "CHAIN_TRIANGULAR",
            Family::ParaSquare => "PARA_SQUARE",
            Family::OrthoSquare => "ORTHO_SQUARE",
            Family::OrthoHex => "ORTHO_HEX",
            Family::ParaHex => "PARA_HEX",
            Family::MetaHex => "META_HEX",
            Family::Triangulane => "TRIANGULANE",
            Family::DendrimerD3 => "DENDRIMER_D3",
        }
    }

    /// Cell size and contact offset of the single-parameter chain cacti.
    pub fn chain_cell(self) -> Option<(usize, usize)> {
        match self {
            Family::ChainTriangular => Some((3, 1)),
            Family::ParaSquare => Some((4, 2)),
            Family::OrthoSquare => Some((4, 1)),
            Family::ParaHex => Some((6, 3)),
            Family::MetaHex => Some((6, 2)),
            Family::OrthoHex => Some((6, 1)),
            _ => None,
        }
    }

    /// Builds a spec from loose parameters, as supplied on the command line.
    pub fn with_params(self, p: &Params) -> Result<FamilySpec> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| {
                Error::InvalidParams(format!("{} needs parameter {name}", self.name()))
            })
        };
        let spec = match self {
            Family::QMn => FamilySpec::QMn {
                m: need(p.m, "m")?,
                n: need(p.n, "n")?,
            },
            Family::Spiro => FamilySpec::Spiro {
                q: need(p.q, "q")?,
                h: need(p.h, "h")?,
                k: need(p.k, "k")?,
            },
            Family::Polyphenylene => FamilySpec::Polyphenylene {
                q: need(p.q, "q")?,
                h: need(p.h, "h")?,
                k: need(p.k, "k")?,
            },
            Family::Triangulane => FamilySpec::Triangulane {
                k: need(p.k.or(p.n), "k")?,
            },
            Family::DendrimerD3 => FamilySpec::DendrimerD3 {
                n: need(p.n, "n")?,
            },
            chain_family => FamilySpec::chain(chain_family, need(p.n, "n")?)?,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || (key == "QMN" && *f == Family::QMn))
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {s:?}")))
    }
}

/// Optional named parameters, filled in from whatever the caller has.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub q: Option<usize>,
    pub h: Option<usize>,
    pub k: Option<usize>,
}

/// One family member, named by its family and integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilySpec {
    QMn { m: usize, n: usize },
    Spiro { q: usize, h: usize, k: usize },
    Polyphenylene { q: usize, h: usize, k: usize },
    ChainTriangular { n: usize },
    ParaSquare { n: usize },
    OrthoSquare { n: usize },
    OrthoHex { n: usize },
    ParaHex { n: usize },
    MetaHex { n: usize },
    Triangulane { k: usize },
    DendrimerD3 { n: usize },
}

impl FamilySpec {
    /// Chain cactus of `n` cells for one of the six single-parameter chain families.
    pub fn chain(family: Family, n: usize) -> Result<Self> {
        Ok(match family {
            Family::ChainTriangular => FamilySpec::ChainTriangular { n },
            Family::ParaSquare => FamilySpec::ParaSquare { n },
            Family::OrthoSquare => FamilySpec::OrthoSquare { n },
            Family::OrthoHex => FamilySpec::OrthoHex { n },
            Family::ParaHex => FamilySpec::ParaHex { n },
            Family::MetaHex => FamilySpec::MetaHex { n },
            other => {
                return Err(Error::InvalidParams(format!(
                    "{other} is not a chain cactus family"
                )))
            }
        })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::QMn { .. } => Family::QMn,
            FamilySpec::Spiro { .. } => Family::Spiro,
            FamilySpec::Polyphenylene { .. } => Family::Polyphenylene,
            FamilySpec::ChainTriangular { .. } => Family::ChainTriangular,
            FamilySpec::ParaSquare { .. } => Family::ParaSquare,
            FamilySpec::OrthoSquare { .. } => Family::OrthoSquare,
            FamilySpec::OrthoHex { .. } => Family::OrthoHex,
            FamilySpec::ParaHex { .. } => Family::ParaHex,
            FamilySpec::MetaHex { .. } => Family::MetaHex,
            FamilySpec::Triangulane { .. } => Family::Triangulane,
            FamilySpec::DendrimerD3 { .. } => Family::DendrimerD3,
        }
    }

    /// Order `n` of a chain cactus spec.
    pub fn chain_order(&self) -> Option<usize> {
        match *self {
            FamilySpec::ChainTriangular { n }
            | FamilySpec::ParaSquare { n }
            | FamilySpec::OrthoSquare { n }
            | FamilySpec::OrthoHex { n }
            | FamilySpec::ParaHex { n }
            | FamilySpec::MetaHex { n } => Some(n),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(format!("{self}: {msg}")));
        match *self {
            FamilySpec::QMn { m, n } if m < 2 || n < 2 => bad("need m >= 2 and n >= 2".into()),
            FamilySpec::Spiro { q, h, k } | FamilySpec::Polyphenylene { q, h, k } => {
                if q < 3 {
                    bad("need q >= 3".into())
                } else if h < 1 || h > q / 2 {
                    bad(format!("need 1 <= h <= {}", q / 2))
                } else if k < 1 {
                    bad("need k >= 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Triangulane { k } if k < 1 => bad("need k >= 1".into()),
            FamilySpec::DendrimerD3 { n } if n < 1 => bad("need n >= 1".into()),
            _ => match self.chain_order() {
                Some(0) => bad("need n >= 1".into()),
                _ => Ok(()),
            },
        }
    }

    /// Named parameters in a fixed order, for reports.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            FamilySpec::QMn { m, n } => vec![("m", m), ("n", n)],
            FamilySpec::Spiro { q, h, k } | FamilySpec::Polyphenylene { q, h, k } => {
                vec![("q", q), ("h", h), ("k", k)]
            }
            FamilySpec::Triangulane { k } => vec![("k", k)],
            FamilySpec::DendrimerD3 { n } => vec![("n", n)],
            _ => vec![("n", self.chain_order().expect("chain family"))],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params()
            .into_iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        write!(f, "{}({})", self.family(), params.join(","))
    }
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::QMn { m, n } => {
            let kn = Graph::complete(n);
            (0..m).try_fold(Graph::complete(m), |g, i| identify(&g, i, &kn, 0))
        }
        FamilySpec::Spiro { q, h, k } => chain(&cells(q, h, k)),
        FamilySpec::Polyphenylene { q, h, k } => link(&cells(q, h, k)),
        FamilySpec::Triangulane { k } => triangulane(k),
        FamilySpec::DendrimerD3 { n } => dendrimer(n),
        _ => {
            let (q, h) = spec.family().chain_cell().expect("chain family");
            chain(&cells(q, h, spec.chain_order().expect("chain family")))
        }
    }
}

fn cells(q: usize, h: usize, count: usize) -> Vec<Anchored> {
    let cell = Anchored::pair(Graph::cycle(q), 0, h).expect("offset below q");
    vec![cell; count]
}

/// Rooted wing `G_k`: a triangle for `k = 1`, then the circuit of two copies of
/// `G_{k-1}` and a new root vertex.
fn triangulane_wing(k: usize) -> Anchored {
    let mut wing = Anchored::single(Graph::complete(3), 0).expect("vertex 0");
    for _ in 1..k {
        let comp = circuit_mapped(&[wing.clone(), wing, Anchored::point()])
            .expect("three parts");
        let root = comp.maps[2][0];
        wing = Anchored::single(comp.graph, root).expect("root in range");
    }
    wing
}

fn triangulane(k: usize) -> Result<Graph> {
    let wing = triangulane_wing(k);
    Ok(circuit_mapped(&[wing.clone(), wing.clone(), wing])?.graph)
}

/// Hexagon `0..6` with pendant leaves on the given hexagon vertices, numbered from 6.
fn hexagon_with_leaves(at: &[Vertex]) -> Graph {
    let hex = Graph::cycle(6);
    let n = 6 + at.len();
    let leaves = at.iter().enumerate().map(|(i, &v)| (v, 6 + i));
    Graph::new(n, hex.edges().iter().copied().chain(leaves)).expect("simple")
}

/// Dendrimer branch `H_m`, rooted at a pendant vertex.
///
/// `H_0` is a hexagon with one leaf (the root). `H_m` is the bouquet of two
/// copies of `H_{m-1}` and the unit `F` (a hexagon with leaves at two
/// para-positions) at their roots; the root of `H_m` is the free leaf of `F`.
fn dendrimer_branch(m: usize) -> Anchored {
    let unit = Anchored::single(hexagon_with_leaves(&[0, 3]), 6).expect("leaf 6");
    let free_leaf = 7;
    let mut branch = Anchored::single(hexagon_with_leaves(&[0]), 6).expect("leaf 6");
    for _ in 0..m {
        let comp = bouquet_mapped(&[branch.clone(), branch, unit.clone()]).expect("nonempty");
        let root = comp.maps[2][free_leaf];
        branch = Anchored::single(comp.graph, root).expect("root in range");
    }
    branch
}

fn dendrimer(n: usize) -> Result<Graph> {
    let b = dendrimer_branch(n);
    Ok(bouquet_mapped(&[b.clone(), b.clone(), b])?.graph)
}

/// Edge census by endpoint degrees, keyed `(larger, smaller)`.
pub fn edge_degree_classes(g: &Graph) -> DegreeClasses {
    let deg = g.degrees();
    let mut out = DegreeClasses::new();
    for &(u, v) in g.edges() {
        let (a, b) = (deg[u], deg[v]);
        *out.entry((a.max(b), a.min(b))).or_insert(0) += 1;
    }
    out
}

/// The grid each family is verified on by default.
pub fn default_grid(family: Family) -> Vec<FamilySpec> {
    match family {
        Family::QMn => (2..=6)
            .flat_map(|m| (2..=6).map(move |n| FamilySpec::QMn { m, n }))
            .collect(),
        Family::Spiro | Family::Polyphenylene => {
            let mut out = Vec::new();
            for q in 3..=8 {
                for h in 1..=q / 2 {
                    for k in 1..=6 {
                        out.push(if family == Family::Spiro {
                            FamilySpec::Spiro { q, h, k }
                        } else {
                            FamilySpec::Polyphenylene { q, h, k }
                        });
                    }
                }
            }
            out
        }
        Family::Triangulane => (1..=4).map(|k| FamilySpec::Triangulane { k }).collect(),
        Family::DendrimerD3 => (1..=3).map(|n| FamilySpec::DendrimerD3 { n }).collect(),
        chain_family => (1..=8)
            .map(|n| FamilySpec::chain(chain_family, n).expect("chain family"))
            .collect(),
    }
}
