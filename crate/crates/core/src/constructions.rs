//! Point-attaching constructions: identify, link, chain, bouquet and circuit.
//!
//! Output numbering is deterministic. Parts are laid out left to right, each
//! part keeps its internal order, and a merged vertex takes the index it
//! already received from the earlier part.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A graph with an ordered list of distinguished vertices.
///
/// `link` and `chain` read `anchors[0]` as `x` and `anchors[1]` as `y`;
/// `bouquet` and `circuit` read only `anchors[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchored {
    pub graph: Graph,
    pub anchors: Vec<Vertex>,
}

impl Anchored {
    pub fn new(graph: Graph, anchors: Vec<Vertex>) -> Result<Self> {
        for &a in &anchors {
            graph.check_vertex(a)?;
        }
        Ok(Anchored { graph, anchors })
    }

    pub fn single(graph: Graph, x: Vertex) -> Result<Self> {
        Anchored::new(graph, vec![x])
    }

    pub fn pair(graph: Graph, x: Vertex, y: Vertex) -> Result<Self> {
        Anchored::new(graph, vec![x, y])
    }

    /// `K_1` anchored at its only vertex.
    pub fn point() -> Self {
        Anchored {
            graph: Graph::empty(1),
            anchors: vec![0, 0],
        }
    }

    fn anchor(&self, part: usize, position: usize) -> Result<Vertex> {
        let a = *self
            .anchors
            .get(position)
            .ok_or(Error::MissingAnchor { part, position })?;
        self.graph.check_vertex(a)?;
        Ok(a)
    }
}

/// Composed graph together with where each part's vertices ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    /// `maps[i][w]` is the index of vertex `w` of part `i` in `graph`.
    pub maps: Vec<Vec<Vertex>>,
}

#[derive(Default)]
struct Builder {
    num_vertices: usize,
    edges: Vec<(Vertex, Vertex)>,
    maps: Vec<Vec<Vertex>>,
}

impl Builder {
    /// Appends `g`; if `merge = (w, target)`, vertex `w` is identified with the existing `target`.
    fn place(&mut self, g: &Graph, merge: Option<(Vertex, Vertex)>) -> &[Vertex] {
        let mut map = Vec::with_capacity(g.num_vertices());
        for w in 0..g.num_vertices() {
            match merge {
                Some((m, target)) if m == w => map.push(target),
                _ => {
                    map.push(self.num_vertices);
                    self.num_vertices += 1;
                }
            }
        }
        self.edges
            .extend(g.edges().iter().map(|&(a, b)| (map[a], map[b])));
        self.maps.push(map);
        self.maps.last().expect("just pushed")
    }

    fn finish(self) -> Result<Composition> {
        let graph = Graph::new(self.num_vertices, self.edges).map_err(|e| match e {
            Error::DuplicateEdge(u, v) => Error::DuplicateEdgeCreated(u, v),
            other => other,
        })?;
        Ok(Composition {
            graph,
            maps: self.maps,
        })
    }
}

/// Glues `g2` onto `g1` by identifying `v2` with `v1`.
pub fn identify(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> Result<Graph> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let mut b = Builder::default();
    b.place(g1, None);
    b.place(g2, Some((v2, v1)));
    Ok(b.finish()?.graph)
}

pub fn link(parts: &[Anchored]) -> Result<Graph> {
    Ok(link_mapped(parts)?.graph)
}

/// Joins `y_i` to `x_{i+1}` by a new bridge edge for every consecutive pair.
pub fn link_mapped(parts: &[Anchored]) -> Result<Composition> {
    if parts.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut b = Builder::default();
    let mut prev_y = None;
    let last = parts.len() - 1;
    for (i, p) in parts.iter().enumerate() {
        let x = if i > 0 { Some(p.anchor(i, 0)?) } else { None };
        let y = if i < last { Some(p.anchor(i, 1)?) } else { None };
        let map = b.place(&p.graph, None).to_vec();
        if let (Some(py), Some(x)) = (prev_y, x) {
            b.edges.push((py, map[x]));
        }
        prev_y = y.map(|y| map[y]);
    }
    b.finish()
}

pub fn chain(parts: &[Anchored]) -> Result<Graph> {
    Ok(chain_mapped(parts)?.graph)
}

/// Identifies `y_i` with `x_{i+1}` for every consecutive pair.
pub fn chain_mapped(parts: &[Anchored]) -> Result<Composition> {
    if parts.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut b = Builder::default();
    let mut prev_y = None;
    let last = parts.len() - 1;
    for (i, p) in parts.iter().enumerate() {
        let x = if i > 0 { Some(p.anchor(i, 0)?) } else { None };
        let y = if i < last { Some(p.anchor(i, 1)?) } else { None };
        if let (Some(x), Some(y)) = (x, y) {
            if x == y && p.graph.num_vertices() > 1 {
                return Err(Error::DegenerateAnchors { part: i });
            }
        }
        let merge = match (prev_y, x) {
            (Some(py), Some(x)) => Some((x, py)),
            _ => None,
        };
        let map = b.place(&p.graph, merge);
        prev_y = y.map(|y| map[y]);
    }
    b.finish()
}

pub fn bouquet(parts: &[Anchored]) -> Result<Graph> {
    Ok(bouquet_mapped(parts)?.graph)
}

/// Identifies every `x_i` into one vertex, which keeps the index of `x_1`.
pub fn bouquet_mapped(parts: &[Anchored]) -> Result<Composition> {
    let first = parts.first().ok_or(Error::EmptyList)?;
    let x0 = first.anchor(0, 0)?;
    let mut b = Builder::default();
    let hub = b.place(&first.graph, None)[x0];
    for (i, p) in parts.iter().enumerate().skip(1) {
        let x = p.anchor(i, 0)?;
        b.place(&p.graph, Some((x, hub)));
    }
    b.finish()
}

pub fn circuit(parts: &[Anchored]) -> Result<Graph> {
    Ok(circuit_mapped(parts)?.graph)
}

/// Adds the cycle `x_1 x_2 ... x_k x_1` through the anchors; needs `k >= 3`.
pub fn circuit_mapped(parts: &[Anchored]) -> Result<Composition> {
    let k = parts.len();
    if k < 3 {
        return Err(Error::TooFewParts(k));
    }
    let mut b = Builder::default();
    let mut xs = Vec::with_capacity(k);
    for (i, p) in parts.iter().enumerate() {
        let x = p.anchor(i, 0)?;
        xs.push(b.place(&p.graph, None)[x]);
    }
    for i in 0..k {
        b.edges.push((xs[i], xs[(i + 1) % k]));
    }
    b.finish()
}
