//! Immutable simple undirected graphs and the unweighted distance machinery
//! behind every index in this crate.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type Vertex = usize;

/// Distance reported for vertices the BFS never reached.
pub const UNREACHABLE: usize = usize::MAX;

/// Simple undirected graph on vertices `0..num_vertices`.
///
/// Edges are stored normalized (`u < v`) and sorted lexicographically; every
/// edge-indexed sum in the crate walks them in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    num_vertices: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.num_vertices, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            num_vertices: g.num_vertices,
            edges: g.edges,
        }
    }
}

/// Counts of vertices strictly closer to each endpoint of an oriented edge `uv`.
/// Equidistant vertices are counted on neither side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProximityPair {
    pub n_u: usize,
    pub n_v: usize,
}

impl ProximityPair {
    pub fn swapped(self) -> Self {
        ProximityPair {
            n_u: self.n_v,
            n_v: self.n_u,
        }
    }
}

impl Graph {
    /// Validates and builds a graph. Input edge order and orientation do not matter.
    pub fn new<I>(num_vertices: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edge_list {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            num_vertices,
            edges,
            adjacency,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            num_vertices: n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "C_{n} is not simple");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.num_vertices && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.num_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices,
            })
        }
    }

    fn check_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::EdgeNotPresent(u, v))
        }
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.num_vertices];
        let mut queue = VecDeque::with_capacity(self.num_vertices);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &y in &self.adjacency[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return true;
        }
        self.bfs_distances(0)
            .expect("vertex 0 exists")
            .iter()
            .all(|&d| d != UNREACHABLE)
    }

    /// `(n_u, n_v)` for the edge `uv`, from one BFS per endpoint.
    pub fn edge_proximity(&self, u: Vertex, v: Vertex) -> Result<ProximityPair> {
        self.check_edge(u, v)?;
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self.proximity_unchecked(u, v))
    }

    fn proximity_unchecked(&self, u: Vertex, v: Vertex) -> ProximityPair {
        let du = self.bfs_distances(u).expect("endpoint checked");
        let dv = self.bfs_distances(v).expect("endpoint checked");
        let mut pair = ProximityPair { n_u: 0, n_v: 0 };
        for (a, b) in du.iter().zip(&dv) {
            if a < b {
                pair.n_u += 1;
            } else if b < a {
                pair.n_v += 1;
            }
        }
        pair
    }

    /// Proximity pairs of every edge, oriented as stored (`u < v`).
    pub fn proximity_pairs(&self) -> Result<Vec<((Vertex, Vertex), ProximityPair)>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self
            .edges
            .iter()
            .map(|&(u, v)| ((u, v), self.proximity_unchecked(u, v)))
            .collect())
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_edge(u, v)?;
        let e = (u.min(v), u.max(v));
        Graph::new(self.num_vertices, self.edges.iter().copied().filter(|&f| f != e))
    }

    /// Deletes `v` and its edges; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let shift = |w: Vertex| if w > v { w - 1 } else { w };
        Graph::new(
            self.num_vertices - 1,
            self.edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (shift(a), shift(b))),
        )
    }

    /// Renames vertex `w` to `perm[w]`. `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.num_vertices;
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParams(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                n
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
        }
        Graph::new(n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Places `other` after `self`, shifting its labels by `self.num_vertices()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.num_vertices;
        Graph::new(
            off + other.num_vertices,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + off, b + off))),
        )
        .expect("disjoint union of simple graphs is simple")
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut label = vec![UNREACHABLE; self.num_vertices];
        let mut out = Vec::new();
        for s in 0..self.num_vertices {
            if label[s] != UNREACHABLE {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            label[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &y in &self.adjacency[x] {
                    if label[y] == UNREACHABLE {
                        label[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Graph> {
        let mut map = vec![UNREACHABLE; self.num_vertices];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            map[v] = i;
        }
        Graph::new(
            vertices.len(),
            self.edges
                .iter()
                .filter(|&&(a, b)| map[a] != UNREACHABLE && map[b] != UNREACHABLE)
                .map(|&(a, b)| (map[a], map[b])),
        )
    }
}

/// Reference all-pairs computation used to cross-check the per-edge BFS path.
///
/// Floyd-Warshall over the adjacency matrix: it shares no code with
/// [`Graph::bfs_distances`], which is the point.
pub mod oracle {
    use super::{Graph, ProximityPair, Vertex, UNREACHABLE};

    pub struct DistanceMatrix {
        n: usize,
        dist: Vec<usize>,
    }

    impl DistanceMatrix {
        pub fn floyd_warshall(g: &Graph) -> Self {
            let n = g.num_vertices();
            let mut dist = vec![UNREACHABLE; n * n];
            for v in 0..n {
                dist[v * n + v] = 0;
            }
            for &(a, b) in g.edges() {
                dist[a * n + b] = 1;
                dist[b * n + a] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    let dik = dist[i * n + k];
                    if dik == UNREACHABLE {
                        continue;
                    }
                    for j in 0..n {
                        let dkj = dist[k * n + j];
                        if dkj != UNREACHABLE && dik + dkj < dist[i * n + j] {
                            dist[i * n + j] = dik + dkj;
                        }
                    }
                }
            }
            DistanceMatrix { n, dist }
        }

        pub fn get(&self, a: Vertex, b: Vertex) -> usize {
            self.dist[a * self.n + b]
        }

        pub fn proximity(&self, u: Vertex, v: Vertex) -> ProximityPair {
            let mut pair = ProximityPair { n_u: 0, n_v: 0 };
            for w in 0..self.n {
                let (a, b) = (self.get(w, u), self.get(w, v));
                if a < b {
                    pair.n_u += 1;
                } else if b < a {
                    pair.n_v += 1;
                }
            }
            pair
        }

        /// Sum over unordered pairs; `None` if some pair is unreachable.
        pub fn wiener(&self) -> Option<u64> {
            let mut total = 0u64;
            for a in 0..self.n {
                for b in a + 1..self.n {
                    let d = self.get(a, b);
                    if d == UNREACHABLE {
                        return None;
                    }
                    total += d as u64;
                }
            }
            Some(total)
        }

        pub fn equidistant(&self, u: Vertex, v: Vertex) -> usize {
            (0..self.n).filter(|&w| self.get(w, u) == self.get(w, v)).count()
        }
    }
}
