//! Deletion lower bounds and composition upper bounds for ABC and ABC_GG.
//!
//! Each function evaluates the bound and the index it constrains, and returns
//! both in a [`BoundReport`]. Hypotheses that the bound needs are checked up
//! front and reported as errors, so an `Ok` report with `holds == false` is a
//! genuine counterexample.

use serde::{Deserialize, Serialize};

use crate::constructions::{bouquet, chain_mapped, circuit_mapped, link_mapped, Anchored, Composition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::indices::{abc, abc_gg, IndexKind};
use crate::scalar::{max_term, Scalar};
use crate::TOLERANCE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    /// `actual >= bound`
    Lower,
    /// `actual <= bound`
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport<T> {
    pub bound_value: T,
    pub actual_value: T,
    pub direction: Direction,
    /// Distance to the bound on the allowed side; negative when violated.
    pub slack: T,
    pub holds: bool,
    /// The inequality holds with slack above the tolerance.
    pub strict: bool,
}

impl<T: Scalar> BoundReport<T> {
    pub fn new(bound_value: T, actual_value: T, direction: Direction) -> Self {
        let slack = match direction {
            Direction::Lower => actual_value - bound_value,
            Direction::Upper => bound_value - actual_value,
        };
        let tol = tolerance(bound_value, actual_value);
        BoundReport {
            bound_value,
            actual_value,
            direction,
            slack,
            holds: slack >= -tol,
            strict: slack > tol,
        }
    }
}

/// `1e-9`, widened to a few ulps of the operands for low-precision scalars.
fn tolerance<T: Scalar>(a: T, b: T) -> T {
    let scale = a.abs().max(b.abs()).max(T::one());
    T::lit(TOLERANCE).max(T::epsilon() * scale * T::lit(16.0))
}

fn index_of<T: Scalar>(g: &Graph, kind: IndexKind) -> Result<T> {
    match kind {
        IndexKind::Abc => abc(g),
        IndexKind::AbcGg => abc_gg(g),
        IndexKind::Wiener => Err(Error::UnsupportedIndex(kind.to_string())),
    }
}

fn require_degree_kind(kind: IndexKind) -> Result<()> {
    match kind {
        IndexKind::Wiener => Err(Error::UnsupportedIndex(kind.to_string())),
        _ => Ok(()),
    }
}

/// Fails if some neighbour of `x` other than `except` is a pendant vertex.
fn no_pendant_neighbor(g: &Graph, x: Vertex, except: Vertex, deg: &[usize]) -> Result<()> {
    for &w in g.neighbors(x)? {
        if w != except && deg[w] == 1 {
            return Err(Error::PendantNeighbor(w));
        }
    }
    Ok(())
}

/// `index(G - e) >= index(G) - max-term(e)` for a non-pendant edge `e = uv`.
///
/// For ABC the max-term uses `d_u, d_v`, and no other neighbour of `u` or `v`
/// may be pendant. For ABC_GG it uses `n_u, n_v`, and both `G` and `G - e`
/// must be connected.
pub fn edge_deletion_bound<T: Scalar>(
    g: &Graph,
    e: (Vertex, Vertex),
    kind: IndexKind,
) -> Result<BoundReport<T>> {
    require_degree_kind(kind)?;
    let (u, v) = e;
    let smaller = g.without_edge(u, v)?;
    let deg = g.degrees();
    if deg[u] < 2 || deg[v] < 2 {
        return Err(Error::PendantEdge(u, v));
    }
    let term = match kind {
        IndexKind::Abc => {
            no_pendant_neighbor(g, u, v, &deg)?;
            no_pendant_neighbor(g, v, u, &deg)?;
            max_term::<T>(deg[u], deg[v])
        }
        _ => {
            let p = g.edge_proximity(u, v)?;
            if !smaller.is_connected() {
                return Err(Error::NotConnectedAfterDeletion);
            }
            max_term::<T>(p.n_u, p.n_v)
        }
    };
    let bound = index_of::<T>(g, kind)? - term;
    Ok(BoundReport::new(bound, index_of(&smaller, kind)?, Direction::Lower))
}

/// `index(G - v) >= index(G) - sum of max-terms over the edges at v`.
///
/// ABC hypotheses: every neighbour `x` of `v` has degree at least 2, no other
/// neighbour of such an `x` is pendant, and every edge between two neighbours
/// of `v` has an endpoint of degree at least 3. ABC_GG hypotheses: `G` and
/// `G - v` are connected and no neighbour of `v` is pendant.
pub fn vertex_deletion_bound<T: Scalar>(
    g: &Graph,
    v: Vertex,
    kind: IndexKind,
) -> Result<BoundReport<T>> {
    require_degree_kind(kind)?;
    let nbrs = g.neighbors(v)?;
    let deg = g.degrees();
    if let Some(&x) = nbrs.iter().find(|&&x| deg[x] < 2) {
        return Err(Error::PendantNeighbor(x));
    }
    let smaller = g.without_vertex(v)?;
    let term: T = match kind {
        IndexKind::Abc => {
            for &x in nbrs {
                no_pendant_neighbor(g, x, v, &deg)?;
                for &y in g.neighbors(x)? {
                    if x < y && g.has_edge(v, y) && deg[x] < 3 && deg[y] < 3 {
                        return Err(Error::TightNeighborEdge(x, y));
                    }
                }
            }
            nbrs.iter().map(|&x| max_term::<T>(deg[v], deg[x])).sum()
        }
        _ => {
            if !g.is_connected() {
                return Err(Error::NotConnected);
            }
            if !smaller.is_connected() {
                return Err(Error::NotConnectedAfterDeletion);
            }
            let mut total = T::zero();
            for &x in nbrs {
                let p = g.edge_proximity(v, x)?;
                total = total + max_term::<T>(p.n_u, p.n_v);
            }
            total
        }
    };
    let bound = index_of::<T>(g, kind)? - term;
    Ok(BoundReport::new(bound, index_of(&smaller, kind)?, Direction::Lower))
}

fn reject_points(parts: &[Anchored]) -> Result<()> {
    match parts.iter().position(|p| p.graph.num_vertices() == 1) {
        Some(i) => Err(Error::PartIsK1(i)),
        None => Ok(()),
    }
}

/// Every in-part neighbour of the anchor must have in-part degree at least 2.
fn anchor_neighbors_not_pendant(comp: &Composition, i: usize, part: &Anchored, x: Vertex) -> Result<()> {
    let g = &part.graph;
    for &w in g.neighbors(x)? {
        if g.degree(w)? < 2 {
            return Err(Error::PendantNeighbor(comp.maps[i][w]));
        }
    }
    Ok(())
}

fn sum_parts<T: Scalar>(parts: &[Anchored], f: fn(&Graph) -> Result<T>) -> Result<T> {
    parts.iter().try_fold(T::zero(), |acc, p| Ok(acc + f(&p.graph)?))
}

/// Upper bound on the link of `parts`.
///
/// For ABC: `sum ABC(G_i) + sum over bridges y_i x_{i+1} of max-term`, with
/// degrees taken in the composed graph. Parts must not be `K_1`, interior
/// parts need `x_i != y_i`, and no in-part neighbour of a used anchor may be
/// pendant in its part. For ABC_GG this is [`link_gg_counting_bound`].
pub fn link_bound<T: Scalar>(parts: &[Anchored], kind: IndexKind) -> Result<BoundReport<T>> {
    match kind {
        IndexKind::AbcGg => link_gg_counting_bound(parts),
        IndexKind::Wiener => Err(Error::UnsupportedIndex(kind.to_string())),
        IndexKind::Abc => {
            reject_points(parts)?;
            let comp = link_mapped(parts)?;
            let deg = comp.graph.degrees();
            let last = parts.len() - 1;
            let mut bridges = T::zero();
            let mut prev_y: Option<Vertex> = None;
            for (i, p) in parts.iter().enumerate() {
                let (x, y) = (p.anchors[0], p.anchors.get(1).copied());
                if i > 0 {
                    anchor_neighbors_not_pendant(&comp, i, p, x)?;
                    let gx = comp.maps[i][x];
                    let gy = prev_y.expect("previous part has y");
                    bridges = bridges + max_term::<T>(deg[gy], deg[gx]);
                }
                if i < last {
                    let y = y.expect("link checked anchors");
                    if i > 0 && x == y {
                        return Err(Error::DegenerateAnchors { part: i });
                    }
                    anchor_neighbors_not_pendant(&comp, i, p, y)?;
                    prev_y = Some(comp.maps[i][y]);
                }
            }
            let bound = sum_parts::<T>(parts, abc)? + bridges;
            Ok(BoundReport::new(bound, abc(&comp.graph)?, Direction::Upper))
        }
    }
}

fn require_connected_parts(parts: &[Anchored]) -> Result<()> {
    if parts.iter().all(|p| p.graph.is_connected()) {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// `sum_{i=1}^{n-1} sqrt((|V(G)| - 2) / (|V_1|+...+|V_i|)(|V_{i+1}|+...+|V_n|))`
fn split_terms<T: Scalar>(parts: &[Anchored], total_vertices: usize) -> T {
    let sizes: Vec<usize> = parts.iter().map(|p| p.graph.num_vertices()).collect();
    let all: usize = sizes.iter().sum();
    let num = T::from_count(total_vertices.saturating_sub(2));
    let mut prefix = 0;
    let mut out = T::zero();
    for &s in &sizes[..sizes.len() - 1] {
        prefix += s;
        out = out + (num / (T::from_count(prefix) * T::from_count(all - prefix))).sqrt();
    }
    out
}

fn counting_bound<T: Scalar>(parts: &[Anchored], g: &Graph, leading: usize) -> Result<BoundReport<T>> {
    let bound = T::from_count(leading)
        + sum_parts::<T>(parts, abc_gg)?
        + split_terms::<T>(parts, g.num_vertices());
    Ok(BoundReport::new(bound, abc_gg(g)?, Direction::Upper))
}

/// `ABC_GG(link) < |E(G)| - (n - 1) + sum ABC_GG(G_i) + split terms`.
pub fn link_gg_counting_bound<T: Scalar>(parts: &[Anchored]) -> Result<BoundReport<T>> {
    require_connected_parts(parts)?;
    let g = link_mapped(parts)?.graph;
    counting_bound(parts, &g, g.num_edges() - (parts.len() - 1))
}

/// `ABC_GG(chain) < |E(G)| + sum ABC_GG(G_i) + split terms`.
pub fn chain_gg_bound<T: Scalar>(parts: &[Anchored]) -> Result<BoundReport<T>> {
    require_connected_parts(parts)?;
    let g = chain_mapped(parts)?.graph;
    counting_bound(parts, &g, g.num_edges())
}

/// `ABC_GG(bouquet) < |E(G)| + sum ABC_GG(G_i) + split terms`.
pub fn bouquet_gg_bound<T: Scalar>(parts: &[Anchored]) -> Result<BoundReport<T>> {
    require_connected_parts(parts)?;
    let g = bouquet(parts)?;
    counting_bound(parts, &g, g.num_edges())
}

/// Upper bound on the circuit of `parts`.
///
/// For ABC: `sum ABC(G_i) + sum over cycle edges of max-term` with degrees in
/// the composed graph; parts must not be `K_1` and no in-part neighbour of an
/// anchor may be pendant in its part. For ABC_GG:
/// `|E(G)| - n + sum ABC_GG(G_i) + sum_i sqrt((|V(G)| - 2) / (|V_i| |V_{i+1}|))`
/// with indices taken cyclically; `K_1` parts are allowed.
pub fn circuit_bounds<T: Scalar>(parts: &[Anchored], kind: IndexKind) -> Result<BoundReport<T>> {
    require_degree_kind(kind)?;
    let comp = circuit_mapped(parts)?;
    let g = &comp.graph;
    let k = parts.len();
    match kind {
        IndexKind::Abc => {
            reject_points(parts)?;
            let deg = g.degrees();
            let xs: Vec<Vertex> = parts.iter().map(|p| p.anchors[0]).collect();
            for (i, p) in parts.iter().enumerate() {
                anchor_neighbors_not_pendant(&comp, i, p, xs[i])?;
            }
            let cycle: T = (0..k)
                .map(|i| {
                    let j = (i + 1) % k;
                    max_term::<T>(deg[comp.maps[i][xs[i]]], deg[comp.maps[j][xs[j]]])
                })
                .sum();
            let bound = sum_parts::<T>(parts, abc)? + cycle;
            Ok(BoundReport::new(bound, abc(g)?, Direction::Upper))
        }
        _ => {
            require_connected_parts(parts)?;
            let num = T::from_count(g.num_vertices() - 2);
            let size = |i: usize| T::from_count(parts[i].graph.num_vertices());
            let cyclic: T = (0..k)
                .map(|i| (num / (size(i) * size((i + 1) % k))).sqrt())
                .sum();
            let bound = T::from_count(g.num_edges() - k) + sum_parts::<T>(parts, abc_gg)? + cyclic;
            Ok(BoundReport::new(bound, abc_gg(g)?, Direction::Upper))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(g: Graph, x: Vertex) -> Anchored {
        Anchored::single(g, x).unwrap()
    }

    fn pair(g: Graph, x: Vertex, y: Vertex) -> Anchored {
        Anchored::pair(g, x, y).unwrap()
    }

    fn near(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn report_semantics() {
        let r = BoundReport::new(1.0, 2.0, Direction::Lower);
        assert!(r.holds && r.strict && r.slack == 1.0);
        let r = BoundReport::new(1.0, 1.0 + 1e-12, Direction::Upper);
        assert!(r.holds && !r.strict);
        let r = BoundReport::new(1.0, 1.1, Direction::Upper);
        assert!(!r.holds);
    }

    #[test]
    fn c4_deletions_are_tight() {
        let c4 = Graph::cycle(4);
        let e = edge_deletion_bound::<f64>(&c4, (0, 1), IndexKind::Abc).unwrap();
        assert!(near(e.bound_value, 3.0 / 2f64.sqrt()));
        assert!(e.holds && e.slack.abs() <= 1e-12);
        let v = vertex_deletion_bound::<f64>(&c4, 0, IndexKind::Abc).unwrap();
        assert!(near(v.bound_value, 2f64.sqrt()));
        assert!(v.holds && v.slack.abs() <= 1e-12);
    }

    #[test]
    fn deletion_examples() {
        let c6 = Graph::cycle(6);
        let r = edge_deletion_bound::<f64>(&c6, (2, 3), IndexKind::Abc).unwrap();
        assert!(near(r.bound_value, 3.0 * 2f64.sqrt() - 2f64.sqrt() / 2.0));
        assert!(near(r.actual_value, 5.0 / 2f64.sqrt()));
        assert!(r.holds);
        let c5 = Graph::cycle(5);
        assert!(vertex_deletion_bound::<f64>(&c5, 0, IndexKind::Abc).unwrap().holds);
    }

    #[test]
    fn deletion_preconditions() {
        let p3 = Graph::path(3);
        assert_eq!(
            edge_deletion_bound::<f64>(&p3, (0, 1), IndexKind::Abc),
            Err(Error::PendantEdge(0, 1))
        );
        assert_eq!(
            vertex_deletion_bound::<f64>(&Graph::star(3), 0, IndexKind::Abc),
            Err(Error::PendantNeighbor(1))
        );
        assert_eq!(
            edge_deletion_bound::<f64>(&Graph::path(4), (1, 2), IndexKind::AbcGg),
            Err(Error::NotConnectedAfterDeletion)
        );
        assert!(matches!(
            edge_deletion_bound::<f64>(&Graph::cycle(4), (0, 1), IndexKind::Wiener),
            Err(Error::UnsupportedIndex(_))
        ));
        assert_eq!(
            edge_deletion_bound::<f64>(&Graph::cycle(4), (0, 2), IndexKind::Abc),
            Err(Error::EdgeNotPresent(0, 2))
        );
    }

    #[test]
    fn gg_edge_deletion_counterexample() {
        // K_{1,1,3}: removing the edge between the two hubs leaves K_{2,3}
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let r = edge_deletion_bound::<f64>(&g, (0, 1), IndexKind::AbcGg).unwrap();
        assert!(near(r.actual_value, 3.0 * 2f64.sqrt()));
        assert!(!r.holds);
    }

    #[test]
    fn link_examples() {
        let k2 = pair(Graph::complete(2), 0, 1);
        let r = link_bound::<f64>(&[k2.clone(), k2.clone()], IndexKind::AbcGg).unwrap();
        assert!(near(r.bound_value, 2.0 + 0.5f64.sqrt()));
        assert!(near(r.actual_value, 2.0 * (2.0f64 / 3.0).sqrt() + 2f64.sqrt() / 2.0));
        assert!(r.holds && r.strict);
        let k3 = pair(Graph::complete(3), 0, 1);
        let r = link_bound::<f64>(&[k3.clone(), k3.clone()], IndexKind::Abc).unwrap();
        assert!(near(r.bound_value, 6.0 / 2f64.sqrt() + max_term::<f64>(3, 3)));
        assert!(r.holds);
        let c5 = pair(Graph::cycle(5), 0, 2);
        let r = link_bound::<f64>(&[c5], IndexKind::Abc).unwrap();
        assert!(near(r.slack, 0.0));
        assert_eq!(
            link_bound::<f64>(&[k3, Anchored::point()], IndexKind::Abc),
            Err(Error::PartIsK1(1))
        );
    }

    #[test]
    fn counting_examples() {
        let k3 = pair(Graph::complete(3), 0, 1);
        let r = chain_gg_bound::<f64>(&[k3.clone(), k3.clone()]).unwrap();
        assert!(near(r.bound_value, 6.0 + (3.0f64 / 9.0).sqrt()));
        assert!(near(r.actual_value, 4.0 * (2.0f64 / 3.0).sqrt()));
        assert!(r.holds);
        let r = link_gg_counting_bound::<f64>(&[k3.clone(), k3.clone(), k3.clone()]).unwrap();
        assert!(r.holds);
        let k2 = single(Graph::complete(2), 0);
        let r = bouquet_gg_bound::<f64>(&[k2.clone(), k2.clone(), k2]).unwrap();
        assert!(near(r.bound_value, 4.0));
        assert!(near(r.actual_value, 3.0 * (2.0f64 / 3.0).sqrt()));
        let r = bouquet_gg_bound::<f64>(&[single(Graph::complete(3), 0), single(Graph::complete(3), 0)]).unwrap();
        assert!(near(r.actual_value, 4.0 * (2.0f64 / 3.0).sqrt()));
    }

    #[test]
    fn circuit_examples() {
        let k2 = single(Graph::complete(2), 0);
        let r = circuit_bounds::<f64>(&vec![k2; 3], IndexKind::AbcGg).unwrap();
        assert!(near(r.bound_value, 6.0));
        assert!(near(r.actual_value, 3.0 * 0.8f64.sqrt() + 3.0 / 2f64.sqrt()));
        let r = circuit_bounds::<f64>(&vec![Anchored::point(); 3], IndexKind::AbcGg).unwrap();
        assert!(near(r.bound_value, 3.0) && r.actual_value == 0.0);
        let k3 = single(Graph::complete(3), 0);
        assert!(circuit_bounds::<f64>(&vec![k3; 3], IndexKind::Abc).unwrap().holds);
        assert_eq!(
            circuit_bounds::<f64>(&vec![Anchored::point(); 3], IndexKind::Abc),
            Err(Error::PartIsK1(0))
        );
        assert_eq!(
            circuit_bounds::<f64>(&vec![Anchored::point(); 2], IndexKind::AbcGg),
            Err(Error::TooFewParts(2))
        );
    }

    #[test]
    fn edge_lemma_scalar_fact() {
        for a in 2..=50usize {
            for b in 2..=50usize {
                let after = ((a + b - 3) as f64 / (a * (b - 1)) as f64).sqrt();
                let before = ((a + b - 2) as f64 / (a * b) as f64).sqrt();
                assert!(after >= before, "{a} {b}");
            }
        }
    }
}
