//! Seeded random connected graphs and anchored parts for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::Anchored;
use crate::graph::Graph;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on `n >= 1` vertices.
///
/// A random recursive tree is topped up with each remaining pair independently
/// with probability `density`, then the labels are shuffled.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    assert!(n >= 1, "connected graph needs a vertex");
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).expect("simple by construction")
}

/// Connected graph with a vertex count drawn from `sizes` and a random density.
pub fn any_connected<R: Rng>(rng: &mut R, sizes: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(sizes);
    let density = rng.gen_range(0.0..0.7);
    connected_graph(rng, n, density)
}

/// Random connected part with two anchors, distinct whenever the part has two vertices or more.
pub fn anchored_part<R: Rng>(rng: &mut R, sizes: std::ops::RangeInclusive<usize>) -> Anchored {
    let g = any_connected(rng, sizes);
    let n = g.num_vertices();
    let x = rng.gen_range(0..n);
    let y = if n == 1 {
        x
    } else {
        (x + rng.gen_range(1..n)) % n
    };
    Anchored::pair(g, x, y).expect("anchors in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_connected_and_reproducible() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..200 {
            let g = any_connected(&mut a, 1..=10);
            assert!(g.is_connected());
            assert_eq!(g, any_connected(&mut b, 1..=10));
        }
    }

    #[test]
    fn anchors_distinct() {
        let mut r = rng(11);
        for _ in 0..200 {
            let p = anchored_part(&mut r, 2..=6);
            assert_ne!(p.anchors[0], p.anchors[1]);
        }
    }
}
