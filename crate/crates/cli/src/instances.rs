//! Deterministic random graph instances for the verification suite.
//!
//! All generators are driven by a [`ChaCha8Rng`] seeded explicitly, so a
//! suite configuration pins down every instance it checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokengraph::Graph;

/// The stream of instances for one seed.
pub struct InstanceRng(ChaCha8Rng);

impl InstanceRng {
    /// Starts the deterministic stream for `seed`.
    pub fn new(seed: u64) -> Self {
        InstanceRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// A graph on exactly `n` vertices with each edge present independently
    /// with probability `p`.
    pub fn graph(&mut self, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.0.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("generated edges are in range")
    }

    /// A graph with `1..=max_n` vertices (size chosen uniformly) and edge
    /// probability 1/2.
    pub fn sized_graph(&mut self, max_n: usize) -> Graph {
        let n = self.0.gen_range(1..=max_n);
        self.graph(n, 0.5)
    }

    /// A connected graph on exactly `n` vertices: a random spanning tree
    /// under a random vertex relabeling, plus independent extra edges.
    pub fn connected_graph(&mut self, n: usize) -> Graph {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut self.0);
        let mut edges = Vec::new();
        for i in 1..n {
            let j = self.0.gen_range(0..i);
            edges.push((order[i].min(order[j]), order[i].max(order[j])));
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.0.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(n, &edges).expect("generated edges are in range")
    }

    /// A connected graph with `1..=max_n` vertices.
    pub fn sized_connected_graph(&mut self, max_n: usize) -> Graph {
        let n = self.0.gen_range(1..=max_n);
        self.connected_graph(n)
    }
}

/// `count` pairs of connected graphs, each with at most `max_n` vertices
/// (`max_n >= 2`). The two sizes always sum to at least 3, so the union
/// admits 3-token graphs.
pub fn connected_pairs(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, Graph)> {
    assert!(max_n >= 2, "pairs need max_n >= 2 to reach 3 vertices total");
    let mut rng = InstanceRng::new(seed);
    (0..count)
        .map(|_| {
            let g = rng.sized_connected_graph(max_n);
            let floor = 3usize.saturating_sub(g.vertex_count()).max(1);
            let n = rng.0.gen_range(floor..=max_n);
            let h = rng.connected_graph(n);
            (g, h)
        })
        .collect()
}

/// `count` arbitrary graphs, each with `1..=max_n` vertices.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = InstanceRng::new(seed);
    (0..count).map(|_| rng.sized_graph(max_n)).collect()
}
