//! The k-token graph construction.
//!
//! Vertices of the k-token graph of a base graph `G` are the k-subsets of
//! `V(G)`; two subsets are adjacent exactly when their symmetric difference
//! is an edge of `G` (one token slides along a base edge while the rest stay
//! put). Vertex ids are colexicographic subset ranks, so the construction,
//! decomposition checks and report output all agree on one indexing.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{binomial, rank_subset, unrank_subset, TokenVertex};

/// A constructed token graph, bundling the base graph, the token count and
/// the bijection between dense ids and subsets.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    tokens: Vec<TokenVertex>,
}

impl TokenGraph {
    /// Base graph the tokens live on.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Number of tokens.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The token graph itself. Vertices are labeled with their subsets in
    /// 1-based display form, e.g. `{1,2,5}`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Subset represented by a dense id.
    pub fn token(&self, id: usize) -> &TokenVertex {
        &self.tokens[id]
    }

    /// All subsets in id order.
    pub fn tokens(&self) -> &[TokenVertex] {
        &self.tokens
    }

    /// Dense id of a subset (its colexicographic rank).
    pub fn id_of(&self, token: &TokenVertex) -> Result<usize> {
        if token.k() != self.k {
            return Err(Error::InvalidSubset {
                reason: format!("expected {} members, got {}", self.k, token.k()),
            });
        }
        if !token.fits(self.base.vertex_count()) {
            return Err(Error::InvalidSubset {
                reason: format!(
                    "{token} has members outside the base graph on {} vertices",
                    self.base.vertex_count()
                ),
            });
        }
        Ok(rank_subset(token) as usize)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Builds the k-token graph of `base`.
///
/// Requires `1 <= k <= |V(base)|`. The result has `C(|V|, k)` vertices in
/// colexicographic subset order and an edge for every single-token slide
/// along a base edge.
pub fn token_graph(base: &Graph, k: usize) -> Result<TokenGraph> {
    let n = base.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidTokenCount { k, n });
    }
    let count = binomial(n, k) as usize;
    let tokens: Vec<TokenVertex> = (0..count)
        .map(|rank| unrank_subset(rank as u64, n, k).expect("rank in range"))
        .collect();

    let mut graph = Graph::empty(count);
    for (a, token) in tokens.iter().enumerate() {
        for &x in token.members() {
            for y in base.neighbors(x) {
                if token.contains(y) {
                    continue;
                }
                let mut members: Vec<usize> =
                    token.members().iter().copied().filter(|&m| m != x).collect();
                members.push(y);
                let moved = TokenVertex::new(members).expect("members stay distinct");
                let b = rank_subset(&moved) as usize;
                // Each edge arises from both endpoints; keep one direction.
                if b > a {
                    graph.add_edge(a, b);
                }
            }
        }
    }
    let labels = tokens.iter().map(|t| t.to_string()).collect();
    let graph = graph.with_labels(labels).expect("one label per vertex");
    Ok(TokenGraph {
        base: base.clone(),
        k,
        graph,
        tokens,
    })
}
