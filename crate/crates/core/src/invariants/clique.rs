//! Exact maximum clique via branch and bound on bitset candidate sets,
//! pruned with a greedy-coloring bound (at most one clique vertex per
//! color class).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Candidate vertex set as a word-parallel bitset.
#[derive(Clone)]
struct VSet {
    words: Vec<u64>,
}

impl VSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        VSet { words }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn intersect(&self, row: &[u64]) -> VSet {
        VSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }

    fn subtract(&mut self, row: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(row) {
            *a &= !b;
        }
    }
}

/// Greedy coloring of the candidate set; returns vertices grouped by color
/// class in ascending color order, each tagged with its 1-based color.
fn color_sort(g: &Graph, cand: &VSet) -> Vec<(usize, u32)> {
    let mut uncolored = cand.clone();
    let mut order = Vec::new();
    let mut color = 0u32;
    while !uncolored.is_empty() {
        color += 1;
        let mut class = uncolored.clone();
        while let Some(v) = class.first() {
            class.remove(v);
            class.subtract(g.row(v));
            uncolored.remove(v);
            order.push((v, color));
        }
    }
    order
}

fn expand(g: &Graph, mut cand: VSet, size: u32, best: &mut u32) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let order = color_sort(g, &cand);
    for &(v, color) in order.iter().rev() {
        // Every vertex still in `cand` has color <= this one, so the clique
        // through here cannot beat `best`.
        if size + color <= *best {
            return;
        }
        expand(g, cand.intersect(g.row(v)), size + 1, best);
        cand.remove(v);
    }
}

/// Exact clique number. The empty graph is a domain error.
pub fn clique_number(g: &Graph) -> Result<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph {
            op: "clique_number",
        });
    }
    let mut best = 0;
    expand(g, VSet::full(n), 0, &mut best);
    Ok(best)
}
