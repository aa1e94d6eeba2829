//! Exact chromatic number: DSATUR for the upper bound, a clique for the
//! lower bound, and saturation-ordered backtracking for each candidate k
//! in between.

use super::{clique_number, is_bipartite};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Greedy DSATUR coloring; returns `(colors_used, coloring)`.
///
/// Vertices are picked by maximum saturation (number of distinct colors in
/// the neighborhood), then maximum degree, then lowest id, and always get
/// the smallest feasible color.
pub(crate) fn dsatur(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.vertex_count();
    let mut color = vec![u32::MAX; n];
    let mut used = 0u32;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == u32::MAX)
            .max_by_key(|&v| {
                let mut seen = Vec::new();
                for u in g.neighbors(v) {
                    if color[u] != u32::MAX && !seen.contains(&color[u]) {
                        seen.push(color[u]);
                    }
                }
                // Reverse the id so that ties break toward the lowest id
                // under max_by_key.
                (seen.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex remains");
        let mut c = 0u32;
        while g.neighbors(v).any(|u| color[u] == c) {
            c += 1;
        }
        color[v] = c;
        used = used.max(c + 1);
    }
    (used.max(1), color)
}

/// Backtracking test for a proper coloring with at most `k` colors.
///
/// Branch vertices are chosen dynamically by saturation then degree then
/// lowest id; color symmetry is broken by never opening more than one fresh
/// color per node.
fn k_colorable(g: &Graph, k: u32) -> bool {
    let n = g.vertex_count();
    let mut color = vec![u32::MAX; n];
    fn recurse(g: &Graph, k: u32, color: &mut [u32], assigned: usize, max_used: u32) -> bool {
        let n = g.vertex_count();
        if assigned == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| color[v] == u32::MAX)
            .max_by_key(|&v| {
                let mut mask = 0u64;
                for u in g.neighbors(v) {
                    if color[u] != u32::MAX {
                        mask |= 1 << color[u].min(63);
                    }
                }
                (mask.count_ones(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex remains");
        let ceiling = k.min(max_used + 1);
        for c in 0..ceiling {
            if g.neighbors(v).any(|u| color[u] == c) {
                continue;
            }
            color[v] = c;
            if recurse(g, k, color, assigned + 1, max_used.max(c + 1)) {
                return true;
            }
            color[v] = u32::MAX;
        }
        false
    }
    recurse(g, k, &mut color, 0, 0)
}

/// Exact chromatic number.
///
/// Edgeless graphs are 1-chromatic, bipartite graphs with an edge are
/// 2-chromatic, and everything else is solved by testing k-colorability
/// upward from the clique lower bound until the DSATUR upper bound.
pub fn chromatic_number(g: &Graph) -> Result<u32> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph {
            op: "chromatic_number",
        });
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if is_bipartite(g).is_bipartite() {
        return Ok(2);
    }
    let lower = clique_number(g)?.max(3);
    let (upper, _) = dsatur(g);
    for k in lower..upper {
        if k_colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}
