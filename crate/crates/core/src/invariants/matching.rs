//! Exact maximum matching: Hopcroft-Karp on bipartite graphs, Edmonds
//! blossom contraction everywhere else. Both run in polynomial time and
//! break ties toward the lowest vertex id.

use std::collections::VecDeque;

use super::{is_bipartite, Bipartiteness};
use crate::graph::Graph;

/// Maximum matching as a mate array: `mate[v] = Some(u)` iff edge `uv` is
/// matched (always symmetric), `None` for exposed vertices.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let mate = match is_bipartite(g) {
        Bipartiteness::Bipartite { coloring } => hopcroft_karp(g, &coloring),
        Bipartiteness::OddCycle { .. } => blossom_matching(g),
    };
    debug_assert!(mate.iter().enumerate().all(|(v, m)| match m {
        Some(u) => mate[*u] == Some(v) && g.has_edge(*u, v),
        None => true,
    }));
    mate
}

/// Number of edges in a maximum matching.
pub fn matching_number(g: &Graph) -> u64 {
    maximum_matching(g).iter().flatten().count() as u64 / 2
}

/// Hopcroft-Karp: repeated phases of layered BFS from exposed left vertices
/// followed by vertex-disjoint augmenting DFS.
fn hopcroft_karp(g: &Graph, coloring: &[u8]) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let lefts: Vec<usize> = (0..n).filter(|&v| coloring[v] == 0).collect();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    loop {
        // Layer left vertices by shortest alternating distance.
        let mut layer: Vec<Option<u32>> = vec![None; n];
        let mut queue = VecDeque::new();
        for &u in &lefts {
            if mate[u].is_none() {
                layer[u] = Some(0);
                queue.push_back(u);
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            let du = layer[u].expect("queued vertices are layered");
            for v in g.neighbors(u) {
                match mate[v] {
                    None => reachable_free = true,
                    Some(w) if layer[w].is_none() => {
                        layer[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free {
            return mate;
        }
        for &u in &lefts {
            if mate[u].is_none() {
                augment_layered(g, u, &mut mate, &mut layer);
            }
        }
    }
}

fn augment_layered(
    g: &Graph,
    u: usize,
    mate: &mut [Option<usize>],
    layer: &mut [Option<u32>],
) -> bool {
    let du = match layer[u] {
        Some(d) => d,
        None => return false,
    };
    for v in g.neighbors(u) {
        match mate[v] {
            None => {
                mate[v] = Some(u);
                mate[u] = Some(v);
                return true;
            }
            Some(w) => {
                if layer[w] == Some(du + 1) && augment_layered(g, w, mate, layer) {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    return true;
                }
            }
        }
    }
    layer[u] = None; // dead end for this phase
    false
}

/// Edmonds blossom algorithm. Each exposed vertex gets one search of the
/// alternating forest with blossom contraction (tracked through `base`
/// pointers); by Berge's lemma a single pass over roots is enough.
fn blossom_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Deterministic greedy warm start.
    for u in 0..n {
        if mate[u].is_none() {
            if let Some(v) = g.neighbors(u).find(|&v| mate[v].is_none()) {
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            augment_from(g, &mut mate, root);
        }
    }
    mate
}

/// Grows the alternating tree from the exposed `root`; on reaching another
/// exposed vertex, flips the path and returns true.
fn augment_from(g: &Graph, mate: &mut [Option<usize>], root: usize) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut exposed: Option<usize> = None;

    'bfs: while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            let to_is_outer = to == root || mate[to].is_some_and(|m| parent[m].is_some());
            if to_is_outer {
                // Edge between two outer vertices closes an odd cycle:
                // contract the blossom to its base.
                let cur_base = blossom_base(&base, &parent, mate, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut in_blossom, &base, &mut parent, mate, v, cur_base, to);
                mark_blossom_path(&mut in_blossom, &base, &mut parent, mate, to, cur_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        exposed = Some(to);
                        break 'bfs;
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }

    let Some(mut u) = exposed else {
        return false;
    };
    while let Some(pv) = parent[u] {
        let grand = mate[pv];
        mate[u] = Some(pv);
        mate[pv] = Some(u);
        match grand {
            Some(next) => u = next,
            None => break, // reached the root
        }
    }
    true
}

/// Base vertex of the new blossom: the first common ancestor of `a` and `b`
/// along matched-then-parent hops, compared through `base` pointers.
fn blossom_base(
    base: &[usize],
    parent: &[Option<usize>],
    mate: &[Option<usize>],
    a: usize,
    b: usize,
) -> usize {
    let mut marked = vec![false; base.len()];
    let mut x = a;
    loop {
        x = base[x];
        marked[x] = true;
        match mate[x] {
            None => break, // the tree root
            Some(m) => x = parent[m].expect("matched tree vertices have parents"),
        }
    }
    let mut y = b;
    loop {
        y = base[y];
        if marked[y] {
            return y;
        }
        let m = mate[y].expect("path to root passes matched vertices");
        y = parent[m].expect("matched tree vertices have parents");
    }
}

/// Walks from `v` down to the blossom base `b`, marking visited sub-blossoms
/// and rethreading parent pointers through `child` so the contracted blossom
/// can later be traversed in either direction.
fn mark_blossom_path(
    in_blossom: &mut [bool],
    base: &[usize],
    parent: &mut [Option<usize>],
    mate: &[Option<usize>],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        let m = mate[v].expect("non-base blossom vertices are matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("matched tree vertices have parents");
    }
}
