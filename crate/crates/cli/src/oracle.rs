//! Exhaustive-enumeration oracles for small graphs.
//!
//! Every function here recomputes an invariant by brute force, sharing no
//! code with the library's branch-and-bound or augmenting-path solvers, so
//! agreement between the two routes is evidence rather than tautology. All
//! oracles are exponential and guarded by small vertex caps.

use tokengraph::Graph;

/// Largest graph the subset-enumeration oracles accept.
pub const SUBSET_ORACLE_CAP: usize = 20;

/// Largest graph the permutation-enumeration oracle accepts.
pub const PERMUTATION_ORACLE_CAP: usize = 8;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 64, "oracle masks need at most 64 vertices");
    let mut masks = vec![0u64; n];
    for (u, mask) in masks.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && g.has_edge(u, v) {
                *mask |= 1 << v;
            }
        }
    }
    masks
}

fn assert_subset_scale(g: &Graph, what: &str) {
    assert!(
        g.vertex_count() <= SUBSET_ORACLE_CAP,
        "{what} oracle is exhaustive; refusing {} vertices (cap {SUBSET_ORACLE_CAP})",
        g.vertex_count()
    );
}

/// Independence number by enumerating all vertex subsets.
pub fn independence_number(g: &Graph) -> u64 {
    assert_subset_scale(g, "independence");
    let masks = adjacency_masks(g);
    let n = g.vertex_count();
    let mut best = 0u32;
    for set in 0u64..(1u64 << n) {
        if set.count_ones() <= best {
            continue;
        }
        let mut independent = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & set != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            best = set.count_ones();
        }
    }
    u64::from(best)
}

/// Clique number by enumerating all vertex subsets.
pub fn clique_number(g: &Graph) -> u64 {
    assert_subset_scale(g, "clique");
    let masks = adjacency_masks(g);
    let n = g.vertex_count();
    let mut best = 0u32;
    for set in 0u64..(1u64 << n) {
        if set.count_ones() <= best {
            continue;
        }
        let mut clique = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & set != set & !(1 << v) {
                clique = false;
                break;
            }
        }
        if clique {
            best = set.count_ones();
        }
    }
    u64::from(best)
}

/// Chromatic number by trying `k = 1, 2, ...` with plain backtracking in
/// vertex-id order (no saturation ordering, no bounds beyond the usual
/// new-color symmetry break).
pub fn chromatic_number(g: &Graph) -> u32 {
    assert_subset_scale(g, "coloring");
    let n = g.vertex_count();
    assert!(n > 0, "chromatic number needs a vertex");
    let masks = adjacency_masks(g);
    for k in 1..=n as u32 {
        let mut colors = vec![u32::MAX; n];
        if colorable(&masks, &mut colors, 0, k, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

fn colorable(masks: &[u64], colors: &mut [u32], v: usize, k: u32, used: u32) -> bool {
    if v == masks.len() {
        return true;
    }
    // Allowing at most one brand-new color per level rules out permuted
    // repeats of the same partition.
    let ceiling = k.min(used + 1);
    for c in 0..ceiling {
        let mut rest = masks[v];
        let mut clash = false;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if u < v && colors[u] == c {
                clash = true;
                break;
            }
        }
        if clash {
            continue;
        }
        colors[v] = c;
        if colorable(masks, colors, v + 1, k, used.max(c + 1)) {
            return true;
        }
        colors[v] = u32::MAX;
    }
    false
}

/// Matching number by branching on the lowest uncovered vertex: either it
/// stays unmatched or it is matched with each uncovered neighbor in turn.
pub fn matching_number(g: &Graph) -> u64 {
    assert_subset_scale(g, "matching");
    let masks = adjacency_masks(g);
    u64::from(best_matching(&masks, 0))
}

fn best_matching(masks: &[u64], covered: u64) -> u32 {
    let n = masks.len();
    // The lowest clear bit is the lowest uncovered vertex.
    let v = covered.trailing_ones() as usize;
    if v >= n {
        return 0;
    }
    // Leaving v unmatched is always a legal branch.
    let mut best = best_matching(masks, covered | 1 << v);
    let mut candidates = masks[v] & !covered;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        best = best.max(1 + best_matching(masks, covered | 1 << v | 1 << u));
    }
    best
}

/// Number of maximum independent sets, alongside their common size.
pub fn maximum_independent_set_count(g: &Graph) -> (u64, u64) {
    assert_subset_scale(g, "independent-set counting");
    let masks = adjacency_masks(g);
    let n = g.vertex_count();
    let mut best = 0u32;
    let mut count = 0u64;
    for set in 0u64..(1u64 << n) {
        if set.count_ones() < best {
            continue;
        }
        let mut independent = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & set != 0 {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        if set.count_ones() > best {
            best = set.count_ones();
            count = 1;
        } else {
            count += 1;
        }
    }
    (u64::from(best), count)
}

/// Automorphism group order by checking every permutation of the vertices.
pub fn automorphism_order(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(
        n <= PERMUTATION_ORACLE_CAP,
        "permutation oracle refuses {n} vertices (cap {PERMUTATION_ORACLE_CAP})"
    );
    let masks = adjacency_masks(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    permutations(&mut perm, n, &mut |p| {
        if preserves_adjacency(&masks, p) {
            count += 1;
        }
    });
    count.max(1)
}

fn permutations(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k {
        permutations(perm, k - 1, visit);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

fn preserves_adjacency(masks: &[u64], p: &[usize]) -> bool {
    let n = masks.len();
    for u in 0..n {
        for v in u + 1..n {
            let before = masks[u] & (1 << v) != 0;
            let after = masks[p[u]] & (1 << p[v]) != 0;
            if before != after {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use tokengraph::{complete_graph, cycle_graph, disjoint_union, path_graph, Graph};

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn known_independence_numbers() {
        assert_eq!(independence_number(&path_graph(5).unwrap()), 3);
        assert_eq!(independence_number(&cycle_graph(7).unwrap()), 3);
        assert_eq!(independence_number(&complete_graph(6).unwrap()), 1);
        assert_eq!(independence_number(&petersen()), 4);
    }

    #[test]
    fn known_clique_numbers() {
        assert_eq!(clique_number(&complete_graph(5).unwrap()), 5);
        assert_eq!(clique_number(&cycle_graph(6).unwrap()), 2);
        assert_eq!(clique_number(&cycle_graph(3).unwrap()), 3);
        assert_eq!(clique_number(&petersen()), 2);
    }

    #[test]
    fn known_chromatic_numbers() {
        assert_eq!(chromatic_number(&path_graph(1).unwrap()), 1);
        assert_eq!(chromatic_number(&path_graph(6).unwrap()), 2);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap()), 3);
        assert_eq!(chromatic_number(&complete_graph(7).unwrap()), 7);
        assert_eq!(chromatic_number(&petersen()), 3);
    }

    #[test]
    fn known_matching_numbers() {
        assert_eq!(matching_number(&path_graph(4).unwrap()), 2);
        assert_eq!(matching_number(&cycle_graph(7).unwrap()), 3);
        assert_eq!(matching_number(&petersen()), 5);
        let two_triangles = disjoint_union(
            &cycle_graph(3).unwrap(),
            &cycle_graph(3).unwrap(),
        );
        assert_eq!(matching_number(&two_triangles), 2);
    }

    #[test]
    fn mis_counting_matches_hand_counts() {
        // C_5 has five maximum independent sets of size 2.
        assert_eq!(maximum_independent_set_count(&cycle_graph(5).unwrap()), (2, 5));
        // P_4: {1,3}, {1,4}, {2,4} (1-based).
        assert_eq!(maximum_independent_set_count(&path_graph(4).unwrap()), (2, 3));
        // K_4: each singleton.
        assert_eq!(
            maximum_independent_set_count(&complete_graph(4).unwrap()),
            (1, 4)
        );
    }

    #[test]
    fn known_automorphism_orders() {
        assert_eq!(automorphism_order(&path_graph(4).unwrap()), 2);
        assert_eq!(automorphism_order(&cycle_graph(5).unwrap()), 10);
        assert_eq!(automorphism_order(&complete_graph(4).unwrap()), 24);
        assert_eq!(automorphism_order(&Graph::empty(3)), 6);
        let p3_p3 = disjoint_union(&path_graph(3).unwrap(), &path_graph(3).unwrap());
        // Each P_3 flips, and the two copies swap: 2 * 2 * 2.
        assert_eq!(automorphism_order(&p3_p3), 8);
    }

    #[test]
    #[should_panic(expected = "permutation oracle")]
    fn permutation_oracle_enforces_its_cap() {
        automorphism_order(&path_graph(9).unwrap());
    }
}
