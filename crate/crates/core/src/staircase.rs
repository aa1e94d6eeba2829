//! The cubical staircase graph `CS_n` and its closed-form theory.
//!
//! `CS_n` lives on the integer triples `(i,j,k)` with `1 <= i <= n-2`,
//! `1 <= j <= i`, `1 <= k <= n-1-i`; two triples are adjacent exactly when
//! they differ by 1 in exactly one coordinate (the definition's three edge
//! families, restricted to pairs of valid triples). The module also provides
//! the explicit coordinate bijection with 3-token vertices of a path, the
//! closed-form invariants, the parity 2-coloring, and the explicitly
//! constructed matching behind the matching-number conjecture.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{binomial, TokenVertex};

/// A staircase coordinate triple, 1-based as printed in coordinate labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StairCoord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl StairCoord {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        StairCoord { i, j, k }
    }

    /// True when the triple is a vertex of `CS_n`.
    pub fn is_valid(&self, n: usize) -> bool {
        n >= 3
            && (1..=n - 2).contains(&self.i)
            && (1..=self.i).contains(&self.j)
            && (1..=n - 1 - self.i).contains(&self.k)
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::InvalidCoord {
                i: self.i,
                j: self.j,
                k: self.k,
                n,
            })
        }
    }
}

impl fmt::Display for StairCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// A constructed `CS_n` with the bijection between dense ids and coordinates.
#[derive(Debug, Clone)]
pub struct StairGraph {
    n: usize,
    graph: Graph,
    coords: Vec<StairCoord>,
}

impl StairGraph {
    /// The order parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The graph itself; vertices are labeled `(i,j,k)`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Coordinate of a dense id.
    pub fn coord(&self, id: usize) -> StairCoord {
        self.coords[id]
    }

    /// All coordinates in id (lexicographic) order.
    pub fn coords(&self) -> &[StairCoord] {
        &self.coords
    }

    /// Dense id of a coordinate.
    pub fn id_of(&self, c: &StairCoord) -> Result<usize> {
        c.check(self.n)?;
        Ok(self
            .coords
            .binary_search(c)
            .expect("valid coords are enumerated"))
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Builds `CS_n` for `n >= 3`.
///
/// Coordinates are enumerated in lexicographic `(i,j,k)` order; edges are the
/// three unit-step families of the definition, restricted to valid endpoint
/// pairs.
pub fn staircase_graph(n: usize) -> Result<StairGraph> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "staircase graph",
            min: 3,
            got: n,
        });
    }
    let mut coords = Vec::with_capacity(binomial(n, 3) as usize);
    for i in 1..=n - 2 {
        for j in 1..=i {
            for k in 1..=n - 1 - i {
                coords.push(StairCoord::new(i, j, k));
            }
        }
    }
    debug_assert_eq!(coords.len() as u64, binomial(n, 3));

    let mut graph = Graph::empty(coords.len());
    let id = |c: &StairCoord| coords.binary_search(c).ok();
    for (u, c) in coords.iter().enumerate() {
        let steps = [
            StairCoord::new(c.i, c.j, c.k + 1),
            StairCoord::new(c.i + 1, c.j, c.k),
            StairCoord::new(c.i, c.j + 1, c.k),
        ];
        for step in &steps {
            if step.is_valid(n) {
                let v = id(step).expect("valid coords are enumerated");
                graph.add_edge(u, v);
            }
        }
    }
    let labels = coords.iter().map(|c| c.to_string()).collect();
    let graph = graph.with_labels(labels).expect("one label per vertex");
    Ok(StairGraph { n, graph, coords })
}

/// L1 distance between two vertices of `CS_n`.
///
/// Matches the graph (BFS) distance for every pair; requires `n >= 4` and
/// both coordinates valid for that `n`.
pub fn staircase_distance(n: usize, a: &StairCoord, b: &StairCoord) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidSize {
            what: "staircase distance",
            min: 4,
            got: n,
        });
    }
    a.check(n)?;
    b.check(n)?;
    Ok((a.i.abs_diff(b.i) + a.j.abs_diff(b.j) + a.k.abs_diff(b.k)) as u64)
}

/// Coordinate of a 3-token vertex of the n-path: the map underlying the
/// isomorphism between 3-token graphs of paths and staircase graphs.
///
/// With 0-based members `a < b < c` (displayed 1-based as `{a+1,b+1,c+1}`),
/// the image is `(b, a+1, n-c)` — in 1-based display terms, `{i,j,k}` maps to
/// `(j-1, i, n+1-k)`. The result is always a valid coordinate of `CS_n`.
pub fn token_to_coord(t: &TokenVertex, n: usize) -> Result<StairCoord> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "staircase coordinates",
            min: 3,
            got: n,
        });
    }
    if t.k() != 3 {
        return Err(Error::InvalidSubset {
            reason: format!("expected 3 members, got {}", t.k()),
        });
    }
    if !t.fits(n) {
        return Err(Error::InvalidSubset {
            reason: format!("{t} has members outside a base path on {n} vertices"),
        });
    }
    let m = t.members();
    let coord = StairCoord::new(m[1], m[0] + 1, n - m[2]);
    debug_assert!(coord.is_valid(n));
    Ok(coord)
}

/// Inverse of [`token_to_coord`]: the 3-token vertex at a coordinate.
///
/// In 1-based display terms, `(i,j,k)` maps back to `{j, i+1, n+1-k}`.
pub fn coord_to_token(c: &StairCoord, n: usize) -> Result<TokenVertex> {
    c.check(n)?;
    TokenVertex::from_sorted(vec![c.j - 1, c.i, n - c.k])
}

/// The closed-form invariants of `CS_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormInvariants {
    pub chi: u32,
    pub omega: u32,
    pub alpha: u64,
    pub diam: u64,
}

/// Evaluates the closed forms for `chi`, `omega`, `alpha` and `diam` of
/// `CS_n`, `n >= 3`.
///
/// `CS_3` is a single vertex (chi = omega = alpha = 1, diam = 0); for
/// `n >= 4` the graph is triangle-free bipartite with an edge, so chi =
/// omega = 2, the independence number is `(n^3-3n^2+2n)/12` for even n and
/// `(n^3-3n^2+5n-3)/12` for odd n, and the diameter is `3(n-3)`.
pub fn closed_form_invariants(n: usize) -> Result<ClosedFormInvariants> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "staircase closed forms",
            min: 3,
            got: n,
        });
    }
    let n3 = n as u64;
    let alpha = if n.is_multiple_of(2) {
        (n3 * n3 * n3 - 3 * n3 * n3 + 2 * n3) / 12
    } else {
        (n3 * n3 * n3 - 3 * n3 * n3 + 5 * n3 - 3) / 12
    };
    Ok(ClosedFormInvariants {
        chi: if n == 3 { 1 } else { 2 },
        omega: if n == 3 { 1 } else { 2 },
        alpha,
        diam: if n == 3 { 0 } else { 3 * (n3 - 3) },
    })
}

/// Color classes of the parity 2-coloring: vertices whose coordinate sum
/// `i+j+k` is even, then those where it is odd. Empty classes are dropped,
/// so `CS_3` yields a single class. For `n >= 4` the coloring is proper.
pub fn parity_two_coloring(sg: &StairGraph) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(), Vec::new()];
    for (id, c) in sg.coords().iter().enumerate() {
        classes[(c.i + c.j + c.k) % 2].push(id);
    }
    classes.retain(|cl| !cl.is_empty());
    classes
}

/// The explicitly constructed independent edge set of `CS_n` whose size is
/// conjectured to be the matching number, `n >= 4`.
///
/// Both parities use unit-k steps `(i,j,k)(i,j,k+1)` at odd `k = 2t-1` for
/// all valid `i <= n-2-k`, `j <= i`, plus unit-j steps `(i,j,k)(i,j+1,k)` at
/// odd `j = 2s-1` on the boundary diagonal `k = n-1-i` (even n: `i = 2t`;
/// odd n: `i = 2t+1`, `s <= t`). The result is pairwise vertex-disjoint and
/// has the conjectured closed-form cardinality: `(n^3-3n^2+2n)/12` for even
/// n and `(n^3-3n^2-n+3)/12` for odd n.
pub fn conjecture_matching_set(n: usize) -> Result<Vec<(StairCoord, StairCoord)>> {
    if n < 4 {
        return Err(Error::InvalidSize {
            what: "conjectured matching",
            min: 4,
            got: n,
        });
    }
    let mut edges = Vec::new();
    let t_max = if n.is_multiple_of(2) { (n - 2) / 2 } else { (n - 3) / 2 };
    for t in 1..=t_max {
        let k = 2 * t - 1;
        for i in 1..=n - 2 - k {
            for j in 1..=i {
                edges.push((StairCoord::new(i, j, k), StairCoord::new(i, j, k + 1)));
            }
        }
    }
    for t in 1..=t_max {
        let (i, k) = if n.is_multiple_of(2) {
            (2 * t, n - 1 - 2 * t)
        } else {
            (2 * t + 1, n - 2 - 2 * t)
        };
        for s in 1..=t {
            let j = 2 * s - 1;
            edges.push((StairCoord::new(i, j, k), StairCoord::new(i, j + 1, k)));
        }
    }
    Ok(edges)
}

/// The conjectured matching number of `CS_n` in closed form, `n >= 4`.
pub fn conjecture_matching_number(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidSize {
            what: "conjectured matching number",
            min: 4,
            got: n,
        });
    }
    let n3 = n as u64;
    Ok(if n.is_multiple_of(2) {
        (n3 * n3 * n3 - 3 * n3 * n3 + 2 * n3) / 12
    } else {
        (n3 * n3 * n3 - 3 * n3 * n3 - n3 + 3) / 12
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cs3_is_a_single_vertex() {
        let sg = staircase_graph(3).unwrap();
        assert_eq!(sg.vertex_count(), 1);
        assert_eq!(sg.edge_count(), 0);
        assert_eq!(sg.coord(0), StairCoord::new(1, 1, 1));
    }

    #[test]
    fn cs4_is_a_path_on_the_four_listed_coords() {
        let sg = staircase_graph(4).unwrap();
        let expected = [
            StairCoord::new(1, 1, 1),
            StairCoord::new(1, 1, 2),
            StairCoord::new(2, 1, 1),
            StairCoord::new(2, 2, 1),
        ];
        assert_eq!(sg.coords(), &expected);
        assert_eq!(sg.edge_count(), 3);
        let id = |i, j, k| sg.id_of(&StairCoord::new(i, j, k)).unwrap();
        assert!(sg.graph().has_edge(id(1, 1, 1), id(1, 1, 2)));
        assert!(sg.graph().has_edge(id(1, 1, 1), id(2, 1, 1)));
        assert!(sg.graph().has_edge(id(2, 1, 1), id(2, 2, 1)));
        // Degree sequence 1,1,2,2: a path.
        assert_eq!(sg.graph().degree_sequence(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn vertex_and_edge_counts_up_to_12() {
        for n in 3..=12 {
            let sg = staircase_graph(n).unwrap();
            assert_eq!(sg.vertex_count() as u64, binomial(n, 3));
            // Forced by the path isomorphism: (n-1) * C(n-2, 2) edges.
            assert_eq!(
                sg.edge_count() as u64,
                (n as u64 - 1) * binomial(n - 2, 2),
                "edge count at n={n}"
            );
        }
    }

    #[test]
    fn every_edge_is_a_unit_step() {
        let sg = staircase_graph(7).unwrap();
        for (u, v) in sg.graph().edges() {
            let (a, b) = (sg.coord(u), sg.coord(v));
            let deltas = [
                a.i.abs_diff(b.i),
                a.j.abs_diff(b.j),
                a.k.abs_diff(b.k),
            ];
            assert_eq!(deltas.iter().sum::<usize>(), 1, "edge {a}-{b}");
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(staircase_graph(2), Err(Error::InvalidSize { .. })));
        assert!(matches!(
            conjecture_matching_set(3),
            Err(Error::InvalidSize { .. })
        ));
        assert!(matches!(
            closed_form_invariants(2),
            Err(Error::InvalidSize { .. })
        ));
    }

    #[test]
    fn distance_formula_examples() {
        // Same vertex.
        let a = StairCoord::new(2, 1, 1);
        assert_eq!(staircase_distance(5, &a, &a).unwrap(), 0);
        // The diameter-realizing pair for n=5.
        let lo = StairCoord::new(1, 1, 3);
        let hi = StairCoord::new(3, 3, 1);
        assert_eq!(staircase_distance(5, &lo, &hi).unwrap(), 6);
        // Domain errors.
        assert!(staircase_distance(3, &a, &a).is_err());
        assert!(staircase_distance(4, &StairCoord::new(1, 1, 3), &a).is_err());
    }

    #[test]
    fn coordinate_map_examples() {
        // {1,2,3} for n=4 (0-based {0,1,2}) lands on (1,1,2).
        let t = TokenVertex::new(vec![0, 1, 2]).unwrap();
        assert_eq!(token_to_coord(&t, 4).unwrap(), StairCoord::new(1, 1, 2));
        // {1,2,n} lands on (1,1,1) for every n >= 3.
        for n in 3..=9 {
            let t = TokenVertex::new(vec![0, 1, n - 1]).unwrap();
            assert_eq!(token_to_coord(&t, n).unwrap(), StairCoord::new(1, 1, 1));
        }
        // Inverse anchors for n=4.
        let back = coord_to_token(&StairCoord::new(1, 1, 1), 4).unwrap();
        assert_eq!(back.to_string(), "{1,2,4}");
        let back = coord_to_token(&StairCoord::new(2, 1, 1), 4).unwrap();
        assert_eq!(back.to_string(), "{1,3,4}");
    }

    #[test]
    fn coordinate_map_is_a_bijection() {
        for n in [6, 7] {
            let sg = staircase_graph(n).unwrap();
            let mut images = Vec::new();
            for rank in 0..binomial(n, 3) {
                let t = crate::subsets::unrank_subset(rank, n, 3).unwrap();
                let c = token_to_coord(&t, n).unwrap();
                assert_eq!(coord_to_token(&c, n).unwrap(), t);
                images.push(c);
            }
            images.sort();
            assert_eq!(images, sg.coords());
        }
    }

    #[test]
    fn coordinate_map_rejects_bad_input() {
        let pair = TokenVertex::new(vec![0, 1]).unwrap();
        assert!(token_to_coord(&pair, 5).is_err());
        let oob = TokenVertex::new(vec![0, 1, 5]).unwrap();
        assert!(token_to_coord(&oob, 5).is_err());
        assert!(coord_to_token(&StairCoord::new(3, 1, 1), 4).is_err());
    }

    #[test]
    fn closed_forms_at_anchor_points() {
        let f = closed_form_invariants(6).unwrap();
        assert_eq!((f.chi, f.omega, f.alpha, f.diam), (2, 2, 10, 9));
        let f = closed_form_invariants(3).unwrap();
        assert_eq!((f.chi, f.omega, f.alpha, f.diam), (1, 1, 1, 0));
        let f = closed_form_invariants(7).unwrap();
        assert_eq!((f.alpha, f.diam), (19, 12));
        let f = closed_form_invariants(5).unwrap();
        assert_eq!(f.alpha, 6);
    }

    #[test]
    fn parity_classes() {
        let sg = staircase_graph(4).unwrap();
        let classes = parity_two_coloring(&sg);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].len(), 2);
        assert_eq!(classes[1].len(), 2);

        let sg = staircase_graph(7).unwrap();
        let classes = parity_two_coloring(&sg);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![16, 19]);

        // Single class for the one-vertex case.
        let sg = staircase_graph(3).unwrap();
        assert_eq!(parity_two_coloring(&sg).len(), 1);

        // Properness: every edge joins opposite parities.
        let sg = staircase_graph(6).unwrap();
        for (u, v) in sg.graph().edges() {
            let (a, b) = (sg.coord(u), sg.coord(v));
            assert_ne!((a.i + a.j + a.k) % 2, (b.i + b.j + b.k) % 2);
        }
    }

    #[test]
    fn conjecture_matching_set_is_a_disjoint_edge_set() {
        for n in 4..=11 {
            let sg = staircase_graph(n).unwrap();
            let m = conjecture_matching_set(n).unwrap();
            assert_eq!(
                m.len() as u64,
                conjecture_matching_number(n).unwrap(),
                "cardinality at n={n}"
            );
            let mut seen = std::collections::BTreeSet::new();
            for (a, b) in &m {
                let (u, v) = (sg.id_of(a).unwrap(), sg.id_of(b).unwrap());
                assert!(sg.graph().has_edge(u, v), "{a}-{b} not an edge at n={n}");
                assert!(seen.insert(u), "vertex {a} reused at n={n}");
                assert!(seen.insert(v), "vertex {b} reused at n={n}");
            }
        }
    }

    #[test]
    fn conjecture_matching_set_small_cases() {
        let m = conjecture_matching_set(4).unwrap();
        assert_eq!(
            m,
            vec![
                (StairCoord::new(1, 1, 1), StairCoord::new(1, 1, 2)),
                (StairCoord::new(2, 1, 1), StairCoord::new(2, 2, 1)),
            ]
        );
        assert_eq!(conjecture_matching_set(5).unwrap().len(), 4);
        assert_eq!(conjecture_matching_set(6).unwrap().len(), 10);
    }

    #[test]
    fn labels_match_coordinate_rendering() {
        let sg = staircase_graph(8).unwrap();
        assert_eq!(sg.vertex_count(), 56);
        let id = sg.id_of(&StairCoord::new(1, 1, 6)).unwrap();
        assert_eq!(sg.graph().label(id), "(1,1,6)");
    }
}
