//! Finite simple undirected graphs with dense ids and bit-packed adjacency.
//!
//! Vertices are `0..n` internally; every human-facing surface (labels, DOT,
//! reports) renders them 1-based. A [`Graph`] is immutable once built --
//! constructors and the generator functions are the only way to introduce
//! edges -- which keeps structural invariants trivially true everywhere else
//! in the crate and makes sharing across checks safe.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph over vertex ids `0..n`.
///
/// Adjacency is stored as one bitset row per vertex, so edge tests are O(1)
/// and neighborhood intersections (triangle scans, clique search) are word
/// operations.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges. `n = 0` is allowed.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
            labels: None,
        }
    }

    /// Graph on `n` vertices with the given edges.
    ///
    /// Edges may appear in either orientation and repeatedly; duplicates
    /// collapse. Loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "loops are not allowed in a simple graph",
                });
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds an undirected edge. Crate-internal: public construction goes
    /// through [`Graph::from_edges`] and the generators.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "loop edge {u}");
        debug_assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        if !self.has_edge(u, v) {
            self.bits[u * self.words + v / 64] |= 1 << (v % 64);
            self.bits[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Edge test. Panics if an endpoint is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let base = v * self.words;
        self.bits[base..base + self.words]
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter { word: w, base: wi * 64 })
    }

    /// All edges as normalized `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The edge set as an [`EdgeList`].
    pub fn edge_list(&self) -> EdgeList {
        EdgeList(self.edges().into_iter().collect())
    }

    /// Bitset adjacency row of `v` (crate-internal, for the solvers).
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Words per adjacency row (crate-internal).
    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadLabels {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Explicit labels, if any were attached.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`: the attached label, or the 1-based id.
    pub fn label(&self, v: usize) -> String {
        assert!(v < self.n, "vertex {v} out of range");
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    /// Sorted degree sequence (ascending).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }
}

impl PartialEq for Graph {
    /// Structural equality: same vertex count and same adjacency.
    /// Labels are display metadata and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Iterator over the set bits of one word.
struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

/// Undirected edge set with normalized `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList(BTreeSet<(usize, usize)>);

impl EdgeList {
    /// Normalizes and collects edges; rejects loops.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "loops are not allowed in a simple graph",
                });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(EdgeList(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    /// Normalized pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}

/// Path graph `P_n`: vertices `0..n`, edges `i ~ i+1`. `P_1` is a single
/// vertex.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize {
            what: "path graph",
            min: 1,
            got: 0,
        });
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

/// Cycle graph `C_n`, requiring `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "cycle graph",
            min: 3,
            got: n,
        });
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Complete graph `K_n`, requiring `n >= 1`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize {
            what: "complete graph",
            min: 1,
            got: 0,
        });
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Disjoint union `G + H`.
///
/// The result keeps `G`'s ids and shifts every id of `H` by `|V(G)|`, so the
/// `H` block starts at id `|V(G)|`. When both operands are unlabeled the
/// result is unlabeled too (default rendering then shows consecutive 1-based
/// ids across the whole union); when either operand carries labels, the
/// result records each block's own display labels so callers can map a union
/// vertex back to its operand vertex. An n-ary union is the left-to-right
/// fold of this binary operation.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let ng = g.vertex_count();
    let mut out = Graph::empty(ng + h.vertex_count());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(ng + u, ng + v);
    }
    if g.labels.is_some() || h.labels.is_some() {
        let mut labels: Vec<String> = (0..ng).map(|v| g.label(v)).collect();
        labels.extend((0..h.vertex_count()).map(|v| h.label(v)));
        out.labels = Some(labels);
    }
    out
}

/// Cartesian product `G x H` (the box product).
///
/// Vertex `(a, x)` gets id `a * |V(H)| + x` (row-major, G-major), and
/// `(a, x) ~ (b, y)` iff `a = b, xy in E(H)` or `x = y, ab in E(G)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = Graph::empty(ng * nh);
    for a in 0..ng {
        for (x, y) in h.edges() {
            out.add_edge(a * nh + x, a * nh + y);
        }
    }
    for (a, b) in g.edges() {
        for x in 0..nh {
            out.add_edge(a * nh + x, b * nh + x);
        }
    }
    if g.labels.is_some() || h.labels.is_some() {
        let mut labels = Vec::with_capacity(ng * nh);
        for a in 0..ng {
            for x in 0..nh {
                labels.push(format!("({},{})", g.label(a), h.label(x)));
            }
        }
        out.labels = Some(labels);
    }
    out
}

/// Complement graph: same vertices, exactly the missing non-loop edges.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out.labels = g.labels.clone();
    out
}
