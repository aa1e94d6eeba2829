//! Decomposition of token graphs of disjoint unions into token graphs of
//! the parts and Cartesian products, with the canonical vertex
//! identifications made explicit and checked.
//!
//! For a two-part union the 3-token vertex set splits into four classes by
//! intersection with the parts: `W1` (all three tokens in the first part),
//! `W2` (all three in the second), `W3` (one and two), `W4` (two and one).
//! Each class induces one summand — a 3-token graph of a part or a product
//! of a 2-token graph with the other part — and no edges cross classes.
//! The n-part versions for 2 and 3 tokens follow the same pattern with
//! pairwise and triple products.
//!
//! Every right-hand side is built over its own block-ordered id space but
//! labeled by the token each vertex represents, so equality with the
//! directly constructed token graph is checked as labeled edge-set
//! identity — strictly stronger than isomorphism.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::binomial;
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph};
use crate::subsets::TokenVertex;
use crate::token::{token_graph, TokenGraph};

/// Intersection class of a 3-token vertex relative to a two-part split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassTag {
    W1,
    W2,
    W3,
    W4,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassTag::W1 => "W1",
            ClassTag::W2 => "W2",
            ClassTag::W3 => "W3",
            ClassTag::W4 => "W4",
        };
        f.write_str(s)
    }
}

/// Classifies a 3-token vertex by its intersection sizes with the first
/// `split` vertices: (3,0) -> W1, (0,3) -> W2, (1,2) -> W3, (2,1) -> W4.
pub fn classify_pair(token: &TokenVertex, split: usize) -> Result<ClassTag> {
    if token.k() != 3 {
        return Err(Error::InvalidSubset {
            reason: format!("pair classification needs 3 tokens, got {}", token.k()),
        });
    }
    let in_first = token.members().iter().filter(|&&v| v < split).count();
    Ok(match in_first {
        3 => ClassTag::W1,
        0 => ClassTag::W2,
        1 => ClassTag::W3,
        _ => ClassTag::W4,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Naming {
    /// Two-part 3-token classes W1..W4.
    PairW,
    /// Block-indexed summand names for the n-part versions.
    Blocks,
}

/// A right-hand-side graph assembled from summands, carrying per-vertex
/// canonical tokens and summand class names.
#[derive(Debug, Clone)]
pub struct DecomposedTokenGraph {
    graph: Graph,
    tokens: Vec<TokenVertex>,
    classes: Vec<String>,
    blocks: Vec<usize>,
    naming: Naming,
    k: usize,
}

struct Summand {
    graph: Graph,
    tokens: Vec<TokenVertex>,
    class: String,
}

fn assemble(blocks: Vec<usize>, naming: Naming, k: usize, summands: Vec<Summand>) -> DecomposedTokenGraph {
    let total: usize = summands.iter().map(|s| s.graph.vertex_count()).sum();
    let mut edges = Vec::new();
    let mut tokens = Vec::with_capacity(total);
    let mut classes = Vec::with_capacity(total);
    let mut offset = 0;
    for s in &summands {
        for (u, v) in s.graph.edges() {
            edges.push((u + offset, v + offset));
        }
        tokens.extend(s.tokens.iter().cloned());
        classes.extend(std::iter::repeat_n(s.class.clone(), s.graph.vertex_count()));
        offset += s.graph.vertex_count();
    }
    let labels: Vec<String> = tokens.iter().map(|t| t.to_string()).collect();
    let graph = Graph::from_edges(total, &edges)
        .expect("summand edges are valid by construction")
        .with_labels(labels)
        .expect("one label per vertex by construction");
    DecomposedTokenGraph {
        graph,
        tokens,
        classes,
        blocks,
        naming,
        k,
    }
}

impl DecomposedTokenGraph {
    /// The assembled graph, labeled with canonical token strings.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Canonical token of vertex `id`.
    pub fn token(&self, id: usize) -> &TokenVertex {
        &self.tokens[id]
    }

    pub fn tokens(&self) -> &[TokenVertex] {
        &self.tokens
    }

    /// Summand class name of vertex `id`.
    pub fn class(&self, id: usize) -> &str {
        &self.classes[id]
    }

    /// Sizes of the base-graph blocks, in order.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Class name any token over the union belongs to, derived from its
    /// intersection pattern with the blocks (not from this graph's own
    /// vertex list), so it applies equally to vertices of the directly
    /// constructed token graph.
    pub fn class_of_token(&self, token: &TokenVertex) -> Result<String> {
        let total: usize = self.blocks.iter().sum();
        if !token.fits(total) {
            return Err(Error::InvalidSubset {
                reason: format!("token {token} does not fit {total} base vertices"),
            });
        }
        if token.k() != self.k {
            return Err(Error::InvalidSubset {
                reason: format!("expected {} tokens, got {}", self.k, token.k()),
            });
        }
        if self.naming == Naming::PairW {
            return Ok(classify_pair(token, self.blocks[0])?.to_string());
        }
        // Count members per block.
        let mut counts = vec![0usize; self.blocks.len()];
        for &v in token.members() {
            let mut offset = 0;
            for (i, &size) in self.blocks.iter().enumerate() {
                if v < offset + size {
                    counts[i] += 1;
                    break;
                }
                offset += size;
            }
        }
        let hit: Vec<(usize, usize)> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect();
        Ok(match (self.k, hit.as_slice()) {
            (2, [(i, 2)]) => format!("Gamma2(G{})", i + 1),
            (2, [(i, 1), (j, 1)]) => format!("G{}xG{}", i + 1, j + 1),
            (3, [(i, 3)]) => format!("Gamma3(G{})", i + 1),
            (3, [(i, 2), (j, 1)]) => format!("Gamma2(G{})xG{}", i + 1, j + 1),
            (3, [(i, 1), (j, 2)]) => format!("Gamma2(G{})xG{}", j + 1, i + 1),
            (3, [(i, 1), (j, 1), (l, 1)]) => format!("G{}xG{}xG{}", i + 1, j + 1, l + 1),
            _ => unreachable!("counts sum to k over blocks"),
        })
    }

    /// Copy with one edge dropped, for mutation-style self-tests of the
    /// verification path.
    pub fn corrupted_without_edge(&self, u: usize, v: usize) -> DecomposedTokenGraph {
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        let labels: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        let graph = Graph::from_edges(self.graph.vertex_count(), &edges)
            .expect("filtered edges remain valid")
            .with_labels(labels)
            .expect("labels unchanged");
        DecomposedTokenGraph {
            graph,
            ..self.clone()
        }
    }
}

/// Shifts every member of a token by `offset`.
fn shift(token: &TokenVertex, offset: usize) -> TokenVertex {
    TokenVertex::from_sorted(token.members().iter().map(|&v| v + offset).collect())
        .expect("shifting preserves strict order")
}

/// Right-hand side of the 3-token decomposition for a two-part union:
/// the two 3-token graphs of the parts plus both 2-token-by-other-part
/// Cartesian products, each vertex labeled with the token it represents.
///
/// Parts too small for a summand contribute an empty summand, so the
/// result's vertex set is always exactly the 3-subsets of the union.
pub fn rhs_theorem2(g: &Graph, h: &Graph) -> DecomposedTokenGraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut summands = Vec::new();
    if ng >= 3 {
        let t = token_graph(g, 3).expect("ng >= 3");
        summands.push(Summand {
            graph: t.graph().clone(),
            tokens: t.tokens().to_vec(),
            class: ClassTag::W1.to_string(),
        });
    }
    if nh >= 3 {
        let t = token_graph(h, 3).expect("nh >= 3");
        summands.push(Summand {
            graph: t.graph().clone(),
            tokens: t.tokens().iter().map(|t| shift(t, ng)).collect(),
            class: ClassTag::W2.to_string(),
        });
    }
    if nh >= 2 && ng >= 1 {
        // One token moves in the first part, a 2-token pair in the second:
        // product vertex (pair, a) represents {a} ∪ (pair + ng).
        let t2 = token_graph(h, 2).expect("nh >= 2");
        let prod = cartesian_product(t2.graph(), g);
        let mut tokens = Vec::with_capacity(prod.vertex_count());
        for pair in t2.tokens() {
            let (b1, b2) = (pair.members()[0] + ng, pair.members()[1] + ng);
            for a in 0..ng {
                tokens.push(TokenVertex::new(vec![a, b1, b2]).expect("distinct members"));
            }
        }
        summands.push(Summand {
            graph: prod,
            tokens,
            class: ClassTag::W3.to_string(),
        });
    }
    if ng >= 2 && nh >= 1 {
        let t2 = token_graph(g, 2).expect("ng >= 2");
        let prod = cartesian_product(t2.graph(), h);
        let mut tokens = Vec::with_capacity(prod.vertex_count());
        for pair in t2.tokens() {
            let (a1, a2) = (pair.members()[0], pair.members()[1]);
            for b in 0..nh {
                tokens.push(TokenVertex::new(vec![a1, a2, b + ng]).expect("distinct members"));
            }
        }
        summands.push(Summand {
            graph: prod,
            tokens,
            class: ClassTag::W4.to_string(),
        });
    }
    assemble(vec![ng, nh], Naming::PairW, 3, summands)
}

/// Right-hand side of the 2-token decomposition for an n-part union:
/// the 2-token graphs of the parts plus all pairwise Cartesian products.
pub fn rhs_2token_union(graphs: &[Graph]) -> DecomposedTokenGraph {
    let blocks: Vec<usize> = graphs.iter().map(Graph::vertex_count).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &b| {
            let o = *acc;
            *acc += b;
            Some(o)
        })
        .collect();
    let mut summands = Vec::new();
    for (i, gi) in graphs.iter().enumerate() {
        if gi.vertex_count() >= 2 {
            let t = token_graph(gi, 2).expect("block has >= 2 vertices");
            summands.push(Summand {
                graph: t.graph().clone(),
                tokens: t.tokens().iter().map(|t| shift(t, offsets[i])).collect(),
                class: format!("Gamma2(G{})", i + 1),
            });
        }
    }
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            let (ni, nj) = (blocks[i], blocks[j]);
            if ni == 0 || nj == 0 {
                continue;
            }
            let prod = cartesian_product(&graphs[i], &graphs[j]);
            let mut tokens = Vec::with_capacity(ni * nj);
            for u in 0..ni {
                for v in 0..nj {
                    tokens.push(
                        TokenVertex::new(vec![offsets[i] + u, offsets[j] + v])
                            .expect("distinct blocks give distinct members"),
                    );
                }
            }
            summands.push(Summand {
                graph: prod,
                tokens,
                class: format!("G{}xG{}", i + 1, j + 1),
            });
        }
    }
    assemble(blocks, Naming::Blocks, 2, summands)
}

/// Right-hand side of the 3-token decomposition for an n-part union
/// (n >= 2): per-part 3-token graphs, all ordered-pair products of a
/// 2-token graph with another part, and all triple products.
pub fn rhs_theorem3(graphs: &[Graph]) -> Result<DecomposedTokenGraph> {
    if graphs.len() < 2 {
        return Err(Error::TooFewGraphs {
            op: "rhs_theorem3",
            min: 2,
            got: graphs.len(),
        });
    }
    let blocks: Vec<usize> = graphs.iter().map(Graph::vertex_count).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &b| {
            let o = *acc;
            *acc += b;
            Some(o)
        })
        .collect();
    let mut summands = Vec::new();
    for (i, gi) in graphs.iter().enumerate() {
        if gi.vertex_count() >= 3 {
            let t = token_graph(gi, 3).expect("block has >= 3 vertices");
            summands.push(Summand {
                graph: t.graph().clone(),
                tokens: t.tokens().iter().map(|t| shift(t, offsets[i])).collect(),
                class: format!("Gamma3(G{})", i + 1),
            });
        }
    }
    for i in 0..graphs.len() {
        for j in 0..graphs.len() {
            if i == j || blocks[i] < 2 || blocks[j] < 1 {
                continue;
            }
            let t2 = token_graph(&graphs[i], 2).expect("block has >= 2 vertices");
            let prod = cartesian_product(t2.graph(), &graphs[j]);
            let mut tokens = Vec::with_capacity(prod.vertex_count());
            for pair in t2.tokens() {
                let (a1, a2) = (
                    pair.members()[0] + offsets[i],
                    pair.members()[1] + offsets[i],
                );
                for w in 0..blocks[j] {
                    tokens.push(
                        TokenVertex::new(vec![a1, a2, offsets[j] + w])
                            .expect("distinct blocks give distinct members"),
                    );
                }
            }
            summands.push(Summand {
                graph: prod,
                tokens,
                class: format!("Gamma2(G{})xG{}", i + 1, j + 1),
            });
        }
    }
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            for l in (j + 1)..graphs.len() {
                let (ni, nj, nl) = (blocks[i], blocks[j], blocks[l]);
                if ni == 0 || nj == 0 || nl == 0 {
                    continue;
                }
                let prod =
                    cartesian_product(&cartesian_product(&graphs[i], &graphs[j]), &graphs[l]);
                let mut tokens = Vec::with_capacity(ni * nj * nl);
                for u in 0..ni {
                    for v in 0..nj {
                        for w in 0..nl {
                            tokens.push(
                                TokenVertex::new(vec![
                                    offsets[i] + u,
                                    offsets[j] + v,
                                    offsets[l] + w,
                                ])
                                .expect("distinct blocks give distinct members"),
                            );
                        }
                    }
                }
                summands.push(Summand {
                    graph: prod,
                    tokens,
                    class: format!("G{}xG{}xG{}", i + 1, j + 1, l + 1),
                });
            }
        }
    }
    Ok(assemble(blocks, Naming::Blocks, 3, summands))
}

/// Per-class edge comparison between the direct token graph and a
/// decomposed right-hand side.
#[derive(Debug, Clone, Serialize)]
pub struct ClassCheck {
    pub class: String,
    pub lhs_edges: usize,
    pub rhs_edges: usize,
    pub equal: bool,
}

/// Outcome of [`verify_decomposition`]: counts, per-class equality, edges
/// present on only one side (named by their token endpoints), the number of
/// direct-construction edges that cross class boundaries, and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub instance: String,
    pub lhs_vertices: usize,
    pub lhs_edges: usize,
    pub rhs_vertices: usize,
    pub rhs_edges: usize,
    pub classes: Vec<ClassCheck>,
    pub cross_class_edges: usize,
    pub missing_edges: Vec<String>,
    pub extra_edges: Vec<String>,
    pub verdict: bool,
}

const LISTED_EDGE_CAP: usize = 16;

fn edge_names(edges: &BTreeSet<(TokenVertex, TokenVertex)>) -> Vec<String> {
    let mut names: Vec<String> = edges
        .iter()
        .take(LISTED_EDGE_CAP)
        .map(|(a, b)| format!("{a} -- {b}"))
        .collect();
    if edges.len() > LISTED_EDGE_CAP {
        names.push(format!("... and {} more", edges.len() - LISTED_EDGE_CAP));
    }
    names
}

/// Checks that a decomposed right-hand side equals the directly constructed
/// token graph: identical token sets (a mismatch is a structural error
/// naming the first differing token), identical edge sets under the token
/// labels, per-class edge equality, and zero cross-class edges on the left.
pub fn verify_decomposition(
    lhs: &TokenGraph,
    rhs: &DecomposedTokenGraph,
) -> Result<DecompositionReport> {
    let lhs_tokens: BTreeSet<&TokenVertex> = lhs.tokens().iter().collect();
    let rhs_tokens: BTreeSet<&TokenVertex> = rhs.tokens().iter().collect();
    if let Some(t) = lhs_tokens.difference(&rhs_tokens).next() {
        return Err(Error::VertexSetMismatch {
            detail: format!("token {t} only in the direct construction"),
        });
    }
    if let Some(t) = rhs_tokens.difference(&lhs_tokens).next() {
        return Err(Error::VertexSetMismatch {
            detail: format!("token {t} only in the decomposed form"),
        });
    }

    let normalize = |a: &TokenVertex, b: &TokenVertex| -> (TokenVertex, TokenVertex) {
        if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    let lhs_edge_set: BTreeSet<(TokenVertex, TokenVertex)> = lhs
        .graph()
        .edges()
        .into_iter()
        .map(|(u, v)| normalize(lhs.token(u), lhs.token(v)))
        .collect();
    let rhs_edge_set: BTreeSet<(TokenVertex, TokenVertex)> = rhs
        .graph()
        .edges()
        .into_iter()
        .map(|(u, v)| normalize(rhs.token(u), rhs.token(v)))
        .collect();

    let missing: BTreeSet<_> = lhs_edge_set.difference(&rhs_edge_set).cloned().collect();
    let extra: BTreeSet<_> = rhs_edge_set.difference(&lhs_edge_set).cloned().collect();

    // Group both edge sets by class; count left edges crossing classes.
    let mut class_names: Vec<String> = Vec::new();
    for id in 0..rhs.vertex_count() {
        let c = rhs.class(id).to_string();
        if !class_names.contains(&c) {
            class_names.push(c);
        }
    }
    let mut cross_class_edges = 0usize;
    let mut lhs_by_class: Vec<BTreeSet<(TokenVertex, TokenVertex)>> =
        vec![BTreeSet::new(); class_names.len()];
    for (a, b) in &lhs_edge_set {
        let (ca, cb) = (rhs.class_of_token(a)?, rhs.class_of_token(b)?);
        if ca != cb {
            cross_class_edges += 1;
        } else if let Some(i) = class_names.iter().position(|c| *c == ca) {
            lhs_by_class[i].insert((a.clone(), b.clone()));
        }
    }
    let mut rhs_by_class: Vec<BTreeSet<(TokenVertex, TokenVertex)>> =
        vec![BTreeSet::new(); class_names.len()];
    for (a, b) in &rhs_edge_set {
        let ca = rhs.class_of_token(a)?;
        let i = class_names
            .iter()
            .position(|c| *c == ca)
            .expect("rhs vertices carry known classes");
        rhs_by_class[i].insert((a.clone(), b.clone()));
    }
    let classes: Vec<ClassCheck> = class_names
        .iter()
        .enumerate()
        .map(|(i, name)| ClassCheck {
            class: name.clone(),
            lhs_edges: lhs_by_class[i].len(),
            rhs_edges: rhs_by_class[i].len(),
            equal: lhs_by_class[i] == rhs_by_class[i],
        })
        .collect();

    let verdict = missing.is_empty()
        && extra.is_empty()
        && cross_class_edges == 0
        && classes.iter().all(|c| c.equal);
    Ok(DecompositionReport {
        instance: format!("{}-token graph over blocks {:?}", rhs.k, rhs.blocks),
        lhs_vertices: lhs.vertex_count(),
        lhs_edges: lhs.edge_count(),
        rhs_vertices: rhs.vertex_count(),
        rhs_edges: rhs.edge_count(),
        classes,
        cross_class_edges,
        missing_edges: edge_names(&missing),
        extra_edges: edge_names(&extra),
        verdict,
    })
}

/// Number of components of the 3-token graph of a disjoint union of n
/// connected parts, each with at least 3 vertices: n^2 + C(n,3).
pub fn components_formula(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidSize {
            what: "components_formula parts",
            min: 2,
            got: n,
        });
    }
    Ok((n * n) as u64 + binomial(n, 3))
}
