//! Exact combinatorics of token graphs and cubical staircase graphs.
//!
//! The crate builds k-token graphs of arbitrary base graphs, the cubical
//! staircase family `CS_n` with its coordinate bijection onto 3-token
//! graphs of paths, closed-form invariants with exact solver counterparts,
//! isomorphism/automorphism machinery, and the disjoint-union decomposition
//! of 2- and 3-token graphs. Everything is deterministic and exact; no
//! heuristics, no floating point.

pub mod decompose;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod iso;
pub mod staircase;
pub mod subsets;
pub mod token;

pub use error::{Error, Result};
pub use format::{emit_dot, emit_graph6, parse_graph6};
pub use graph::{
    cartesian_product, complement, complete_graph, cycle_graph, disjoint_union, path_graph,
    EdgeList, Graph,
};
pub use staircase::{
    closed_form_invariants, conjecture_matching_number, conjecture_matching_set, coord_to_token,
    parity_two_coloring, staircase_distance, staircase_graph, token_to_coord,
    ClosedFormInvariants, StairCoord, StairGraph,
};
pub use subsets::{binomial, rank_subset, unrank_subset, TokenVertex};
pub use token::{token_graph, TokenGraph};
