//! Error type shared by every module of the crate.
//!
//! All fallible operations return [`Result`]. Domain violations (bad sizes,
//! out-of-range ids, malformed input) are kept distinct from resource
//! violations (solver budgets), because callers map them to different exit
//! codes.

use thiserror::Error;

/// Crate-wide error enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor was asked for fewer vertices than its family supports.
    #[error("{what} requires at least {min} vertices, got {got}")]
    InvalidSize {
        what: &'static str,
        min: usize,
        got: usize,
    },

    /// A vertex id does not exist in the graph at hand.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// An edge endpoint pair that cannot occur in a simple graph.
    #[error("invalid edge ({u},{v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    /// A label vector whose length does not match the vertex count.
    #[error("expected {expected} vertex labels, got {got}")]
    BadLabels { expected: usize, got: usize },

    /// Token count outside `1..=|V|`.
    #[error("token count k={k} is out of range for a base graph on {n} vertices")]
    InvalidTokenCount { k: usize, n: usize },

    /// A dense subset id outside `0..C(n,k)`.
    #[error("subset rank {rank} out of range, expected less than {limit}")]
    RankOutOfRange { rank: u64, limit: u64 },

    /// A vertex subset violating the strictly-increasing invariant, or with
    /// members outside the base graph.
    #[error("invalid vertex subset: {reason}")]
    InvalidSubset { reason: String },

    /// A triple that is not a vertex of the staircase graph of the given order.
    #[error("({i},{j},{k}) is not a staircase coordinate for n={n}")]
    InvalidCoord {
        i: usize,
        j: usize,
        k: usize,
        n: usize,
    },

    /// An invariant that is undefined on the empty graph.
    #[error("{op} is undefined on the empty graph")]
    EmptyGraph { op: &'static str },

    /// A candidate vertex mapping that is not a bijection between the two
    /// vertex sets. Deliberately distinct from "the mapping is not an
    /// isomorphism", which is an honest `false`.
    #[error("vertex mapping is not a bijection: {reason}")]
    NotABijection { reason: String },

    /// An operation over a family of graphs received too few of them.
    #[error("{op} needs at least {min} graphs, got {got}")]
    TooFewGraphs {
        op: &'static str,
        min: usize,
        got: usize,
    },

    /// A solver budget was exceeded; the offending computation is named.
    #[error("{what} exceeds its budget of {limit} ({got} requested)")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// Malformed graph6 input; `offset` is the byte position in the input.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// Two sides of a decomposition disagree already at the vertex level.
    #[error("decomposition vertex sets differ: {detail}")]
    VertexSetMismatch { detail: String },
}

impl Error {
    /// True for errors that signal an exhausted resource budget rather than a
    /// domain violation. The CLI maps these to a dedicated exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
