//! Vertex subsets and their dense colexicographic indexing.
//!
//! Token-graph vertices are k-subsets of the base vertex set. They are stored
//! as strictly increasing id vectors and addressed by colexicographic rank:
//! the subset `{c_1 < c_2 < ... < c_k}` has rank `sum_i C(c_i, i)`. Two
//! properties make colex the right choice here:
//!
//! * ranks are independent of the ambient `n`, so a subset keeps its rank when
//!   the base graph grows, and
//! * the `C(m,k)` subsets of `{0..m-1}` occupy exactly the ranks
//!   `0..C(m,k)`, so subsets contained in the first block of a disjoint union
//!   form a contiguous id prefix.

use std::fmt;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` as an exact `u64`.
///
/// Returns 0 when `k > n`. Intermediate products are computed in `u128`; the
/// function panics on results that do not fit in a `u64`, which is far beyond
/// the desk scale this crate targets.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // Multiply before dividing; the running product is always divisible.
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// A set of base-graph vertices, stored strictly increasing.
///
/// Ids are 0-based internally; [`fmt::Display`] renders the 1-based form used
/// in all human-facing output, e.g. `{1,2,5}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenVertex(Vec<usize>);

impl TokenVertex {
    /// Builds a subset from members in any order, normalizing by sorting.
    ///
    /// Duplicate members are rejected.
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset {
                reason: format!("duplicate member in {members:?}"),
            });
        }
        Ok(TokenVertex(members))
    }

    /// Builds a subset from members that must already be strictly increasing.
    pub fn from_sorted(members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset {
                reason: format!("{members:?} is not strictly increasing"),
            });
        }
        Ok(TokenVertex(members))
    }

    /// The members, strictly increasing, 0-based.
    pub fn members(&self) -> &[usize] {
        &self.0
    }

    /// Number of members (the `k` of a k-token vertex).
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Membership test.
    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True when every member is a vertex id of a graph on `n` vertices.
    pub fn fits(&self, n: usize) -> bool {
        self.0.last().is_none_or(|&m| m < n)
    }
}

impl fmt::Display for TokenVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, v) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Colexicographic rank of a subset. Exact inverse of [`unrank_subset`].
pub fn rank_subset(subset: &TokenVertex) -> u64 {
    subset
        .members()
        .iter()
        .enumerate()
        .map(|(pos, &c)| binomial(c, pos + 1))
        .sum()
}

/// Subset of `{0..n-1}` with `k` members at colexicographic `rank`.
///
/// Errors when `rank >= C(n, k)`.
pub fn unrank_subset(rank: u64, n: usize, k: usize) -> Result<TokenVertex> {
    let limit = binomial(n, k);
    if rank >= limit {
        return Err(Error::RankOutOfRange { rank, limit });
    }
    let mut members = vec![0usize; k];
    let mut rest = rank;
    let mut ceiling = n;
    for pos in (1..=k).rev() {
        // Largest c with C(c, pos) <= rest; c < ceiling keeps members distinct.
        let mut c = ceiling - 1;
        while binomial(c, pos) > rest {
            c -= 1;
        }
        rest -= binomial(c, pos);
        members[pos - 1] = c;
        ceiling = c;
    }
    debug_assert_eq!(rest, 0);
    TokenVertex::from_sorted(members)
}
