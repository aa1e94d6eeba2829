//! Exact graph invariants: components, diameter, bipartiteness,
//! triangle-freeness, chromatic number, clique number, independence number
//! and matching number.
//!
//! Every solver is exact and deterministic (ties always break toward the
//! lowest vertex id). The polynomial invariants run on anything within the
//! report budget; the NP-hard ones are branch-and-bound with safe shortcuts
//! (edgeless, bipartite, triangle-free) that cover the graphs this crate is
//! mostly pointed at.

mod clique;
mod coloring;
mod matching;

use serde::{Serialize, Serializer};
use std::collections::VecDeque;
use std::fmt;

pub use clique::clique_number;
pub use coloring::chromatic_number;
pub use matching::{matching_number, maximum_matching};

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};

/// Diameter of a graph: finite value or an explicit infinite marker for
/// disconnected inputs. Serializes as a number or the string `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u64),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => ser.serialize_u64(*d),
            Diameter::Infinite => ser.serialize_str("infinite"),
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

/// Outcome of the bipartiteness test: a proper 2-coloring, or an odd closed
/// walk as a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` is 0 or 1; every edge joins the two classes.
    Bipartite { coloring: Vec<u8> },
    /// Vertex sequence of an odd cycle; consecutive entries (and last-first)
    /// are adjacent, and the length is odd.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS distances from `src`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Partition of the vertex set by reachability.
///
/// Components are listed by their lowest vertex id, each sorted ascending.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Exact diameter by all-pairs BFS; disconnected graphs yield
/// [`Diameter::Infinite`]. The empty graph is a domain error.
pub fn diameter(g: &Graph) -> Result<Diameter> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph { op: "diameter" });
    }
    let mut best = 0;
    for src in 0..n {
        let dist = bfs_distances(g, src);
        for d in &dist {
            match d {
                Some(d) => best = best.max(*d),
                None => return Ok(Diameter::Infinite),
            }
        }
    }
    Ok(Diameter::Finite(best))
}

/// BFS 2-coloring test with witnesses in both directions.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut color = vec![None::<u8>; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Bipartiteness::OddCycle {
                            cycle: odd_cycle_through(&parent, u, v),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: color.into_iter().map(|c| c.expect("all colored")).collect(),
    }
}

/// Assembles the odd cycle closed by tree paths from `u` and `v` to their
/// lowest common ancestor in the BFS forest, plus the violating edge `uv`.
fn odd_cycle_through(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = ancestors(u);
    let pv = ancestors(v);
    // Walk back from the root: the last common vertex is the meeting point.
    let mut common = 0;
    while common < pu.len().min(pv.len())
        && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
    {
        common += 1;
    }
    let lca_u = pu.len() - common; // index of LCA in pu
    let mut cycle: Vec<usize> = pu[..=lca_u].to_vec();
    cycle.extend(pv[..pv.len() - common].iter().rev());
    debug_assert!(cycle.len() % 2 == 1, "cycle {cycle:?} is not odd");
    cycle
}

/// True iff the graph has no triangle (exhaustive neighbor-intersection
/// scan over all edges).
pub fn triangle_free(g: &Graph) -> bool {
    let words = g.words_per_row();
    for (u, v) in g.edges() {
        let (ru, rv) = (g.row(u), g.row(v));
        if (0..words).any(|w| ru[w] & rv[w] != 0) {
            return false;
        }
    }
    true
}

/// Exact independence number.
///
/// Bipartite inputs go through the matching identity `alpha = |V| - alpha'`;
/// everything else is a complement-clique branch-and-bound.
pub fn independence_number(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph {
            op: "independence_number",
        });
    }
    if is_bipartite(g).is_bipartite() {
        return Ok(n as u64 - matching_number(g));
    }
    Ok(clique_number(&complement(g))? as u64)
}

/// Vertex budgets for [`full_report`]: a global cap, and a tighter cap for
/// the NP-hard invariants when no safe shortcut applies.
#[derive(Debug, Clone, Copy)]
pub struct SolverBudget {
    pub max_vertices: usize,
    pub max_hard_vertices: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_vertices: 200,
            max_hard_vertices: 64,
        }
    }
}

/// Full invariant report with stable JSON field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub components: usize,
    pub diameter: Diameter,
    pub chi: u32,
    pub omega: u32,
    pub alpha: u64,
    pub alpha_prime: u64,
    pub triangle_free: bool,
    pub bipartite: bool,
}

/// Computes every invariant of the report under the default budget.
pub fn full_report(g: &Graph) -> Result<InvariantReport> {
    full_report_with_budget(g, SolverBudget::default())
}

/// Computes every invariant of the report.
///
/// The NP-hard invariants (chi, omega, alpha) fall back to exact shortcuts
/// when the graph is edgeless, bipartite, or triangle-free; otherwise they
/// require `|V| <= budget.max_hard_vertices` and fail with a resource error
/// naming the offending invariant. Cross-field sanity (omega <= chi, the
/// pigeonhole bound on alpha, the matching bound, König consistency) is
/// asserted before returning.
pub fn full_report_with_budget(g: &Graph, budget: SolverBudget) -> Result<InvariantReport> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph { op: "full_report" });
    }
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded {
            what: "full_report",
            limit: budget.max_vertices,
            got: n,
        });
    }
    let guard = |what: &'static str| -> Result<()> {
        if n > budget.max_hard_vertices {
            Err(Error::BudgetExceeded {
                what,
                limit: budget.max_hard_vertices,
                got: n,
            })
        } else {
            Ok(())
        }
    };

    let components = connected_components(g).len();
    let diam = diameter(g)?;
    let bipartite = is_bipartite(g).is_bipartite();
    let tri_free = triangle_free(g);
    let edgeless = g.edge_count() == 0;

    let alpha_prime = matching_number(g);

    let chi = if edgeless {
        1
    } else if bipartite {
        2
    } else {
        guard("chromatic_number")?;
        chromatic_number(g)?
    };

    let omega = if edgeless {
        1
    } else if tri_free {
        2
    } else {
        guard("clique_number")?;
        clique_number(g)?
    };

    let alpha = if bipartite {
        n as u64 - alpha_prime
    } else {
        guard("independence_number")?;
        clique_number(&complement(g))? as u64
    };

    assert!(omega <= chi, "clique bound violated: {omega} > {chi}");
    assert!(
        alpha >= (n as u64).div_ceil(chi as u64),
        "pigeonhole bound violated"
    );
    assert!(alpha_prime <= n as u64 / 2, "matching bound violated");
    assert!(!tri_free || omega <= 2, "triangle-free but omega > 2");
    assert!(
        !bipartite || alpha + alpha_prime == n as u64,
        "König consistency violated"
    );

    Ok(InvariantReport {
        components,
        diameter: diam,
        chi,
        omega,
        alpha,
        alpha_prime,
        triangle_free: tri_free,
        bipartite,
    })
}
