//! The conjecture table: computed matching numbers of 3-token graphs of
//! paths against their conjectured closed forms, together with a validated
//! constructed matching of the conjectured size.
//!
//! This check is explicitly labeled a conjecture. The theorems suite never
//! gates on it; the dedicated conjecture suite does.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use tokengraph::invariants::matching_number;
use tokengraph::{
    conjecture_matching_number, conjecture_matching_set, coord_to_token, path_graph, token_graph,
    Error, Result,
};

use crate::report::{CheckRecord, ExpectedSource};

/// Largest `n` the conjecture solver run accepts by default.
pub const CONJECTURE_BUDGET: usize = 12;

/// One row of the conjecture table.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    /// Path order.
    pub n: usize,
    /// The conjectured closed form for the matching number.
    pub closed_form: u64,
    /// The matching number computed by the exact solver.
    pub computed: u64,
    /// Size of the explicitly constructed matching.
    pub constructed: u64,
    /// Whether the constructed edge set really is a matching of the graph.
    pub construction_valid: bool,
    /// Whether the computed matching number equals the closed form.
    pub agrees: bool,
}

/// The conjecture table over a range of path orders.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    /// Always `"CONJECTURE"`: this is a conjecture check, not a theorem.
    pub status: &'static str,
    /// Smallest path order covered.
    pub n_min: usize,
    /// Largest path order covered.
    pub n_max: usize,
    /// One row per path order.
    pub rows: Vec<ConjectureRow>,
}

/// Builds the conjecture table for `n_min..=n_max`.
///
/// Requires `4 <= n_min <= n_max <= CONJECTURE_BUDGET`; larger ranges are a
/// resource error, smaller ones a domain error.
pub fn conjecture_report(n_min: usize, n_max: usize) -> Result<ConjectureReport> {
    if n_min < 4 || n_min > n_max {
        return Err(Error::InvalidSize {
            what: "conjecture table range",
            min: 4,
            got: n_min.min(n_max),
        });
    }
    if n_max > CONJECTURE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "conjecture table",
            limit: CONJECTURE_BUDGET,
            got: n_max,
        });
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let tg = token_graph(&path_graph(n)?, 3)?;
        let closed_form = conjecture_matching_number(n)?;
        let computed = matching_number(tg.graph());

        let set = conjecture_matching_set(n)?;
        let mut used = vec![false; tg.vertex_count()];
        let mut construction_valid = true;
        for (a, b) in &set {
            let u = tg.id_of(&coord_to_token(a, n)?)?;
            let v = tg.id_of(&coord_to_token(b, n)?)?;
            if !tg.graph().has_edge(u, v) || used[u] || used[v] {
                construction_valid = false;
                break;
            }
            used[u] = true;
            used[v] = true;
        }
        rows.push(ConjectureRow {
            n,
            closed_form,
            computed,
            constructed: set.len() as u64,
            construction_valid,
            agrees: computed == closed_form,
        });
    }
    Ok(ConjectureReport {
        status: "CONJECTURE",
        n_min,
        n_max,
        rows,
    })
}

impl ConjectureReport {
    /// Converts the table into suite records: one formula comparison and one
    /// witness validation per row.
    pub fn to_records(&self) -> Vec<CheckRecord> {
        let mut records = Vec::new();
        for row in &self.rows {
            let t = Instant::now();
            records.push(CheckRecord::compare(
                "matching-conjecture",
                format!("n={}", row.n),
                row.closed_form,
                row.computed,
                ExpectedSource::ClosedForm,
                t,
            ));
            let computed = if row.construction_valid {
                format!("matching of size {}", row.constructed)
            } else {
                "not a matching".to_string()
            };
            records.push(CheckRecord::compare(
                "conjecture-witness",
                format!("n={}", row.n),
                format!("matching of size {}", row.closed_form),
                computed,
                ExpectedSource::Construction,
                t,
            ));
        }
        records
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CONJECTURE check (not a theorem): matching numbers of 3-token graphs of paths"
        )?;
        writeln!(
            f,
            "{:>4} {:>12} {:>10} {:>12} {:>7} {:>7}",
            "n", "closed form", "computed", "constructed", "valid", "agree"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>4} {:>12} {:>10} {:>12} {:>7} {:>7}",
                row.n,
                row.closed_form,
                row.computed,
                row.constructed,
                if row.construction_valid { "yes" } else { "NO" },
                if row.agrees { "yes" } else { "NO" },
            )?;
        }
        Ok(())
    }
}
