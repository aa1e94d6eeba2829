//! Suite orchestration: configuration, profile selection and report
//! assembly.
//!
//! The `theorems` profile runs every theorem-grade check, with each family
//! clamped to the configured range. The `conjecture` profile runs only the
//! conjecture table, which gates there and nowhere else. All checks are
//! pure and run in a fixed order, so a configuration pins the report down
//! to the byte (runtimes aside).

use std::fmt;
use std::str::FromStr;

use tokengraph::{Error, Result};

use crate::checks;
use crate::conjecture;
use crate::report::{CheckRecord, VerificationReport};

/// Which profile to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    /// Every theorem-grade check; conjecture results never gate here.
    Theorems,
    /// The conjecture table only; mismatches fail the run.
    Conjecture,
}

impl SuiteKind {
    /// The identifier used in reports and on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteKind::Theorems => "theorems",
            SuiteKind::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorems" => Ok(SuiteKind::Theorems),
            "conjecture" => Ok(SuiteKind::Conjecture),
            other => Err(format!(
                "unknown suite '{other}' (expected 'theorems' or 'conjecture')"
            )),
        }
    }
}

/// Configuration of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Profile to run.
    pub suite: SuiteKind,
    /// Smallest family parameter.
    pub n_min: usize,
    /// Largest family parameter.
    pub n_max: usize,
    /// Seed for randomized instance streams.
    pub seed: u64,
    /// Largest graph (in vertices) the exponential solvers accept.
    pub max_solver_vertices: usize,
    /// Deliberately corrupt one decomposition to prove failures surface.
    pub self_test_corrupt: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteKind::Theorems,
            n_min: 3,
            n_max: 9,
            seed: 42,
            max_solver_vertices: 200,
            self_test_corrupt: false,
        }
    }
}

impl SuiteConfig {
    /// Rejects ranges and budgets the checks cannot honor.
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 3 {
            return Err(Error::InvalidSize {
                what: "suite n_min",
                min: 3,
                got: self.n_min,
            });
        }
        if self.n_max < self.n_min {
            return Err(Error::InvalidSize {
                what: "suite n_max (must reach n_min)",
                min: self.n_min,
                got: self.n_max,
            });
        }
        if self.max_solver_vertices == 0 {
            return Err(Error::InvalidSize {
                what: "solver vertex budget",
                min: 1,
                got: 0,
            });
        }
        if self.suite == SuiteKind::Conjecture && self.n_max > conjecture::CONJECTURE_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "conjecture suite n_max",
                limit: conjecture::CONJECTURE_BUDGET,
                got: self.n_max,
            });
        }
        Ok(())
    }
}

/// Intersects the configured range with a check's own domain; `None` when
/// the intersection is empty.
fn clamp(cfg: &SuiteConfig, lo: usize, hi: usize) -> Option<(usize, usize)> {
    let lo = lo.max(cfg.n_min);
    let hi = hi.min(cfg.n_max);
    (lo <= hi).then_some((lo, hi))
}

fn theorem_records(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let budget = cfg.max_solver_vertices;
    let mut records = Vec::new();
    if let Some((lo, hi)) = clamp(cfg, 3, 12) {
        records.extend(checks::vertex_counts(lo, hi));
    }
    if let Some((lo, hi)) = clamp(cfg, 3, 10) {
        records.extend(checks::coordinate_bijection(lo, hi));
    }
    if let Some((lo, hi)) = clamp(cfg, 3, 8) {
        records.extend(checks::searched_isomorphism(lo, hi));
    }
    if let Some((lo, hi)) = clamp(cfg, 4, 9) {
        records.extend(checks::distance_formula(lo, hi));
    }
    if let Some((lo, hi)) = clamp(cfg, 4, 10) {
        records.extend(checks::diameter_formula(lo, hi));
    }
    if let Some((lo, hi)) = clamp(cfg, 3, 10) {
        records.extend(checks::triangle_free_and_clique(lo, hi, budget));
        records.extend(checks::chromatic(lo, hi, budget));
    }
    if let Some((lo, hi)) = clamp(cfg, 4, 10) {
        records.extend(checks::independence(lo, hi, 7.min(hi), budget));
    }
    if let Some((lo, hi)) = clamp(cfg, 3, 9) {
        records.extend(checks::automorphisms(lo, hi, budget));
    }
    records.extend(checks::pair_decompositions(cfg.n_max));
    records.extend(checks::random_pair_decompositions(
        cfg.seed,
        50,
        5.min(cfg.n_max),
    ));
    records.extend(checks::two_token_unions(cfg.n_max));
    records.extend(checks::triple_decompositions(cfg.n_max));
    records.extend(checks::component_counts(cfg.n_max));
    records.extend(checks::oracle_equivalence(
        cfg.seed.wrapping_add(1),
        200,
        12.min(cfg.n_max),
    ));
    records.extend(checks::graph6_roundtrip(
        cfg.seed.wrapping_add(2),
        100,
        20.min(cfg.n_max * 2),
    ));
    records
}

/// Runs the configured profile and assembles the report.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut records = match cfg.suite {
        SuiteKind::Theorems => theorem_records(cfg),
        SuiteKind::Conjecture => {
            let lo = cfg.n_min.max(4);
            if lo <= cfg.n_max {
                conjecture::conjecture_report(lo, cfg.n_max)?.to_records()
            } else {
                Vec::new()
            }
        }
    };
    if cfg.self_test_corrupt {
        records.extend(checks::corrupted_self_test());
    }
    Ok(VerificationReport::new(
        cfg.suite.as_str(),
        cfg.n_min,
        cfg.n_max,
        cfg.seed,
        records,
    ))
}
