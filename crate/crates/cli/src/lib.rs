//! Verification harness over the `tokengraph` library.
//!
//! The modules split along the trust boundary: [`oracle`] recomputes
//! invariants by brute force with no shared solver code, [`instances`]
//! derives deterministic random graphs from explicit seeds, [`checks`]
//! compares the two routes (and closed forms, and constructions) instance
//! by instance, and [`suite`] assembles profiles into a
//! [`report::VerificationReport`]. [`conjecture`] keeps the one
//! conjecture-grade statement clearly separated from the theorems, and
//! [`figures`] exports the showcase graphs.

pub mod checks;
pub mod conjecture;
pub mod figures;
pub mod instances;
pub mod oracle;
pub mod report;
pub mod specs;
pub mod suite;
