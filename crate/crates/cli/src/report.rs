//! Check records and the verification report produced by the suite runner.
//!
//! A [`CheckRecord`] captures one verified statement instance: what was
//! checked, on which parameters, the expected and computed values, where the
//! expected value comes from, a verdict and the wall-clock cost. A
//! [`VerificationReport`] bundles the records of one suite run together with
//! an overall verdict.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectedSource {
    /// A closed-form expression evaluated at the instance parameters.
    ClosedForm,
    /// An explicit constructed witness (mapping, coloring, matching, ...)
    /// validated on the spot.
    Construction,
    /// An independent exhaustive-enumeration oracle.
    Oracle,
    /// A fixed literal value.
    Fixed,
}

/// One verified statement instance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    /// Tag of the statement being checked, e.g. `"staircase-diameter"`.
    pub theorem: String,
    /// Instance parameters, e.g. `"n=7"`.
    pub instance: String,
    /// The expected value, rendered as text.
    pub expected: String,
    /// The computed value, rendered as text.
    pub computed: String,
    /// Provenance of the expected value.
    pub expected_source: ExpectedSource,
    /// Whether expected and computed agree.
    pub verdict: bool,
    /// Wall-clock cost of the check in milliseconds.
    pub runtime_ms: u64,
}

impl CheckRecord {
    /// Builds a record whose verdict is the equality of the two rendered
    /// values, timing it from `start`.
    pub fn compare<E: fmt::Display, C: fmt::Display>(
        theorem: &str,
        instance: String,
        expected: E,
        computed: C,
        source: ExpectedSource,
        start: Instant,
    ) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        CheckRecord {
            theorem: theorem.to_string(),
            instance,
            verdict: expected == computed,
            expected,
            computed,
            expected_source: source,
            runtime_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Builds a record with an explicit verdict, for checks where the
    /// computed text carries diagnostics rather than a mirror of the
    /// expectation.
    pub fn judged(
        theorem: &str,
        instance: String,
        expected: String,
        computed: String,
        source: ExpectedSource,
        verdict: bool,
        start: Instant,
    ) -> Self {
        CheckRecord {
            theorem: theorem.to_string(),
            instance,
            expected,
            computed,
            expected_source: source,
            verdict,
            runtime_ms: start.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: expected {}, got {} ({} ms)",
            if self.verdict { "PASS" } else { "FAIL" },
            self.theorem,
            self.instance,
            self.expected,
            self.computed,
            self.runtime_ms
        )
    }
}

/// The outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// Version of the artifact that produced the report.
    pub artifact_version: String,
    /// Suite identifier (`"theorems"` or `"conjecture"`).
    pub suite: String,
    /// Smallest family parameter covered.
    pub n_min: usize,
    /// Largest family parameter covered.
    pub n_max: usize,
    /// Seed used for randomized instances.
    pub seed: u64,
    /// Every check performed, in a fixed order.
    pub records: Vec<CheckRecord>,
    /// Number of records with a true verdict.
    pub passed: usize,
    /// Number of records with a false verdict.
    pub failed: usize,
    /// True iff every record passed.
    pub verdict: bool,
}

impl VerificationReport {
    /// Assembles a report from finished records.
    pub fn new(
        suite: &str,
        n_min: usize,
        n_max: usize,
        seed: u64,
        records: Vec<CheckRecord>,
    ) -> Self {
        let passed = records.iter().filter(|r| r.verdict).count();
        let failed = records.len() - passed;
        VerificationReport {
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            n_min,
            n_max,
            seed,
            records,
            passed,
            failed,
            verdict: failed == 0,
        }
    }

    /// Pretty JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// A copy with every runtime zeroed. Two runs of the same configuration
    /// produce byte-identical normalized JSON.
    pub fn normalized(&self) -> VerificationReport {
        let mut copy = self.clone();
        for r in &mut copy.records {
            r.runtime_ms = 0;
        }
        copy
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(theorem: &str, verdict: bool) -> CheckRecord {
        CheckRecord::judged(
            theorem,
            "n=4".to_string(),
            "x".to_string(),
            if verdict { "x" } else { "y" }.to_string(),
            ExpectedSource::Fixed,
            verdict,
            Instant::now(),
        )
    }

    #[test]
    fn verdict_is_conjunction_of_records() {
        let good = VerificationReport::new("theorems", 3, 9, 42, vec![record("a", true)]);
        assert!(good.verdict);
        assert_eq!((good.passed, good.failed), (1, 0));

        let bad = VerificationReport::new(
            "theorems",
            3,
            9,
            42,
            vec![record("a", true), record("b", false)],
        );
        assert!(!bad.verdict);
        assert_eq!((bad.passed, bad.failed), (1, 1));
    }

    #[test]
    fn compare_builds_verdict_from_equality() {
        let t = Instant::now();
        let ok = CheckRecord::compare("t", "n=1".into(), 7, 7, ExpectedSource::ClosedForm, t);
        assert!(ok.verdict);
        let bad = CheckRecord::compare("t", "n=1".into(), 7, 8, ExpectedSource::ClosedForm, t);
        assert!(!bad.verdict);
        assert_eq!(bad.expected, "7");
        assert_eq!(bad.computed, "8");
    }

    #[test]
    fn sources_serialize_in_kebab_case() {
        let json = serde_json::to_string(&[
            ExpectedSource::ClosedForm,
            ExpectedSource::Construction,
            ExpectedSource::Oracle,
            ExpectedSource::Fixed,
        ])
        .unwrap();
        assert_eq!(json, r#"["closed-form","construction","oracle","fixed"]"#);
    }

    #[test]
    fn normalized_reports_are_stable() {
        let mut rec = record("a", true);
        rec.runtime_ms = 31;
        let report = VerificationReport::new("theorems", 3, 9, 42, vec![rec]);
        let normal = report.normalized();
        assert_eq!(normal.records[0].runtime_ms, 0);
        assert!(report.to_json().contains("\"runtime_ms\": 31"));
        assert!(normal.to_json().contains("\"runtime_ms\": 0"));
    }
}
