//! End-to-end tests of the `tokengraph` binary: output formats, exit codes
//! and report determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tokengraph::invariants::connected_components;
use tokengraph::parse_graph6;

fn tokengraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tokengraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn gen_token_emits_graph6() {
    let out = tokengraph(&["gen", "token", "--graph", "path:5", "--k", "3"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let g = parse_graph6(stdout(&out).trim()).expect("stdout is graph6");
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(g.edge_count(), 12);
}

#[test]
fn gen_token_dot_carries_token_labels() {
    let out = tokengraph(&["gen", "token", "--graph", "union:cycle:3+path:4", "--k", "3", "--dot"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("graph {"));
    assert!(text.contains("{1,2,3}"), "1-based token labels:\n{text}");
}

#[test]
fn gen_staircase_matches_closed_forms() {
    let out = tokengraph(&["gen", "staircase", "--n", "6"]);
    assert_eq!(exit_code(&out), 0);
    let g = parse_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g.vertex_count(), 20);
    assert_eq!(g.edge_count(), 30);
    assert!(stderr(&out).contains("20 vertices, 30 edges"));
}

#[test]
fn gen_staircase_dot_carries_coordinates() {
    let out = tokengraph(&["gen", "staircase", "--n", "4", "--dot"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("(1,1,1)"), "{}", stdout(&out));
}

#[test]
fn invariants_reports_json_for_specs_and_graph6() {
    let out = tokengraph(&["invariants", "--in", "cycle:5"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["chi"], 3);
    assert_eq!(report["alpha"], 2);
    assert_eq!(report["components"], 1);

    // The same graph as graph6 text.
    let g6 = stdout(&tokengraph(&["gen", "token", "--graph", "path:2", "--k", "1"]));
    let out = tokengraph(&["invariants", "--in", g6.trim()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
}

#[test]
fn invariants_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.g6");
    let g6 = stdout(&tokengraph(&["gen", "staircase", "--n", "5"]));
    fs::write(&path, g6).unwrap();
    let out = tokengraph(&["invariants", "--in", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["alpha"], 6);
    assert_eq!(report["diameter"], 6);
}

#[test]
fn verify_small_range_passes() {
    let out = tokengraph(&["verify", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS vertex-count [n=4]"));
    assert!(text.contains("-> PASS"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn verify_conjecture_profile_prints_the_table() {
    let out = tokengraph(&["verify", "--suite", "conjecture", "--n-max", "6"]);
    assert_eq!(exit_code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("CONJECTURE check (not a theorem)"));
    assert!(text.contains("matching-conjecture"));
}

#[test]
fn verify_writes_deterministic_json_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = tokengraph(&[
            "verify",
            "--n-max",
            "5",
            "--seed",
            "7",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    let normalize = |path: &Path| {
        let mut v: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        for record in v["records"].as_array_mut().unwrap() {
            record["runtime_ms"] = 0.into();
        }
        serde_json::to_string_pretty(&v).unwrap()
    };
    assert_eq!(normalize(&a), normalize(&b));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    for key in [
        "artifact_version",
        "suite",
        "n_min",
        "n_max",
        "seed",
        "records",
        "passed",
        "failed",
        "verdict",
    ] {
        assert!(report.get(key).is_some(), "report key {key}");
    }
    let record = &report["records"][0];
    for key in [
        "theorem",
        "instance",
        "expected",
        "computed",
        "expected_source",
        "verdict",
        "runtime_ms",
    ] {
        assert!(record.get(key).is_some(), "record key {key}");
    }
}

#[test]
fn self_test_corruption_fails_with_exit_one() {
    let out = tokengraph(&["verify", "--n-max", "3", "--self-test-corrupt"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL self-test-corruption"));
    assert!(text.contains("-> FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown suite name.
    assert_eq!(exit_code(&tokengraph(&["verify", "--suite", "both"])), 2);
    // Range below the smallest staircase graph.
    assert_eq!(exit_code(&tokengraph(&["verify", "--n-max", "2"])), 2);
    // Malformed graph spec.
    assert_eq!(exit_code(&tokengraph(&["invariants", "--in", "path:zero"])), 2);
    // Token count out of range.
    assert_eq!(
        exit_code(&tokengraph(&["gen", "token", "--graph", "path:3", "--k", "5"])),
        2
    );
    // Unknown flag (clap-level usage error).
    assert_eq!(exit_code(&tokengraph(&["verify", "--frobnicate"])), 2);
    // Staircase graphs need n >= 3.
    assert_eq!(exit_code(&tokengraph(&["gen", "staircase", "--n", "2"])), 2);
}

#[test]
fn resource_errors_exit_three() {
    let out = tokengraph(&["verify", "--suite", "conjecture", "--n-max", "13"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn export_figures_writes_the_showcase() {
    let dir = tempfile::tempdir().unwrap();
    let out = tokengraph(&["export-figures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().count(), 14);
    let dot = fs::read_to_string(dir.path().join("staircase-8.dot")).unwrap();
    assert_eq!(dot.matches("label=").count(), 56);
    let g6 = fs::read_to_string(dir.path().join("two-paths-token-graph.g6")).unwrap();
    let g = parse_graph6(g6.trim()).unwrap();
    assert_eq!(connected_components(&g).len(), 4);
}

#[test]
fn help_exits_zero() {
    assert_eq!(exit_code(&tokengraph(&["--help"])), 0);
    assert_eq!(exit_code(&tokengraph(&["verify", "--help"])), 0);
}
