//! The `tokengraph` command-line tool.
//!
//! Subcommands: `gen token`, `gen staircase`, `invariants`, `verify`,
//! `export-figures`. Exit codes: 0 on success, 1 when a verification check
//! fails, 2 on usage errors, 3 on resource exhaustion.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tokengraph::invariants::full_report;
use tokengraph::{emit_dot, emit_graph6, staircase_graph, token_graph, Graph};
use tokengraph_cli::specs::parse_graph_argument;
use tokengraph_cli::suite::{run_suite, SuiteConfig, SuiteKind};
use tokengraph_cli::{conjecture, figures};

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tokengraph",
    version,
    about = "Exact token graphs, staircase graphs, invariants and their verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and print it as graph6 (or DOT).
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Print the exact invariant report of a graph as JSON.
    Invariants {
        /// graph6 string, family spec (path:N, cycle:N, complete:N,
        /// union:SPEC+SPEC), or path to a graph6 file.
        #[arg(long = "in", value_name = "GRAPH")]
        input: String,
    },
    /// Run the verification suite, one line per check.
    Verify {
        /// Profile: 'theorems' or 'conjecture'.
        #[arg(long, default_value = "theorems")]
        suite: String,
        /// Smallest family parameter.
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        /// Largest family parameter.
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// Seed for the randomized instance streams.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the full JSON report to this path as well.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Deliberately corrupt one check to prove failures surface.
        #[arg(long, hide = true)]
        self_test_corrupt: bool,
    },
    /// Write the showcase graphs as DOT and graph6 files.
    ExportFigures {
        /// Output directory, created if missing.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The k-token graph of a base graph.
    Token {
        /// Base graph (same formats as `invariants --in`).
        #[arg(long, value_name = "GRAPH")]
        graph: String,
        /// Number of tokens.
        #[arg(long)]
        k: usize,
        /// Emit DOT with token labels instead of graph6.
        #[arg(long)]
        dot: bool,
    },
    /// The cubical staircase graph on C(n,3) vertices.
    Staircase {
        /// Family parameter, at least 3.
        #[arg(long)]
        n: usize,
        /// Emit DOT with coordinate labels instead of graph6.
        #[arg(long)]
        dot: bool,
    },
}

/// A failure with the exit code it maps to.
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<tokengraph::Error> for Failure {
    fn from(e: tokengraph::Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Resource(e.to_string())
    }
}

/// stdout with graceful handling of a consumer that stops reading: once the
/// pipe breaks, further output is dropped and the command finishes with its
/// normal exit semantics.
struct Stdout {
    gone: bool,
}

impl Stdout {
    fn new() -> Self {
        Stdout { gone: false }
    }

    fn text(&mut self, text: impl fmt::Display) -> Result<(), Failure> {
        if self.gone {
            return Ok(());
        }
        match write!(io::stdout().lock(), "{text}") {
            Ok(()) => Ok(()),
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                self.gone = true;
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    }

    fn line(&mut self, text: impl fmt::Display) -> Result<(), Failure> {
        self.text(format_args!("{text}\n"))
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Gen { family } => gen(family),
        Command::Invariants { input } => invariants(&input),
        Command::Verify {
            suite,
            n_min,
            n_max,
            seed,
            json,
            self_test_corrupt,
        } => verify(&suite, n_min, n_max, seed, json, self_test_corrupt),
        Command::ExportFigures { out } => export_figures(&out),
    }
}

fn print_graph(out: &mut Stdout, graph: &Graph, dot: bool) -> Result<(), Failure> {
    if dot {
        out.text(emit_dot(graph))
    } else {
        out.line(emit_graph6(graph))
    }
}

fn gen(family: GenCommand) -> Result<ExitCode, Failure> {
    let mut out = Stdout::new();
    match family {
        GenCommand::Token { graph, k, dot } => {
            let base = parse_graph_argument(&graph).map_err(Failure::Usage)?;
            let tg = token_graph(&base, k)?;
            let labels = tg.tokens().iter().map(ToString::to_string).collect();
            let labeled = tg.graph().clone().with_labels(labels)?;
            eprintln!(
                "{k}-token graph of a base graph on {} vertices: {} vertices, {} edges",
                base.vertex_count(),
                labeled.vertex_count(),
                labeled.edge_count()
            );
            print_graph(&mut out, &labeled, dot)?;
        }
        GenCommand::Staircase { n, dot } => {
            let sg = staircase_graph(n)?;
            let labels = sg.coords().iter().map(ToString::to_string).collect();
            let labeled = sg.graph().clone().with_labels(labels)?;
            eprintln!(
                "staircase graph n={n}: {} vertices, {} edges",
                labeled.vertex_count(),
                labeled.edge_count()
            );
            print_graph(&mut out, &labeled, dot)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn invariants(input: &str) -> Result<ExitCode, Failure> {
    let graph = parse_graph_argument(input).map_err(Failure::Usage)?;
    let report = full_report(&graph)?;
    Stdout::new().line(serde_json::to_string_pretty(&report).expect("report serializes"))?;
    Ok(ExitCode::SUCCESS)
}

fn verify(
    suite: &str,
    n_min: usize,
    n_max: usize,
    seed: u64,
    json: Option<PathBuf>,
    self_test_corrupt: bool,
) -> Result<ExitCode, Failure> {
    let suite: SuiteKind = suite.parse().map_err(Failure::Usage)?;
    let cfg = SuiteConfig {
        suite,
        n_min,
        n_max,
        seed,
        self_test_corrupt,
        ..SuiteConfig::default()
    };
    let mut out = Stdout::new();
    if suite == SuiteKind::Conjecture {
        let lo = n_min.max(4);
        if lo <= n_max {
            out.text(conjecture::conjecture_report(lo, n_max)?)?;
        }
    }
    let report = run_suite(&cfg)?;
    for record in &report.records {
        out.line(record)?;
    }
    out.line(format_args!(
        "suite '{}': {} checks, {} passed, {} failed -> {}",
        report.suite,
        report.records.len(),
        report.passed,
        report.failed,
        if report.verdict { "PASS" } else { "FAIL" }
    ))?;
    if let Some(path) = json {
        fs::write(&path, report.to_json() + "\n")?;
        eprintln!("wrote {}", path.display());
    }
    Ok(if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILURE)
    })
}

fn export_figures(dir: &std::path::Path) -> Result<ExitCode, Failure> {
    let files = figures::export_figures(dir)?;
    let mut out = Stdout::new();
    for f in &files {
        out.line(f.display())?;
    }
    eprintln!("wrote {} files under {}", files.len(), dir.display());
    Ok(ExitCode::SUCCESS)
}
