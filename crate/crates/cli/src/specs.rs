//! Parsing of graph arguments given on the command line.
//!
//! A graph argument is one of:
//! - a family spec: `path:<n>`, `cycle:<n>`, `complete:<n>`;
//! - a union of specs: `union:<spec>+<spec>` (any number of parts, since
//!   `+` cannot occur inside a part);
//! - a graph6 string;
//! - a path to a file whose first non-empty line is a graph6 string.

use std::fs;
use std::path::Path;

use tokengraph::{complete_graph, cycle_graph, disjoint_union, parse_graph6, path_graph, Graph};

/// Parses a command-line graph argument. Errors are usage messages.
pub fn parse_graph_argument(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    if input.is_empty() {
        return Err("empty graph argument".to_string());
    }
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input)
            .map_err(|e| format!("cannot read graph file '{input}': {e}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| format!("graph file '{input}' is empty"))?;
        return parse_graph6(line)
            .map_err(|e| format!("graph file '{input}' is not graph6: {e}"));
    }
    parse_spec(input)
}

fn parse_spec(spec: &str) -> Result<Graph, String> {
    if let Some(rest) = spec.strip_prefix("union:") {
        let parts: Vec<&str> = rest.split('+').collect();
        if parts.len() < 2 {
            return Err(format!(
                "union spec '{spec}' needs at least two '+'-separated parts"
            ));
        }
        let mut acc = Graph::empty(0);
        for part in parts {
            acc = disjoint_union(&acc, &parse_spec(part)?);
        }
        return Ok(acc);
    }
    for (prefix, build) in [
        ("path:", path_graph as fn(usize) -> tokengraph::Result<Graph>),
        ("cycle:", cycle_graph),
        ("complete:", complete_graph),
    ] {
        if let Some(rest) = spec.strip_prefix(prefix) {
            let n: usize = rest
                .parse()
                .map_err(|_| format!("'{rest}' in '{spec}' is not a vertex count"))?;
            return build(n).map_err(|e| e.to_string());
        }
    }
    parse_graph6(spec).map_err(|e| {
        format!(
            "'{spec}' is neither a family spec (path:N, cycle:N, complete:N, \
             union:SPEC+SPEC), a graph6 string ({e}), nor a readable file"
        )
    })
}
