//! Exports the showcase graphs as DOT and graph6 files.
//!
//! Seven graphs are written: the 3-token graphs of the two drawn unions
//! (two paths; a cycle plus a path) and the staircase graphs for
//! `n = 4..=8`. DOT nodes carry 1-based token labels or staircase
//! coordinates; graph6 carries the bare structure.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use tokengraph::{
    cycle_graph, disjoint_union, emit_dot, emit_graph6, path_graph, staircase_graph, token_graph,
    Graph,
};

fn labeled(graph: &Graph, labels: Vec<String>) -> Graph {
    graph
        .clone()
        .with_labels(labels)
        .expect("one label per vertex")
}

fn write_pair(dir: &Path, stem: &str, graph: &Graph, written: &mut Vec<PathBuf>) -> io::Result<()> {
    let dot = dir.join(format!("{stem}.dot"));
    fs::write(&dot, emit_dot(graph))?;
    written.push(dot);
    let g6 = dir.join(format!("{stem}.g6"));
    fs::write(&g6, format!("{}\n", emit_graph6(graph)))?;
    written.push(g6);
    Ok(())
}

/// The showcase graphs, with display labels attached.
pub fn figure_graphs() -> Vec<(String, Graph)> {
    let mut figures = Vec::new();

    let two_paths = disjoint_union(&path_graph(4).expect("static"), &path_graph(4).expect("static"));
    let tg = token_graph(&two_paths, 3).expect("k=3");
    let labels = tg.tokens().iter().map(ToString::to_string).collect();
    figures.push(("two-paths-token-graph".to_string(), labeled(tg.graph(), labels)));

    // Cycle first, so the full-cycle token {1,2,3} is the isolated vertex.
    let cycle_path = disjoint_union(&cycle_graph(3).expect("static"), &path_graph(4).expect("static"));
    let tg = token_graph(&cycle_path, 3).expect("k=3");
    let labels = tg.tokens().iter().map(ToString::to_string).collect();
    figures.push(("cycle-path-token-graph".to_string(), labeled(tg.graph(), labels)));

    for n in 4..=8 {
        let sg = staircase_graph(n).expect("n >= 3");
        let labels = sg.coords().iter().map(ToString::to_string).collect();
        figures.push((format!("staircase-{n}"), labeled(sg.graph(), labels)));
    }
    figures
}

/// Writes every showcase graph under `dir` and returns the file paths in
/// write order. The directory is created if missing.
pub fn export_figures(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (stem, graph) in figure_graphs() {
        write_pair(dir, &stem, &graph, &mut written)?;
    }
    Ok(written)
}
