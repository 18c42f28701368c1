//! Input plumbing: read from a path or stdin, detect the graph format,
//! parse one graph.

use std::io::Read;
use std::path::Path;

use pstlab_core::graph::{parse_edge_list, parse_graph6, Graph};

use crate::fail;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    G6,
    Edges,
    Auto,
}

pub fn read_input(source: &str) -> Result<String, (i32, String)> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(2, format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(Path::new(source))
            .map_err(|e| fail(2, format!("cannot read '{source}': {e}")))
    }
}

/// Any line with two or more whitespace-separated tokens is an edge list;
/// otherwise a single printable token is graph6.
pub fn detect(text: &str) -> Format {
    if text.lines().any(|l| l.split_whitespace().count() >= 2) {
        Format::Edges
    } else {
        Format::G6
    }
}

pub fn parse_one(text: &str, format: Format) -> Result<(Graph, &'static str), (i32, String)> {
    let format = if format == Format::Auto { detect(text) } else { format };
    match format {
        Format::Edges | Format::Auto => parse_edge_list(text)
            .map(|g| (g, "edges"))
            .map_err(|e| fail(2, e.to_string())),
        Format::G6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let Some(first) = lines.next() else {
                return Err(fail(2, "empty input".into()));
            };
            if lines.next().is_some() {
                return Err(fail(
                    2,
                    "multiple graph6 lines in input; use the scan command for files".into(),
                ));
            }
            parse_graph6(first)
                .map(|g| (g, "graph6"))
                .map_err(|e| fail(2, e.to_string()))
        }
    }
}
