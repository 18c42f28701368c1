//! Plain-text edge lists: whitespace/line separated pairs of vertex names.
//! Vertices are numbered by first appearance; duplicate edges collapse.

use std::collections::HashMap;

use super::Graph;
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::EdgeList("no tokens in input".into()));
    }
    if !tokens.len().is_multiple_of(2) {
        return Err(Error::EdgeList(format!(
            "odd token count {}: vertices must come in pairs",
            tokens.len()
        )));
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for pair in tokens.chunks(2) {
        let u = *index.entry(pair[0]).or_insert_with(|| {
            labels.push(pair[0].to_string());
            labels.len() - 1
        });
        let v = *index.entry(pair[1]).or_insert_with(|| {
            labels.push(pair[1].to_string());
            labels.len() - 1
        });
        if u == v {
            return Err(Error::EdgeList(format!("self-loop at vertex '{}'", pair[0])));
        }
        edges.push((u, v));
    }

    let mut g = Graph::empty(labels.len())?;
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    g.set_labels(labels);
    Ok(g)
}
