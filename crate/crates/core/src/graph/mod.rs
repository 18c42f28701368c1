//! Finite simple graphs: representation, parsing, BFS metrics, exact walk
//! counts, and the named families the test-bench keeps reaching for.

mod distance;
mod edgelist;
pub mod families;
mod graph6;
mod walks;

pub use distance::{DistanceInfo, INFINITE_DISTANCE};
pub use edgelist::parse_edge_list;
pub use graph6::{encode_graph6, parse_graph6};
pub use walks::{walk_count, walk_counts_from};

use crate::{Error, Result};

/// A simple undirected graph: symmetric 0/1 adjacency with zero diagonal.
/// Vertices are `0..n` in parse order; `labels` keeps the external names
/// when the input had any (edge lists), so reports can echo them back.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Empty graph (no edges) on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("graph must have at least one vertex"));
        }
        Ok(Graph { n, adj: vec![false; n * n], labels: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::precondition(format!("self-loop at vertex {u}")));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter(|(_, &e)| e).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// The external name of a vertex: its label if the input had one,
    /// otherwise the index itself.
    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(ls) => ls[u].clone(),
            None => u.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|u| self.label(u)).collect()
    }

    /// Resolve a user-supplied vertex name: label match first, then a bare
    /// index.
    pub fn resolve_vertex(&self, name: &str) -> Option<usize> {
        if let Some(ls) = &self.labels {
            if let Some(i) = ls.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.n => Some(i),
            _ => None,
        }
    }

    /// Common degree if the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start` (including it), sorted.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(v, _)| v)
            .collect()
    }

    /// Induced subgraph on `vertices` (which must be sorted and distinct);
    /// vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let m = vertices.len();
        let mut g = Graph { n: m, adj: vec![false; m * m], labels: None };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i * m + j] = true;
                }
            }
        }
        if self.labels.is_some() {
            g.labels = Some(vertices.iter().map(|&u| self.label(u)).collect());
        }
        g
    }

    /// Graph with vertex `v` deleted; remaining vertices keep their relative
    /// order. Returns the deleted-to-new index map alongside.
    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Adjacency as a floating matrix.
    pub fn adjacency_f64(&self) -> crate::linalg::Mat {
        let mut m = crate::linalg::Mat::zeros(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    m.set(u, v, 1.0);
                }
            }
        }
        m
    }

    /// Upper-triangle edge bitmask in colex order ((0,1),(0,2),(1,2),...),
    /// the canonical-form currency of the census module.
    pub fn edge_bitmask(&self) -> u64 {
        debug_assert!(self.n <= 11, "bitmask form only used for small graphs");
        let mut mask = 0u64;
        let mut bit = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn from_edge_bitmask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    g.adj[u * n + v] = true;
                    g.adj[v * n + u] = true;
                }
                bit += 1;
            }
        }
        g
    }

    pub fn distances(&self) -> DistanceInfo {
        DistanceInfo::new(self)
    }
}
