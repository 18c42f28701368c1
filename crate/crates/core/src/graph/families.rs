//! Named graphs used throughout the tests and benchmarks.

use super::Graph;

/// Path on `n >= 1` vertices, edges `i -- i+1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete graph.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Star `K_{1,k}` with the center first.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// `d`-dimensional hypercube: vertices are bitstrings, edges flip one bit.
pub fn hypercube(d: usize) -> Graph {
    let n = 1 << d;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Petersen graph as the Kneser graph K(5,2): vertices are 2-subsets of
/// {0..4}, adjacent when disjoint.
pub fn petersen() -> Graph {
    let mut subsets = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            subsets.push((1u8 << a) | (1 << b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..10 {
        for j in i + 1..10 {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Triangle with a pendant vertex: 0 is the pendant, 1 its attachment.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Triangular prism `K3 x K2`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}
