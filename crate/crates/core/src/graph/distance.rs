//! BFS hop distances, eccentricities, diameter.

use std::collections::VecDeque;

use super::Graph;

/// Sentinel for unreachable pairs.
pub const INFINITE_DISTANCE: usize = usize::MAX;

/// All-pairs BFS data. Distances are exact hop counts with
/// [`INFINITE_DISTANCE`] for disconnected pairs.
#[derive(Debug, Clone)]
pub struct DistanceInfo {
    dist: Vec<usize>,
    n: usize,
    ecc: Vec<usize>,
    diameter: usize,
    connected: bool,
}

impl DistanceInfo {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut dist = vec![INFINITE_DISTANCE; n * n];
        for s in 0..n {
            dist[s * n + s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let du = dist[s * n + u];
                for v in g.neighbors(u) {
                    if dist[s * n + v] == INFINITE_DISTANCE {
                        dist[s * n + v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        let ecc: Vec<usize> = (0..n)
            .map(|u| (0..n).map(|v| dist[u * n + v]).max().unwrap())
            .collect();
        let connected = ecc.iter().all(|&e| e != INFINITE_DISTANCE);
        let diameter = ecc
            .iter()
            .copied()
            .filter(|&e| e != INFINITE_DISTANCE)
            .max()
            .unwrap_or(0);
        DistanceInfo { dist, n, ecc, diameter, connected }
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn eccentricity(&self, u: usize) -> usize {
        self.ecc[u]
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    /// Vertices at exactly distance `d` from `u`, ascending.
    pub fn sphere(&self, u: usize, d: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.distance(u, v) == d).collect()
    }
}
