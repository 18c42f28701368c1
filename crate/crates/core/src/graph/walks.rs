//! Exact walk counts `(A^k)_{u,v}` in unbounded integer arithmetic.

use num::{BigUint, Zero};

use super::Graph;

/// The whole row `(A^k)_{u, .}` as big integers, by repeated
/// matrix-vector products from the characteristic vector of `u`.
pub fn walk_counts_from(g: &Graph, k: usize, u: usize) -> Vec<BigUint> {
    let n = g.vertex_count();
    let mut x = vec![BigUint::zero(); n];
    x[u] = BigUint::from(1u32);
    for _ in 0..k {
        let mut y = vec![BigUint::zero(); n];
        for (w, yw) in y.iter_mut().enumerate() {
            for z in g.neighbors(w) {
                *yw += &x[z];
            }
        }
        x = y;
    }
    x
}

/// Exact number of walks of length `k` from `u` to `v`.
pub fn walk_count(g: &Graph, k: usize, u: usize, v: usize) -> BigUint {
    walk_counts_from(g, k, u).swap_remove(v)
}
