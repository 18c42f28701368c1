//! Exact characteristic polynomial of the adjacency matrix via the
//! Faddeev–LeVerrier recurrence. All intermediates stay integral: the
//! trace division by `k` is exact for integer matrices and is asserted.

use num::{BigInt, Zero};

use crate::graph::Graph;

/// Dense integer matrix, just enough for the exact spectral routines.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IntMat {
    pub n: usize,
    pub a: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat { n, a: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = BigInt::from(1);
        }
        m
    }

    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut m = IntMat::zeros(n);
        for u in 0..n {
            for v in g.neighbors(u) {
                m.a[u * n + v] = BigInt::from(1);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let r = rhs.get(k, j);
                    if !r.is_zero() {
                        out.a[i * n + j] += aik * r;
                    }
                }
            }
        }
        out
    }

    pub fn add_diag(&mut self, c: &BigInt) {
        let n = self.n;
        for i in 0..n {
            self.a[i * n + i] += c;
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Monic characteristic polynomial `det(xI - A)`, coefficients ascending.
pub fn char_poly(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let a = IntMat::from_graph(g);
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut m = IntMat::zeros(n);
    for k in 1..=n {
        m = a.mul(&m);
        let ck = c[n - k + 1].clone();
        m.add_diag(&ck);
        let t = a.mul(&m).trace();
        let kk = BigInt::from(k as u64);
        let (q, r) = num::Integer::div_rem(&t, &kk);
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
        c[n - k] = -q;
    }
    c
}
