//! Shared helpers for the integration suites: a second, independent matrix
//! exponential (Taylor with scaling and squaring, never used by the
//! library itself), a cached small-graph census, and a tiny deterministic
//! RNG so "random" probes stay reproducible.
//!
//! Compiled once per test binary; not every binary uses every helper.
#![allow(dead_code)]

use std::sync::OnceLock;

use num::complex::Complex64;
use pstlab_core::graph::Graph;
use pstlab_core::{census, Tolerances};

pub fn tolerances() -> Tolerances {
    Tolerances::default()
}

/// Census of all connected graphs on 1..=6 vertices, built once per test
/// binary.
pub fn census_up_to_6() -> &'static [Graph] {
    static CENSUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CENSUS.get_or_init(|| census::connected_census_up_to(6))
}

/// Dense complex matrix just big enough for the oracle.
#[derive(Clone)]
pub struct CMat {
    pub n: usize,
    pub a: Vec<Complex64>,
}

impl CMat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            a[i * n + i] = Complex64::new(1.0, 0.0);
        }
        CMat { n, a }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * rhs.a[k * n + j];
                }
            }
        }
        CMat { n, a: out }
    }

    fn add_assign(&mut self, rhs: &CMat) {
        for (x, y) in self.a.iter_mut().zip(&rhs.a) {
            *x += y;
        }
    }

    fn scale(&self, s: f64) -> CMat {
        CMat { n: self.n, a: self.a.iter().map(|x| x * s).collect() }
    }

    fn one_norm(&self) -> f64 {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|i| self.a[i * n + j].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// `exp(itA)` by Taylor series with scaling and squaring, the independent
/// oracle the spectral-sum walk is checked against.
pub fn series_exponential(g: &Graph, t: f64) -> CMat {
    let n = g.vertex_count();
    let mut m = CMat {
        n,
        a: vec![Complex64::new(0.0, 0.0); n * n],
    };
    for u in 0..n {
        for v in g.neighbors(u) {
            m.a[u * n + v] = Complex64::new(0.0, t);
        }
    }
    let norm = m.one_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale(0.5f64.powi(squarings as i32));

    let mut sum = CMat::identity(n);
    let mut term = CMat::identity(n);
    for k in 1..200 {
        term = term.mul(&scaled).scale(1.0 / k as f64);
        sum.add_assign(&term);
        if term.one_norm() < 1e-20 {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// xorshift64*, plenty for reproducible probe times.
pub struct TinyRng(u64);

impl TinyRng {
    pub fn new(seed: u64) -> Self {
        TinyRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in [0, hi).
    pub fn uniform(&mut self, hi: f64) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64 * hi
    }
}
