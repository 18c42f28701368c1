//! The continuous-time quantum walk `U(t) = exp(itA)`, evaluated through
//! the certified spectral sum `U(t) e_u = sum_r e^{i t theta_r} E_r e_u`.
//! This is the production evaluation path and the numerical oracle behind
//! every transfer verdict; a series matrix exponential cross-checks it in
//! the test suite only.

use num::complex::Complex64;

use crate::linalg::Mat;
use crate::spectral::Decomposition;
use crate::{exec, Error, Result};

/// Complex amplitudes of the walk at one time.
#[derive(Debug, Clone)]
pub struct Amplitudes {
    pub t: f64,
    pub amp: Vec<Complex64>,
}

impl Amplitudes {
    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Sampled fidelities `|e_v^T U(t) e_u|` on a uniform grid.
#[derive(Debug, Clone)]
pub struct FidelitySeries {
    pub u: usize,
    pub v: usize,
    pub samples: Vec<(f64, f64)>,
}

impl FidelitySeries {
    /// CSV export: `t,fidelity` header, 15-significant-digit decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,fidelity\n");
        for &(t, f) in &self.samples {
            out.push_str(&crate::fmt_sig15(t));
            out.push(',');
            out.push_str(&crate::fmt_sig15(f));
            out.push('\n');
        }
        out
    }
}

/// Outcome of a transfer search: the earliest grid-refined time reaching
/// the target fidelity, if any, plus the best value seen anywhere.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub hit: Option<(f64, f64)>,
    pub best_t: f64,
    pub best_fidelity: f64,
}

/// Walk evaluator with the decomposition flattened to floats once.
#[derive(Debug, Clone)]
pub struct QuantumWalk {
    n: usize,
    thetas: Vec<f64>,
    projectors: Vec<Mat>,
}

impl QuantumWalk {
    pub fn new(dec: &Decomposition) -> Self {
        let projectors = match dec.projectors.exact() {
            Some(mats) => mats.iter().map(|m| m.to_f64()).collect(),
            None => match &dec.projectors.mats {
                crate::spectral::ProjectorMatrices::Floating(mats) => mats.clone(),
                crate::spectral::ProjectorMatrices::Exact(_) => unreachable!(),
            },
        };
        QuantumWalk { n: dec.n, thetas: dec.spectrum.values.clone(), projectors }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `U(t) e_u` as a full amplitude vector.
    pub fn evolve(&self, u: usize, t: f64) -> Amplitudes {
        let mut amp = vec![Complex64::new(0.0, 0.0); self.n];
        for (r, e) in self.projectors.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, t * self.thetas[r]);
            for (i, a) in amp.iter_mut().enumerate() {
                *a += phase * e.get(i, u);
            }
        }
        Amplitudes { t, amp }
    }

    /// `U(t)` applied to an arbitrary state vector.
    pub fn evolve_state(&self, state: &[Complex64], t: f64) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for (r, e) in self.projectors.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, t * self.thetas[r]);
            // E_r state, then the eigenphase.
            for i in 0..self.n {
                let mut proj = Complex64::new(0.0, 0.0);
                for (j, s) in state.iter().enumerate() {
                    proj += e.get(i, j) * s;
                }
                out[i] += phase * proj;
            }
        }
        out
    }

    /// The scalars `(E_r)_{v,u}` that make one pair's fidelity a sum of
    /// `d+1` phases; the hot path of every transfer search.
    fn pair_weights(&self, u: usize, v: usize) -> Vec<f64> {
        self.projectors.iter().map(|e| e.get(v, u)).collect()
    }

    fn fidelity_from_weights(&self, weights: &[f64], t: f64) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (w, &theta) in weights.iter().zip(&self.thetas) {
            acc += Complex64::from_polar(*w, t * theta);
        }
        acc.norm()
    }

    /// `|e_v^T U(t) e_u|`.
    pub fn fidelity(&self, u: usize, v: usize, t: f64) -> f64 {
        self.fidelity_from_weights(&self.pair_weights(u, v), t)
    }

    /// Uniform fidelity grid on `[0, t_max]` with `steps >= 2` samples,
    /// fanned out over the sample points.
    pub fn fidelity_series(
        &self,
        u: usize,
        v: usize,
        t_max: f64,
        steps: usize,
    ) -> Result<FidelitySeries> {
        self.series_impl(u, v, t_max, steps, true)
    }

    /// Sequential reference path for [`Self::fidelity_series`]; identical
    /// results, kept callable for the benchmark comparison.
    pub fn fidelity_series_seq(
        &self,
        u: usize,
        v: usize,
        t_max: f64,
        steps: usize,
    ) -> Result<FidelitySeries> {
        self.series_impl(u, v, t_max, steps, false)
    }

    fn series_impl(
        &self,
        u: usize,
        v: usize,
        t_max: f64,
        steps: usize,
        parallel: bool,
    ) -> Result<FidelitySeries> {
        if steps < 2 {
            return Err(Error::BadGrid(steps));
        }
        let weights = self.pair_weights(u, v);
        let dt = t_max / (steps - 1) as f64;
        let eval = |i: usize| {
            let t = i as f64 * dt;
            (t, self.fidelity_from_weights(&weights, t))
        };
        let samples = if parallel {
            exec::map_range(steps, eval)
        } else {
            (0..steps).map(eval).collect()
        };
        Ok(FidelitySeries { u, v, samples })
    }

    /// Sample density that cannot step over a fidelity peak: a few samples
    /// per period of the fastest phase difference.
    pub fn default_search_steps(&self, t_max: f64) -> usize {
        let spread = match (self.thetas.first(), self.thetas.last()) {
            (Some(&hi), Some(&lo)) => hi - lo,
            _ => 0.0,
        };
        let rate = (4.0 * spread / std::f64::consts::PI).max(1.0);
        ((t_max * rate).ceil() as usize).max(64)
    }

    /// Coarse scan of `[0, t_max]` followed by golden-section refinement of
    /// every local maximum; returns the earliest refined time whose
    /// fidelity reaches `1 - eps`, or the global best found.
    pub fn pst_oracle_search(
        &self,
        u: usize,
        v: usize,
        t_max: f64,
        coarse_steps: usize,
        eps: f64,
    ) -> SearchOutcome {
        let weights = self.pair_weights(u, v);
        let steps = coarse_steps.max(2);
        let dt = t_max / (steps - 1) as f64;
        let coarse: Vec<f64> = exec::map_range(steps, |i| {
            self.fidelity_from_weights(&weights, i as f64 * dt)
        });

        let mut maxima = Vec::new();
        for i in 0..steps {
            let left_ok = i == 0 || coarse[i] >= coarse[i - 1];
            let right_ok = i + 1 == steps || coarse[i] >= coarse[i + 1];
            if left_ok && right_ok {
                maxima.push(i);
            }
        }

        let refined: Vec<(f64, f64)> = exec::map_slice(&maxima, |&i| {
            let a = if i == 0 { 0.0 } else { (i - 1) as f64 * dt };
            let b = if i + 1 == steps { t_max } else { (i + 1) as f64 * dt };
            self.golden_max(&weights, a, b)
        });

        let mut best_t = 0.0;
        let mut best_fidelity = f64::NEG_INFINITY;
        for (i, &f) in coarse.iter().enumerate() {
            if f > best_fidelity {
                best_fidelity = f;
                best_t = i as f64 * dt;
            }
        }
        let mut hit = None;
        for &(t, f) in &refined {
            if f > best_fidelity {
                best_fidelity = f;
                best_t = t;
            }
            if f >= 1.0 - eps && hit.is_none() {
                hit = Some((t, f));
            }
        }
        SearchOutcome { hit, best_t, best_fidelity }
    }

    /// Golden-section maximization of the pair fidelity on `[a, b]`.
    fn golden_max(&self, weights: &[f64], mut a: f64, mut b: f64) -> (f64, f64) {
        const INV_PHI: f64 = 0.618_033_988_749_894_9;
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let mut fc = self.fidelity_from_weights(weights, c);
        let mut fd = self.fidelity_from_weights(weights, d);
        while b - a > 1e-10 {
            if fc > fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = self.fidelity_from_weights(weights, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = self.fidelity_from_weights(weights, d);
            }
        }
        let t = 0.5 * (a + b);
        (t, self.fidelity_from_weights(weights, t))
    }
}
