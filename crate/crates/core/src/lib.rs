//! Spectral analysis of continuous-time quantum walks on finite simple graphs.
//!
//! The adjacency matrix `A` of a graph drives the unitary family
//! `U(t) = exp(itA)`. This crate decides, for a given graph, which vertex
//! pairs are strongly cospectral, spectrally extremal, or antipodal, and
//! whether perfect state transfer (`|e_v^T U(tau) e_u| = 1`) occurs, using
//! number-theoretic criteria on the eigenvalues, each cross-checked against
//! a spectral-sum simulation of the walk itself.
//!
//! The decompositions are exact whenever they can be: integer eigenvalues
//! are certified as roots of the exact characteristic polynomial and their
//! projectors are computed over the rationals; eigenvalues in a single
//! quadratic field `(a + b_r*sqrt(delta))/2` are certified by exact
//! polynomial division; everything else falls back to floating point with
//! recorded tolerances.
//!
//! Module map:
//! - [`graph`]: graph representation, graph6 / edge-list parsing, BFS metrics,
//!   exact walk counts.
//! - [`spectral`]: characteristic polynomial, Jacobi eigensolver, certified
//!   spectral decomposition `A = sum theta_r E_r`.
//! - [`cospectral`]: eigenvalue supports, dual degrees, (strong)
//!   cospectrality, transfer polynomials.
//! - [`partition`]: distance partitions, (pseudo-)equitable checks,
//!   antipodal pairs, distance-regularity.
//! - [`pst`]: perfect-state-transfer decision procedures and certificates,
//!   whole-graph classification.
//! - [`walk`]: the continuous-time quantum walk simulator used as the
//!   numerical oracle for every transfer claim.
//! - [`census`]: exhaustive generation of small connected graphs up to
//!   isomorphism, for scans and property checks.
//!
//! With the default `parallel` feature, batch classification and fidelity
//! grids fan out over rayon; disabling the feature selects the sequential
//! fallback with identical results.

// Indexed loops are the clearest way to write the dense kernels here.
#![allow(clippy::needless_range_loop)]

pub mod census;
pub mod cospectral;
mod error;
mod exec;
pub mod graph;
pub mod linalg;
pub mod partition;
pub mod pst;
pub mod spectral;
mod tolerances;
pub mod walk;

pub use error::{Error, Result};
pub use tolerances::Tolerances;

/// Round to 15 significant digits, the precision used for every decimal
/// the crate emits (reports, CSV exports).
pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap()
}

/// Format with 15 significant digits in plain decimal notation.
pub fn fmt_sig15(x: f64) -> String {
    format!("{}", round_sig15(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig15_rounds_and_formats() {
        assert_eq!(fmt_sig15(0.0), "0");
        assert_eq!(fmt_sig15(1.0), "1");
        assert_eq!(fmt_sig15(std::f64::consts::FRAC_1_SQRT_2), "0.707106781186548");
        assert_eq!(round_sig15(1.0 + 1e-16), 1.0);
    }
}
