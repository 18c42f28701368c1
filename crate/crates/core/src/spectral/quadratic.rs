//! Recognition of spectra lying in one quadratic field: every eigenvalue of
//! the form `(a + b_r sqrt(delta)) / 2` with a single integer `a` and a
//! single square-free `delta`. Candidates are read off the floating cluster
//! centers and then certified exactly: the product of the implied minimal
//! polynomials must reproduce the characteristic polynomial coefficient by
//! coefficient.

use num::BigInt;

use crate::linalg::{poly_mul, poly_pow, IntPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticFit {
    pub delta: i64,
    pub a: i64,
    /// One `b_r` per eigenvalue, descending with the eigenvalues
    /// (`b_r = 0` marks the lone integer eigenvalue `a/2` when present).
    pub b: Vec<i64>,
}

fn squarefree_part(mut m: i64) -> i64 {
    debug_assert!(m > 0);
    let mut out = 1i64;
    let mut p = 2i64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out * m
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn near_integer(x: f64, tol: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < tol).then_some(r as i64)
}

/// Try to certify `centers` (descending, with multiplicities) as a
/// quadratic-field spectrum. `char_poly` is the exact characteristic
/// polynomial; `snap` the float-to-integer snapping distance.
pub fn fit_quadratic(
    centers: &[f64],
    mults: &[usize],
    char_poly: &[BigInt],
    snap: f64,
) -> Option<QuadraticFit> {
    let d = centers.len();
    // Only relevant when at least one center is non-integer.
    if centers.iter().all(|&c| near_integer(c, snap).is_some()) {
        return None;
    }

    // The fixed `a` is the sum of any conjugate pair; integer eigenvalues
    // force a = 2*theta. Collect every near-integer pairwise sum.
    let mut candidates: Vec<i64> = Vec::new();
    for i in 0..d {
        if let Some(t) = near_integer(centers[i], snap) {
            candidates.push(2 * t);
        }
        for j in i + 1..d {
            if let Some(s) = near_integer(centers[i] + centers[j], snap) {
                candidates.push(s);
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();

    'candidate: for &a in &candidates {
        let mut b = vec![0i64; d];
        let mut squares = vec![0i64; d];
        let mut g = 0i64;
        for r in 0..d {
            let x = 2.0 * centers[r] - a as f64;
            if x.abs() < snap {
                b[r] = 0;
                continue;
            }
            // x ~ b_r * sqrt(delta), so x^2 ~ b_r^2 * delta, an integer.
            let y = match near_integer(x * x, 1e-4 * x.abs().max(1.0)) {
                Some(y) if y > 0 => y,
                _ => continue 'candidate,
            };
            squares[r] = y;
            g = gcd(g, y);
        }
        if g == 0 {
            continue;
        }
        let delta = squarefree_part(g);
        let sqrt_delta = (delta as f64).sqrt();
        for r in 0..d {
            if squares[r] == 0 {
                continue;
            }
            let x = 2.0 * centers[r] - a as f64;
            let br = (x / sqrt_delta).round() as i64;
            if br == 0
                || br * br * delta != squares[r]
                || (x - br as f64 * sqrt_delta).abs() > 1e-6
            {
                continue 'candidate;
            }
            b[r] = br;
        }
        if verify(a, delta, &b, mults, char_poly) {
            return Some(QuadraticFit { delta, a, b });
        }
    }
    None
}

/// Exact certificate: conjugate pairs must match in multiplicity, every
/// factor must have integer coefficients, and the product of all factors
/// must equal the characteristic polynomial.
fn verify(a: i64, delta: i64, b: &[i64], mults: &[usize], char_poly: &[BigInt]) -> bool {
    let d = b.len();
    let mut used = vec![false; d];
    let mut product: IntPoly = vec![BigInt::from(1)];
    for r in 0..d {
        if used[r] {
            continue;
        }
        if b[r] == 0 {
            // theta = a/2 must itself be an integer eigenvalue.
            if a % 2 != 0 {
                return false;
            }
            let factor = vec![BigInt::from(-a / 2), BigInt::from(1)];
            product = poly_mul(&product, &poly_pow(&factor, mults[r]));
            used[r] = true;
            continue;
        }
        if b[r] < 0 {
            // Must have been consumed as the conjugate of a positive b.
            return false;
        }
        let Some(conj) = (0..d).position(|s| !used[s] && b[s] == -b[r]) else {
            return false;
        };
        if mults[conj] != mults[r] {
            return false;
        }
        // Minimal polynomial of (a + b sqrt(delta))/2 over the integers:
        // x^2 - a x + (a^2 - b^2 delta)/4.
        let norm4 = a * a - b[r] * b[r] * delta;
        if norm4 % 4 != 0 {
            return false;
        }
        let factor = vec![BigInt::from(norm4 / 4), BigInt::from(-a), BigInt::from(1)];
        product = poly_mul(&product, &poly_pow(&factor, mults[r]));
        used[r] = true;
        used[conj] = true;
    }
    product == char_poly
}
