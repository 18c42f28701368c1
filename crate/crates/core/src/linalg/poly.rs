//! Exact integer polynomials, coefficients ascending by degree.

use num::{BigInt, Zero};

pub type IntPoly = Vec<BigInt>;

/// Evaluate at an integer point (Horner).
pub fn poly_eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn poly_is_root(p: &[BigInt], x: &BigInt) -> bool {
    poly_eval_int(p, x).is_zero()
}

pub fn poly_mul(p: &[BigInt], q: &[BigInt]) -> IntPoly {
    if p.is_empty() || q.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

pub fn poly_pow(p: &[BigInt], mut e: usize) -> IntPoly {
    let mut base = p.to_vec();
    let mut acc: IntPoly = vec![BigInt::from(1)];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul(&base, &base);
        }
    }
    acc
}

/// Exact synthetic division by `(x - t)`. Returns the quotient when the
/// division is exact (i.e. `t` is a root), `None` otherwise.
pub fn poly_divexact_linear(p: &[BigInt], t: &BigInt) -> Option<IntPoly> {
    if p.is_empty() {
        return None;
    }
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..=n).rev() {
        let coeff = &p[k] + &carry;
        if k == 0 {
            if !coeff.is_zero() {
                return None;
            }
        } else {
            carry = &coeff * t;
            q[k - 1] = coeff;
        }
    }
    Some(q)
}
