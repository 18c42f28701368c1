//! Dense matrices over the rationals, used for exact spectral idempotents.

use num::rational::BigRational;
use num::{BigInt, ToPrimitive, Zero};

use super::Mat;

pub type RatVec = Vec<BigRational>;

/// Dense row-major `n x n` matrix of `BigRational`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatMat {
    n: usize,
    a: Vec<BigRational>,
}

impl RatMat {
    pub fn zeros(n: usize) -> Self {
        RatMat { n, a: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::from_integer(BigInt::from(1)));
        }
        m
    }

    /// Build from integer entries (row-major).
    pub fn from_int_entries(n: usize, entries: &[BigInt]) -> Self {
        assert_eq!(entries.len(), n * n);
        RatMat {
            n,
            a: entries.iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.a[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> RatVec {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = RatMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[BigRational]) -> RatVec {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut s = BigRational::zero();
                for j in 0..n {
                    if !x[j].is_zero() {
                        s += self.get(i, j) * &x[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        RatMat {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        RatMat {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> RatMat {
        RatMat { n: self.n, a: self.a.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Largest |entry| of `self - rhs` as f64 (diagnostic only).
    pub fn max_abs_diff_f64(&self, rhs: &RatMat) -> f64 {
        self.a
            .iter()
            .zip(&rhs.a)
            .map(|(x, y)| (x - y).to_f64().map(f64::abs).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Mat {
        let mut m = Mat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j).to_f64().unwrap());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn mul_identity_and_scale() {
        let mut m = RatMat::zeros(2);
        m.set(0, 1, rat(1, 2));
        m.set(1, 0, rat(1, 2));
        let i = RatMat::identity(2);
        assert_eq!(m.mul(&i), m);
        let half = m.scale(&rat(1, 2));
        assert_eq!(*half.get(0, 1), rat(1, 4));
        assert!(m.is_symmetric());
        assert_eq!(m.trace(), rat(0, 1));
    }

    #[test]
    fn matvec_matches_mul() {
        let mut m = RatMat::zeros(2);
        m.set(0, 0, rat(2, 1));
        m.set(0, 1, rat(1, 3));
        m.set(1, 1, rat(-1, 1));
        let x = vec![rat(3, 1), rat(6, 1)];
        let y = m.matvec(&x);
        assert_eq!(y, vec![rat(8, 1), rat(-6, 1)]);
    }
}
