//! Self-contained dense linear algebra sized for desk-scale graphs
//! (n <= 62): a floating symmetric eigensolver and exact big-rational
//! matrices/polynomials. No external solver dependencies; the exact and
//! floating routes are meant to check each other.

mod mat;
mod poly;
mod ratmat;

pub use mat::{jacobi_eigen, Mat};
pub use poly::{
    poly_divexact_linear, poly_eval_int, poly_is_root, poly_mul, poly_pow, IntPoly,
};
pub use ratmat::{RatMat, RatVec};
