//! Eigenvalue supports, dual degrees, (strong) cospectrality, and the
//! transfer-polynomial machinery tying them together.
//!
//! A vertex `u` supports eigenvalue index `r` when `E_r e_u != 0`; the dual
//! degree `d*(u)` is one less than the support size and always bounds the
//! eccentricity from above. Vertices are strongly cospectral when every
//! projection pair is equal up to a sign, which happens exactly when they
//! are cospectral and some polynomial maps `e_u` to `e_v`.

use num::rational::BigRational;
use num::{BigInt, BigUint, Signed, ToPrimitive, Zero};

use crate::graph::{walk_count, walk_counts_from, DistanceInfo, Graph};
use crate::spectral::{Decomposition, ProjectorMatrices};
use crate::{Error, Result, Tolerances};

/// Spectrum indices supported by one vertex, in descending eigenvalue order.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSupport {
    pub vertex: usize,
    pub support: Vec<usize>,
    pub dual_degree: usize,
}

/// The signs `sigma_r` with `E_r e_v = sigma_r E_r e_u` over the shared
/// support of a strongly cospectral pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SignPattern {
    pub u: usize,
    pub v: usize,
    /// Spectrum indices of the shared support, descending eigenvalues.
    pub support: Vec<usize>,
    /// `+1` / `-1` per support position.
    pub sigmas: Vec<i8>,
}

impl SignPattern {
    /// Sign pattern `(-1)^r` over support positions, the antipodal shape.
    pub fn alternating(&self) -> bool {
        self.sigmas
            .iter()
            .enumerate()
            .all(|(k, &s)| s == if k % 2 == 0 { 1 } else { -1 })
    }

    /// No three consecutive equal signs. A run of three would force three
    /// critical points of the transfer polynomial between two of its real
    /// roots, which is impossible, so a violation is a critical failure.
    pub fn no_triple_run(&self) -> bool {
        !self.sigmas.windows(3).any(|w| w[0] == w[1] && w[1] == w[2])
    }
}

/// Polynomial coefficients, ascending degree; exact over the rationals when
/// the spectrum is integral.
#[derive(Debug, Clone)]
pub enum PolyCoeffs {
    Exact(Vec<BigRational>),
    Floating(Vec<f64>),
}

/// A polynomial `p` with `p(A) e_u = e_v`; takes values `sigma_r` on the
/// support, and is minimal for `u` in the graph with `v` deleted.
#[derive(Debug, Clone)]
pub struct TransferPolynomial {
    pub coeffs: PolyCoeffs,
    pub degree: usize,
}

impl TransferPolynomial {
    pub fn coeffs_f64(&self) -> Vec<f64> {
        match &self.coeffs {
            PolyCoeffs::Exact(c) => c.iter().map(|x| x.to_f64().unwrap()).collect(),
            PolyCoeffs::Floating(c) => c.clone(),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs_f64().iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

// ---------------------------------------------------------------------------
// supports and extremality

/// Support of `u`: exact nonzero test for exact projectors, otherwise
/// `||E_r e_u|| > tol.support`.
pub fn eigenvalue_support(u: usize, dec: &Decomposition, tol: &Tolerances) -> EigenSupport {
    let support: Vec<usize> = (0..dec.spectrum.len())
        .filter(|&r| !projection_is_zero(dec, r, u, tol))
        .collect();
    debug_assert!(!support.is_empty());
    debug_assert_eq!(support.first(), Some(&0), "Perron projection never vanishes");
    EigenSupport { vertex: u, dual_degree: support.len() - 1, support }
}

fn projection_is_zero(dec: &Decomposition, r: usize, u: usize, tol: &Tolerances) -> bool {
    match &dec.projectors.mats {
        ProjectorMatrices::Exact(mats) => mats[r].column(u).iter().all(|x| x.is_zero()),
        ProjectorMatrices::Floating(mats) => {
            let col = mats[r].column(u);
            col.iter().map(|x| x * x).sum::<f64>().sqrt() <= tol.support
        }
    }
}

/// `u` is spectrally extremal when its eccentricity meets the dual-degree
/// bound `eps_u <= d*(u)` with equality.
pub fn is_spectrally_extremal(
    u: usize,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> bool {
    dist.eccentricity(u) == eigenvalue_support(u, dec, tol).dual_degree
}

/// Equal diagonal projector entries for every eigenvalue.
pub fn are_cospectral(u: usize, v: usize, dec: &Decomposition, tol: &Tolerances) -> bool {
    if u == v {
        return true;
    }
    match &dec.projectors.mats {
        ProjectorMatrices::Exact(mats) => {
            mats.iter().all(|m| m.get(u, u) == m.get(v, v))
        }
        ProjectorMatrices::Floating(mats) => mats
            .iter()
            .all(|m| (m.get(u, u) - m.get(v, v)).abs() <= tol.base),
    }
}

/// Strong cospectrality: every projection pair is entrywise equal up to one
/// sign. The sign comes from the first coordinate of `E_r e_u` above
/// tolerance; any coordinate disagreeing beyond tolerance rejects the pair
/// outright, with no vote.
pub fn are_strongly_cospectral(
    u: usize,
    v: usize,
    dec: &Decomposition,
    tol: &Tolerances,
) -> Option<SignPattern> {
    if u == v {
        return None;
    }
    let mut support = Vec::new();
    let mut sigmas = Vec::new();
    for r in 0..dec.spectrum.len() {
        let zu = projection_is_zero(dec, r, u, tol);
        let zv = projection_is_zero(dec, r, v, tol);
        match (zu, zv) {
            (true, true) => continue,
            (true, false) | (false, true) => return None,
            (false, false) => {}
        }
        let sigma = match &dec.projectors.mats {
            ProjectorMatrices::Exact(mats) => {
                let cu = mats[r].column(u);
                let cv = mats[r].column(v);
                let i = cu.iter().position(|x| !x.is_zero()).unwrap();
                if cv[i].is_zero() {
                    return None;
                }
                let sigma: i8 = if cu[i].is_positive() == cv[i].is_positive() { 1 } else { -1 };
                let ok = cu.iter().zip(&cv).all(|(a, b)| {
                    if sigma == 1 {
                        a == b
                    } else {
                        *a == -b.clone()
                    }
                });
                if !ok {
                    return None;
                }
                sigma
            }
            ProjectorMatrices::Floating(mats) => {
                let cu = mats[r].column(u);
                let cv = mats[r].column(v);
                let i = cu.iter().position(|x| x.abs() > tol.base)?;
                let sigma: i8 = if cu[i] * cv[i] >= 0.0 { 1 } else { -1 };
                let ok = cu
                    .iter()
                    .zip(&cv)
                    .all(|(a, b)| (b - f64::from(sigma) * a).abs() <= tol.base);
                if !ok {
                    return None;
                }
                sigma
            }
        };
        support.push(r);
        sigmas.push(sigma);
    }
    if support.is_empty() {
        return None;
    }
    Some(SignPattern { u, v, support, sigmas })
}

// ---------------------------------------------------------------------------
// walk module and transfer polynomials

/// Exact dimension of the walk module `W_u = span{A^i e_u}`, computed as the
/// rank of the Krylov vectors in integer arithmetic. Serves as an
/// arithmetic-independent oracle for the support size: `dim W_u = d*(u)+1`.
pub fn walk_module_dimension(g: &Graph, u: usize) -> usize {
    let n = g.vertex_count();
    rational_rank(krylov_rows(g, u, n))
}

fn krylov_rows(g: &Graph, u: usize, count: usize) -> Vec<Vec<BigRational>> {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(count);
    let mut x: Vec<BigInt> = vec![BigInt::zero(); n];
    x[u] = BigInt::from(1);
    for _ in 0..count {
        rows.push(x.iter().map(|e| BigRational::from_integer(e.clone())).collect());
        let mut y = vec![BigInt::zero(); n];
        for (w, yw) in y.iter_mut().enumerate() {
            for z in g.neighbors(w) {
                *yw += &x[z];
            }
        }
        x = y;
    }
    rows
}

fn argmax_abs(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, x) in xs.iter().enumerate() {
        if x.abs() > xs[best].abs() {
            best = i;
        }
    }
    best
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let pivot = rows[row][col].clone();
        for i in row + 1..rows.len() {
            if !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                for c in col..cols {
                    let v = &rows[i][c] - &f * &rows[row][c];
                    rows[i][c] = v;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// Does some polynomial map `e_u` onto a multiple of `x`? Equivalently, is
/// `x` in the walk module of `u`: each supported projection of `x` must be
/// parallel to the projection of `e_u`, and unsupported ones must vanish.
/// Scale-invariant, so callers need not normalize `x`.
pub fn vector_in_walk_module(
    x: &[f64],
    u: usize,
    dec: &Decomposition,
    tol: &Tolerances,
) -> bool {
    let n = dec.n;
    let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    (0..dec.spectrum.len()).all(|r| {
        let px: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| dec.projectors.entry_f64(r, i, j) * x[j]).sum())
            .collect();
        if projection_is_zero(dec, r, u, tol) {
            return px.iter().all(|e| e.abs() <= 10.0 * tol.support * scale);
        }
        let pu = dec.projectors.column_f64(r, u);
        let i = argmax_abs(&pu);
        let c = px[i] / pu[i];
        px.iter()
            .zip(&pu)
            .all(|(a, b)| (a - c * b).abs() <= 100.0 * tol.base * scale.max(c.abs()))
    })
}

/// Solve for the polynomial carrying `e_u` to `e_v`, in the eigenprojection
/// basis (one value `p(theta_r)` per supported eigenvalue) rather than the
/// power basis. Returns `Ok(None)` when `e_v` is outside the walk module of
/// `u`, i.e. no such polynomial exists.
pub fn transfer_polynomial(
    u: usize,
    v: usize,
    dec: &Decomposition,
    tol: &Tolerances,
) -> Result<Option<TransferPolynomial>> {
    let support = eigenvalue_support(u, dec, tol).support;
    match &dec.projectors.mats {
        ProjectorMatrices::Exact(mats) => {
            let ints = dec
                .spectrum
                .exact_integers()
                .expect("exact projectors imply integer spectrum");
            let mut values = Vec::with_capacity(support.len());
            for r in 0..dec.spectrum.len() {
                let pu = mats[r].column(u);
                let pv = mats[r].column(v);
                if !support.contains(&r) {
                    if pv.iter().any(|e| !e.is_zero()) {
                        return Ok(None);
                    }
                    continue;
                }
                let i = pu.iter().position(|e| !e.is_zero()).unwrap();
                let c = &pv[i] / &pu[i];
                if !pu.iter().zip(&pv).all(|(a, b)| *b == &c * a) {
                    return Ok(None);
                }
                values.push(c);
            }
            let nodes: Vec<BigRational> = support
                .iter()
                .map(|&r| BigRational::from_integer(BigInt::from(ints[r])))
                .collect();
            let coeffs = lagrange_exact(&nodes, &values);
            let poly = TransferPolynomial {
                degree: exact_degree(&coeffs),
                coeffs: PolyCoeffs::Exact(coeffs),
            };
            verify_transfer_exact(&poly, u, v, dec)?;
            Ok(Some(poly))
        }
        ProjectorMatrices::Floating(mats) => {
            let mut values = Vec::with_capacity(support.len());
            for r in 0..dec.spectrum.len() {
                let pv = mats[r].column(v);
                if !support.contains(&r) {
                    if pv.iter().any(|e| e.abs() > tol.support) {
                        return Ok(None);
                    }
                    continue;
                }
                let pu = mats[r].column(u);
                let i = argmax_abs(&pu);
                let c = pv[i] / pu[i];
                if !pu.iter().zip(&pv).all(|(a, b)| (b - c * a).abs() <= tol.base) {
                    return Ok(None);
                }
                values.push(c);
            }
            let nodes: Vec<f64> = support.iter().map(|&r| dec.spectrum.value(r)).collect();
            let coeffs = lagrange_f64(&nodes, &values);
            let poly = TransferPolynomial {
                degree: float_degree(&coeffs, tol),
                coeffs: PolyCoeffs::Floating(coeffs),
            };
            Ok(Some(poly))
        }
    }
}

/// Exact reconstruction check `p(A) e_u = e_v` through the spectral sum.
fn verify_transfer_exact(
    poly: &TransferPolynomial,
    u: usize,
    v: usize,
    dec: &Decomposition,
) -> Result<()> {
    let PolyCoeffs::Exact(coeffs) = &poly.coeffs else { unreachable!() };
    let ints = dec.spectrum.exact_integers().unwrap();
    let mats = dec.projectors.exact().unwrap();
    let n = dec.n;
    let mut image = vec![BigRational::zero(); n];
    for (r, &t) in ints.iter().enumerate() {
        let val = eval_exact(coeffs, &BigRational::from_integer(BigInt::from(t)));
        if val.is_zero() {
            continue;
        }
        for (i, e) in mats[r].column(u).into_iter().enumerate() {
            image[i] += &val * &e;
        }
    }
    let one = BigRational::from_integer(BigInt::from(1));
    let ok = image
        .iter()
        .enumerate()
        .all(|(i, x)| if i == v { *x == one } else { x.is_zero() });
    if ok {
        Ok(())
    } else {
        Err(Error::Internal("exact transfer polynomial failed p(A)e_u = e_v".into()))
    }
}

/// Residual of `p(A) e_u = e_v` evaluated through the power basis (Horner
/// with the raw adjacency), the independent check on the projection-basis
/// solve.
pub fn transfer_residual(g: &Graph, u: usize, v: usize, poly: &TransferPolynomial) -> f64 {
    let coeffs = poly.coeffs_f64();
    let image = horner_f64(g, u, &coeffs);
    let mut res = 0.0f64;
    for (i, x) in image.iter().enumerate() {
        let want = if i == v { 1.0 } else { 0.0 };
        res = res.max((x - want).abs());
    }
    res
}

/// [`transfer_polynomial`] plus the power-basis residual gate and the
/// cospectral-pair assertions (`p(A)e_v = e_u`, `p(theta_r) = +-1`).
pub fn transfer_polynomial_checked(
    g: &Graph,
    u: usize,
    v: usize,
    dec: &Decomposition,
    tol: &Tolerances,
) -> Result<Option<TransferPolynomial>> {
    let Some(poly) = transfer_polynomial(u, v, dec, tol)? else {
        return Ok(None);
    };
    let residual = transfer_residual(g, u, v, &poly);
    let limit = tol.base.sqrt();
    if residual > limit {
        return Err(Error::IllConditioned { residual, limit });
    }
    if are_cospectral(u, v, dec, tol) {
        let back = transfer_residual(g, v, u, &poly);
        if back > limit {
            return Err(Error::Internal(
                "cospectral transfer polynomial failed p(A)e_v = e_u".into(),
            ));
        }
        let support = eigenvalue_support(u, dec, tol).support;
        for &r in &support {
            let val = poly.eval_f64(dec.spectrum.value(r));
            if (val.abs() - 1.0).abs() > limit {
                return Err(Error::Internal(format!(
                    "transfer polynomial value {val} at supported eigenvalue is not +-1"
                )));
            }
        }
    }
    Ok(Some(poly))
}

// ---------------------------------------------------------------------------
// structural consequences for extremal strongly cospectral pairs

/// Witness for the uniqueness of the partner at distance `d(u,v)`.
#[derive(Debug, Clone, PartialEq)]
pub enum UniqueAtDistance {
    Unique,
    /// A second vertex at the same distance; impossible for a conforming
    /// graph, so finding one is a critical failure.
    Violated { witness: usize },
}

fn require_extremal_sc_pair(
    which: &str,
    u: usize,
    v: usize,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> Result<SignPattern> {
    if !is_spectrally_extremal(u, dec, dist, tol) {
        return Err(Error::precondition(format!(
            "{which}: vertex {u} is not spectrally extremal"
        )));
    }
    are_strongly_cospectral(u, v, dec, tol).ok_or_else(|| {
        Error::precondition(format!(
            "{which}: vertices {u} and {v} are not strongly cospectral"
        ))
    })
}

/// For a spectrally extremal `u` strongly cospectral to `v`: assert `v` is
/// the unique vertex at distance `d(u,v)` from `u`.
pub fn unique_at_distance(
    u: usize,
    v: usize,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> Result<UniqueAtDistance> {
    require_extremal_sc_pair("unique_at_distance", u, v, dec, dist, tol)?;
    let g = dist.distance(u, v);
    for w in 0..dec.n {
        if w != v && dist.distance(u, w) == g {
            return Ok(UniqueAtDistance::Violated { witness: w });
        }
    }
    Ok(UniqueAtDistance::Unique)
}

/// One offending pair from [`walk_maximality_scan`].
#[derive(Debug, Clone)]
pub struct WalkMaximalityViolation {
    pub z: usize,
    pub w: usize,
    pub count: BigUint,
    pub bound: BigUint,
    pub strongly_cospectral: bool,
}

/// Scan every pair `(z, w)` with the support of `u` and `d(z,w) = d(u,v)`:
/// the walk count `(A^g)_{z,w}` never exceeds `(A^g)_{u,v}`, and equality
/// holds exactly for the strongly cospectral pairs. Returns all violations
/// (empty on a conforming graph).
pub fn walk_maximality_scan(
    g: &Graph,
    u: usize,
    v: usize,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> Result<Vec<WalkMaximalityViolation>> {
    require_extremal_sc_pair("walk_maximality_scan", u, v, dec, dist, tol)?;
    let gd = dist.distance(u, v);
    let bound = walk_count(g, gd, u, v);
    let base_support = eigenvalue_support(u, dec, tol).support;
    let mut violations = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for z in 0..g.vertex_count() {
        if eigenvalue_support(z, dec, tol).support != base_support {
            continue;
        }
        let row = walk_counts_from(g, gd, z);
        for w in 0..g.vertex_count() {
            if w == z || dist.distance(z, w) != gd {
                continue;
            }
            if !seen.insert((z.min(w), z.max(w))) {
                continue;
            }
            let count = row[w].clone();
            let sc = are_strongly_cospectral(z, w, dec, tol).is_some();
            let conforming = if count > bound { false } else { (count == bound) == sc };
            if !conforming {
                violations.push(WalkMaximalityViolation {
                    z: z.min(w),
                    w: z.max(w),
                    count,
                    bound: bound.clone(),
                    strongly_cospectral: sc,
                });
            }
        }
    }
    Ok(violations)
}

/// Check that the transfer polynomial of an extremal strongly cospectral
/// pair is the minimal polynomial of `u` in the component of `X \ v`
/// containing `u`: `p(A') e_u = 0` and no lower degree annihilates `e_u`.
pub fn minimal_poly_in_deleted_graph(
    g: &Graph,
    u: usize,
    v: usize,
    poly: &TransferPolynomial,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> Result<bool> {
    require_extremal_sc_pair("minimal_poly_in_deleted_graph", u, v, dec, dist, tol)?;
    let (deleted, kept) = g.delete_vertex(v);
    let u_in_deleted = kept.iter().position(|&x| x == u).unwrap();
    let comp = deleted.component_of(u_in_deleted);
    let sub = deleted.induced_subgraph(&comp);
    let u_in_sub = comp.iter().position(|&x| x == u_in_deleted).unwrap();

    // p(A') e_u = 0, in the polynomial's own arithmetic.
    let annihilates = match &poly.coeffs {
        PolyCoeffs::Exact(coeffs) => {
            let image = horner_exact(&sub, u_in_sub, coeffs);
            image.iter().all(|x| x.is_zero())
        }
        PolyCoeffs::Floating(_) => {
            let coeffs = poly.coeffs_f64();
            let image = horner_f64(&sub, u_in_sub, &coeffs);
            image.iter().all(|x| x.abs() <= tol.base.sqrt())
        }
    };

    // Minimality: the Krylov vectors below the degree stay independent,
    // an exact integer rank, independent of the polynomial arithmetic.
    let minimal = rational_rank(krylov_rows(&sub, u_in_sub, poly.degree)) == poly.degree;
    Ok(annihilates && minimal)
}

/// Precondition-checked wrapper around [`SignPattern::no_triple_run`] for
/// extremal strongly cospectral pairs.
pub fn sign_pattern_sanity(
    sp: &SignPattern,
    dec: &Decomposition,
    dist: &DistanceInfo,
    tol: &Tolerances,
) -> Result<bool> {
    for x in [sp.u, sp.v] {
        if !is_spectrally_extremal(x, dec, dist, tol) {
            return Err(Error::precondition(format!(
                "sign_pattern_sanity: vertex {x} is not spectrally extremal"
            )));
        }
    }
    if are_strongly_cospectral(sp.u, sp.v, dec, tol).is_none() {
        return Err(Error::precondition(format!(
            "sign_pattern_sanity: vertices {} and {} are not strongly cospectral",
            sp.u, sp.v
        )));
    }
    Ok(sp.no_triple_run())
}

// ---------------------------------------------------------------------------
// polynomial helpers

fn lagrange_exact(nodes: &[BigRational], values: &[BigRational]) -> Vec<BigRational> {
    let k = nodes.len();
    let one = BigRational::from_integer(BigInt::from(1));
    let mut acc = vec![BigRational::zero(); k];
    for r in 0..k {
        let mut basis = vec![one.clone()];
        let mut den = one.clone();
        for s in 0..k {
            if s == r {
                continue;
            }
            basis = poly_mul_linear_exact(&basis, &nodes[s]);
            den *= &nodes[r] - &nodes[s];
        }
        let scale = &values[r] / den;
        for (a, b) in acc.iter_mut().zip(&basis) {
            *a += &scale * b;
        }
    }
    acc
}

/// Multiply by `(x - t)`.
fn poly_mul_linear_exact(p: &[BigRational], t: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= t * c;
    }
    out
}

fn eval_exact(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn exact_degree(coeffs: &[BigRational]) -> usize {
    coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn lagrange_f64(nodes: &[f64], values: &[f64]) -> Vec<f64> {
    let k = nodes.len();
    let mut acc = vec![0.0; k];
    for r in 0..k {
        let mut basis = vec![1.0];
        let mut den = 1.0;
        for s in 0..k {
            if s == r {
                continue;
            }
            let mut next = vec![0.0; basis.len() + 1];
            for (i, &c) in basis.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= nodes[s] * c;
            }
            basis = next;
            den *= nodes[r] - nodes[s];
        }
        let scale = values[r] / den;
        for (a, &b) in acc.iter_mut().zip(&basis) {
            *a += scale * b;
        }
    }
    acc
}

fn float_degree(coeffs: &[f64], tol: &Tolerances) -> usize {
    let scale = coeffs.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    coeffs
        .iter()
        .rposition(|c| c.abs() > tol.base.sqrt() * scale)
        .unwrap_or(0)
}

fn horner_exact(g: &Graph, u: usize, coeffs: &[BigRational]) -> Vec<BigRational> {
    let n = g.vertex_count();
    let mut w = vec![BigRational::zero(); n];
    if let Some(top) = coeffs.last() {
        w[u] = top.clone();
    }
    for k in (0..coeffs.len().saturating_sub(1)).rev() {
        let mut next = vec![BigRational::zero(); n];
        for (i, ni) in next.iter_mut().enumerate() {
            for z in g.neighbors(i) {
                *ni += &w[z];
            }
        }
        next[u] += &coeffs[k];
        w = next;
    }
    w
}

fn horner_f64(g: &Graph, u: usize, coeffs: &[f64]) -> Vec<f64> {
    let n = g.vertex_count();
    let mut w = vec![0.0; n];
    if let Some(&top) = coeffs.last() {
        w[u] = top;
    }
    for k in (0..coeffs.len().saturating_sub(1)).rev() {
        let mut next = vec![0.0; n];
        for (i, ni) in next.iter_mut().enumerate() {
            for z in g.neighbors(i) {
                *ni += w[z];
            }
        }
        next[u] += coeffs[k];
        w = next;
    }
    w
}
