//! Certified spectral decomposition `A = sum_r theta_r E_r`.
//!
//! The floating Jacobi eigensolver proposes eigenvalue clusters; exact
//! arithmetic then either certifies them (integer roots of the exact
//! characteristic polynomial, or a verified quadratic-field family) or the
//! decomposition stays floating with recorded tolerances. Projectors are
//! exact rational Lagrange products whenever the eigenvalues are integers.

mod charpoly;
mod quadratic;

pub use charpoly::char_poly;
pub use quadratic::QuadraticFit;

use num::{BigInt, ToPrimitive};

use crate::graph::Graph;
use crate::linalg::{poly_mul, poly_pow, IntPoly, Mat, RatMat};
use crate::{Error, Result, Tolerances};

use charpoly::IntMat;

/// How the distinct eigenvalues are represented.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumKind {
    /// Every eigenvalue is an integer, each verified as a root of the
    /// characteristic polynomial with matching multiplicity.
    ExactInteger { values: Vec<i64> },
    /// `theta_r = (a + b_r sqrt(delta)) / 2` with one fixed `a` and
    /// square-free `delta`, certified by exact polynomial division.
    Quadratic { delta: i64, a: i64, b: Vec<i64> },
    /// No exact certificate; values carry the floating cluster centers.
    Floating,
}

impl SpectrumKind {
    pub fn name(&self) -> &'static str {
        match self {
            SpectrumKind::ExactInteger { .. } => "exact-integer",
            SpectrumKind::Quadratic { .. } => "quadratic",
            SpectrumKind::Floating => "floating",
        }
    }
}

/// Distinct eigenvalues in strictly descending order with multiplicities.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub kind: SpectrumKind,
}

impl Spectrum {
    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, r: usize) -> f64 {
        self.values[r]
    }

    pub fn exact_integers(&self) -> Option<&[i64]> {
        match &self.kind {
            SpectrumKind::ExactInteger { values } => Some(values),
            _ => None,
        }
    }

    pub fn is_exact_integer(&self) -> bool {
        matches!(self.kind, SpectrumKind::ExactInteger { .. })
    }
}

/// The spectral idempotents, exact when the spectrum is integral.
#[derive(Debug, Clone)]
pub enum ProjectorMatrices {
    Exact(Vec<RatMat>),
    Floating(Vec<Mat>),
}

#[derive(Debug, Clone)]
pub struct Projectors {
    pub mats: ProjectorMatrices,
    /// Tolerance the floating matrices were validated against.
    pub tol: f64,
}

impl Projectors {
    pub fn count(&self) -> usize {
        match &self.mats {
            ProjectorMatrices::Exact(v) => v.len(),
            ProjectorMatrices::Floating(v) => v.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.mats, ProjectorMatrices::Exact(_))
    }

    pub fn exact(&self) -> Option<&[RatMat]> {
        match &self.mats {
            ProjectorMatrices::Exact(v) => Some(v),
            ProjectorMatrices::Floating(_) => None,
        }
    }

    /// `E_r e_u` as floats, whatever the backing arithmetic.
    pub fn column_f64(&self, r: usize, u: usize) -> Vec<f64> {
        match &self.mats {
            ProjectorMatrices::Exact(v) => v[r]
                .column(u)
                .iter()
                .map(|x| x.to_f64().unwrap())
                .collect(),
            ProjectorMatrices::Floating(v) => v[r].column(u),
        }
    }

    pub fn entry_f64(&self, r: usize, i: usize, j: usize) -> f64 {
        match &self.mats {
            ProjectorMatrices::Exact(v) => v[r].get(i, j).to_f64().unwrap(),
            ProjectorMatrices::Floating(v) => v[r].get(i, j),
        }
    }
}

/// A spectrum and its aligned projectors for one connected graph.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub n: usize,
    pub spectrum: Spectrum,
    pub projectors: Projectors,
}

impl Decomposition {
    pub fn distinct_eigenvalues(&self) -> usize {
        self.spectrum.len()
    }
}

/// Eigenvalue clusters from the sorted floating eigenvalues.
fn cluster(sorted_desc: &[f64], tol: f64) -> Vec<(f64, Vec<usize>)> {
    let mut out: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut start = 0;
    for i in 0..sorted_desc.len() {
        let next_break =
            i + 1 == sorted_desc.len() || sorted_desc[i] - sorted_desc[i + 1] > tol;
        if next_break {
            let members: Vec<usize> = (start..=i).collect();
            let center =
                members.iter().map(|&k| sorted_desc[k]).sum::<f64>() / members.len() as f64;
            out.push((center, members));
            start = i + 1;
        }
    }
    out
}

/// Decompose the adjacency matrix of a connected graph.
///
/// Clusters within `tol.base` are merged; adjacent clusters closer than ten
/// times that are refused as ambiguous. Cluster centers within
/// `tol.integer_snap` of integers are accepted as exact only after the full
/// factorization `prod (x - theta_r)^{m_r}` reproduces the characteristic
/// polynomial; failing that, a quadratic-field family is attempted with the
/// same exact certificate; otherwise the decomposition stays floating.
pub fn eigen_decompose(g: &Graph, tol: &Tolerances) -> Result<Decomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let (vals, vecs) = crate::linalg::jacobi_eigen(&g.adjacency_f64());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());
    let sorted: Vec<f64> = order.iter().map(|&i| vals[i]).collect();

    let clusters = cluster(&sorted, tol.base);
    for w in clusters.windows(2) {
        let gap = w[0].0 - w[1].0;
        if gap < 10.0 * tol.base {
            return Err(Error::ClusterAmbiguity {
                lower: w[1].0,
                upper: w[0].0,
                gap,
                tol: tol.base,
            });
        }
    }

    let centers: Vec<f64> = clusters.iter().map(|c| c.0).collect();
    let mults: Vec<usize> = clusters.iter().map(|c| c.1.len()).collect();
    let cp = char_poly(g);

    // Exact integer route.
    if let Some(ints) = snap_integers(&centers, tol.integer_snap) {
        if integer_factorization_matches(&ints, &mults, &cp) {
            let projectors = lagrange_projectors(g, &ints);
            return Ok(Decomposition {
                n,
                spectrum: Spectrum {
                    values: ints.iter().map(|&t| t as f64).collect(),
                    multiplicities: mults,
                    kind: SpectrumKind::ExactInteger { values: ints },
                },
                projectors: Projectors {
                    mats: ProjectorMatrices::Exact(projectors),
                    tol: 0.0,
                },
            });
        }
    }

    // Quadratic-field route; projectors stay floating either way.
    let floating = floating_projectors(n, &clusters, &order, &vecs);
    if let Some(fit) = quadratic::fit_quadratic(&centers, &mults, &cp, tol.integer_snap) {
        let sqrt_delta = (fit.delta as f64).sqrt();
        let values: Vec<f64> = fit
            .b
            .iter()
            .map(|&br| (fit.a as f64 + br as f64 * sqrt_delta) / 2.0)
            .collect();
        return Ok(Decomposition {
            n,
            spectrum: Spectrum {
                values,
                multiplicities: mults,
                kind: SpectrumKind::Quadratic { delta: fit.delta, a: fit.a, b: fit.b },
            },
            projectors: Projectors {
                mats: ProjectorMatrices::Floating(floating),
                tol: tol.base,
            },
        });
    }

    Ok(Decomposition {
        n,
        spectrum: Spectrum {
            values: centers,
            multiplicities: mults,
            kind: SpectrumKind::Floating,
        },
        projectors: Projectors {
            mats: ProjectorMatrices::Floating(floating),
            tol: tol.base,
        },
    })
}

fn snap_integers(centers: &[f64], snap: f64) -> Option<Vec<i64>> {
    centers
        .iter()
        .map(|&c| {
            let r = c.round();
            ((c - r).abs() < snap).then_some(r as i64)
        })
        .collect()
}

/// Exact check that `prod (x - t_r)^{m_r}` equals the characteristic
/// polynomial, which certifies both the roots and their multiplicities.
fn integer_factorization_matches(ints: &[i64], mults: &[usize], cp: &[BigInt]) -> bool {
    let mut product: IntPoly = vec![BigInt::from(1)];
    for (t, &m) in ints.iter().zip(mults) {
        let factor = vec![BigInt::from(-t), BigInt::from(1)];
        product = poly_mul(&product, &poly_pow(&factor, m));
    }
    product == cp
}

/// `E_r = prod_{s != r} (A - theta_s I) / (theta_r - theta_s)` over the
/// rationals. The numerator stays integral; one scalar division at the end.
fn lagrange_projectors(g: &Graph, ints: &[i64]) -> Vec<RatMat> {
    let n = g.vertex_count();
    let a = IntMat::from_graph(g);
    let d = ints.len();
    let mut out = Vec::with_capacity(d);
    for r in 0..d {
        let mut prod = IntMat::identity(n);
        let mut den = BigInt::from(1);
        for s in 0..d {
            if s == r {
                continue;
            }
            let mut shifted = a.clone();
            shifted.add_diag(&BigInt::from(-ints[s]));
            prod = prod.mul(&shifted);
            den *= BigInt::from(ints[r] - ints[s]);
        }
        let mut e = RatMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                e.set(
                    i,
                    j,
                    num::BigRational::new(prod.get(i, j).clone(), den.clone()),
                );
            }
        }
        out.push(e);
    }
    out
}

fn floating_projectors(
    n: usize,
    clusters: &[(f64, Vec<usize>)],
    order: &[usize],
    vecs: &Mat,
) -> Vec<Mat> {
    clusters
        .iter()
        .map(|(_, members)| {
            let mut e = Mat::zeros(n);
            for &k in members {
                let col = vecs.column(order[k]);
                e.add_outer(&col, 1.0);
            }
            e
        })
        .collect()
}

/// One verified identity of a decomposition report.
#[derive(Debug, Clone)]
pub struct IdentityResidual {
    pub identity: &'static str,
    pub max_residual: f64,
    pub pass: bool,
}

/// Outcome of [`verify_decomposition`]: every defining identity of the
/// idempotents with its worst residual.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub exact: bool,
    pub checks: Vec<IdentityResidual>,
}

impl DecompositionReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&IdentityResidual> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }
}

/// Check `sum E_r = I`, `E_r E_s = delta_{rs} E_r`, `E_r^T = E_r`,
/// `sum theta_r E_r = A` and `trace E_r = m_r`; exactly for exact
/// arithmetic, entrywise within `tol.base` for floating.
pub fn verify_decomposition(
    dec: &Decomposition,
    g: &Graph,
    tol: &Tolerances,
) -> DecompositionReport {
    match &dec.projectors.mats {
        ProjectorMatrices::Exact(mats) => verify_exact(dec, mats, g),
        ProjectorMatrices::Floating(mats) => verify_floating(dec, mats, g, tol.base),
    }
}

fn verify_exact(dec: &Decomposition, mats: &[RatMat], g: &Graph) -> DecompositionReport {
    let n = dec.n;
    let ints = dec
        .spectrum
        .exact_integers()
        .expect("exact projectors imply integer spectrum");
    let mut checks = Vec::new();
    let exact_check = |name: &'static str, ok: bool, residual: f64| IdentityResidual {
        identity: name,
        max_residual: if ok { 0.0 } else { residual },
        pass: ok,
    };

    let mut sum = RatMat::zeros(n);
    for m in mats {
        sum = sum.add(m);
    }
    let id = RatMat::identity(n);
    checks.push(exact_check("sum(E_r) = I", sum == id, sum.max_abs_diff_f64(&id)));

    let mut ortho_ok = true;
    let mut ortho_res = 0.0f64;
    for r in 0..mats.len() {
        for s in 0..mats.len() {
            let prod = mats[r].mul(&mats[s]);
            let want = if r == s { mats[r].clone() } else { RatMat::zeros(n) };
            if prod != want {
                ortho_ok = false;
                ortho_res = ortho_res.max(prod.max_abs_diff_f64(&want));
            }
        }
    }
    checks.push(exact_check("E_r E_s = delta_rs E_r", ortho_ok, ortho_res));

    let sym_ok = mats.iter().all(|m| m.is_symmetric());
    checks.push(exact_check("E_r symmetric", sym_ok, f64::NAN));

    let mut recon = RatMat::zeros(n);
    for (m, &t) in mats.iter().zip(ints) {
        recon = recon.add(&m.scale(&num::BigRational::from_integer(BigInt::from(t))));
    }
    let a = RatMat::from_int_entries(n, &IntMat::from_graph(g).a);
    checks.push(exact_check(
        "sum(theta_r E_r) = A",
        recon == a,
        recon.max_abs_diff_f64(&a),
    ));

    let tr_ok = mats.iter().zip(&dec.spectrum.multiplicities).all(|(m, &mult)| {
        m.trace() == num::BigRational::from_integer(BigInt::from(mult as i64))
    });
    checks.push(exact_check("trace(E_r) = multiplicity", tr_ok, f64::NAN));

    DecompositionReport { exact: true, checks }
}

fn verify_floating(
    dec: &Decomposition,
    mats: &[Mat],
    g: &Graph,
    tol: f64,
) -> DecompositionReport {
    let n = dec.n;
    let mut checks = Vec::new();
    let mut push = |name: &'static str, residual: f64| {
        checks.push(IdentityResidual {
            identity: name,
            max_residual: residual,
            pass: residual <= tol,
        });
    };

    let mut sum = Mat::zeros(n);
    for m in mats {
        sum.add_scaled(m, 1.0);
    }
    push("sum(E_r) = I", sum.max_abs_diff(&Mat::identity(n)));

    let mut ortho = 0.0f64;
    for r in 0..mats.len() {
        for s in 0..mats.len() {
            let prod = mats[r].mul(&mats[s]);
            let want = if r == s { mats[r].clone() } else { Mat::zeros(n) };
            ortho = ortho.max(prod.max_abs_diff(&want));
        }
    }
    push("E_r E_s = delta_rs E_r", ortho);

    let mut asym = 0.0f64;
    for m in mats {
        for i in 0..n {
            for j in i + 1..n {
                asym = asym.max((m.get(i, j) - m.get(j, i)).abs());
            }
        }
    }
    push("E_r symmetric", asym);

    let mut recon = Mat::zeros(n);
    for (m, &t) in mats.iter().zip(&dec.spectrum.values) {
        recon.add_scaled(m, t);
    }
    push("sum(theta_r E_r) = A", recon.max_abs_diff(&g.adjacency_f64()));

    let mut tr = 0.0f64;
    for (m, &mult) in mats.iter().zip(&dec.spectrum.multiplicities) {
        let t: f64 = (0..n).map(|i| m.get(i, i)).sum();
        tr = tr.max((t - mult as f64).abs());
    }
    push("trace(E_r) = multiplicity", tr);

    DecompositionReport { exact: false, checks }
}
