//! Perfect-state-transfer decisions: the 2-adic eigenvalue conditions for a
//! strongly cospectral pair at maximal distance, the global criterion for
//! regular spectrally extremal graphs, transfer along walk-count ties, and
//! the one-shot graph classification everything rolls up into.
//!
//! Every positive verdict carries a certificate whose transfer time is
//! re-checked against the walk simulator before it is emitted.

use serde::Serialize;

use crate::cospectral::{
    are_strongly_cospectral, eigenvalue_support, is_spectrally_extremal, SignPattern,
};
use crate::graph::{walk_count, DistanceInfo, Graph};
use crate::partition::{
    antipodality_identity, are_antipodal, is_antipodal_drg, is_distance_regular,
    IdentityCheck,
};
use crate::spectral::{eigen_decompose, Decomposition, Spectrum, SpectrumKind};
use crate::walk::QuantumWalk;
use crate::{exec, Error, Result, Tolerances};

/// Largest power of two dividing `m`.
pub fn two_adic_valuation(m: i64) -> Result<u32> {
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(m.unsigned_abs().trailing_zeros())
}

/// The eigenvalues of one vertex's support written over a single quadratic
/// field: `theta_r = (a + b_r sqrt(delta)) / 2`. The all-integer case is
/// `delta = 1` with `a = 0`, `b_r = 2 theta_r`; the differences `b_0 - b_r`
/// do not depend on the choice of `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSupportForm {
    pub delta: i64,
    pub a: i64,
    /// One `b_r` per support position, descending with the eigenvalues.
    pub b: Vec<i64>,
}

/// Restrict the certified spectrum form to one support. `None` when the
/// spectrum fits neither the integer nor the quadratic shape, which already
/// rules out perfect state transfer for the vertex.
pub fn quadratic_form_of_support(
    support: &[usize],
    spectrum: &Spectrum,
) -> Option<QuadraticSupportForm> {
    match &spectrum.kind {
        SpectrumKind::ExactInteger { values } => Some(QuadraticSupportForm {
            delta: 1,
            a: 0,
            b: support.iter().map(|&r| 2 * values[r]).collect(),
        }),
        SpectrumKind::Quadratic { delta, a, b } => {
            let restricted: Vec<i64> = support.iter().map(|&r| b[r]).collect();
            if restricted.iter().all(|&x| x == 0) {
                // Only the lone integer eigenvalue a/2 can be supported
                // (distinct eigenvalues allow at most one vanishing b).
                Some(QuadraticSupportForm { delta: 1, a: 0, b: vec![*a; support.len()] })
            } else {
                Some(QuadraticSupportForm { delta: *delta, a: *a, b: restricted })
            }
        }
        SpectrumKind::Floating => None,
    }
}

/// A verified perfect-state-transfer claim.
#[derive(Debug, Clone)]
pub struct PstCertificate {
    pub u: usize,
    pub v: usize,
    /// Common 2-adic valuation of `b_0 - b_r` over odd support positions.
    pub alpha: u32,
    pub delta: i64,
    /// Transfer time `2 pi / (2^alpha sqrt(delta))`.
    pub tau: f64,
    pub sign_pattern: SignPattern,
    /// Simulator fidelity measured at `tau`.
    pub oracle_fidelity: f64,
}

/// Why a pair was denied. Hypothesis failures mean the decision criterion
/// does not apply to the pair; condition failures are definitive.
#[derive(Debug, Clone, PartialEq)]
pub enum NoPstReason {
    TrivialPair,
    HypothesisNotExtremal,
    HypothesisNotMaxDistance,
    NotAntipodal(String),
    /// Support eigenvalues fit no integer or quadratic form.
    UnsupportedEigenvalueForm,
    OddValuationsDiffer { alpha: u32, position: usize, valuation: u32 },
    EvenValuationNotLarger { alpha: u32, position: usize, valuation: u32 },
}

impl std::fmt::Display for NoPstReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoPstReason::TrivialPair => write!(f, "trivial pair rejected"),
            NoPstReason::HypothesisNotExtremal => {
                write!(f, "hypothesis unmet: u is not spectrally extremal")
            }
            NoPstReason::HypothesisNotMaxDistance => {
                write!(f, "hypothesis unmet: v is not at maximal distance from u")
            }
            NoPstReason::NotAntipodal(why) => write!(f, "not antipodal: {why}"),
            NoPstReason::UnsupportedEigenvalueForm => {
                write!(f, "support eigenvalues fit no integer or quadratic form")
            }
            NoPstReason::OddValuationsDiffer { alpha, position, valuation } => write!(
                f,
                "odd-position difference b_0 - b_{position} has 2-adic valuation \
                 {valuation}, expected constant {alpha}"
            ),
            NoPstReason::EvenValuationNotLarger { alpha, position, valuation } => write!(
                f,
                "even-position difference b_0 - b_{position} has 2-adic valuation \
                 {valuation}, not larger than alpha = {alpha}"
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub enum PairVerdict {
    Pst(Box<PstCertificate>),
    NoPst(NoPstReason),
}

impl PairVerdict {
    pub fn is_pst(&self) -> bool {
        matches!(self, PairVerdict::Pst(_))
    }

    pub fn certificate(&self) -> Option<&PstCertificate> {
        match self {
            PairVerdict::Pst(c) => Some(c),
            PairVerdict::NoPst(_) => None,
        }
    }

    /// Hypothesis failures leave the pair outside the decision criterion;
    /// everything else is a definitive verdict.
    pub fn hypotheses_met(&self) -> bool {
        !matches!(
            self,
            PairVerdict::NoPst(
                NoPstReason::TrivialPair
                    | NoPstReason::HypothesisNotExtremal
                    | NoPstReason::HypothesisNotMaxDistance
            )
        )
    }
}

/// Decide perfect state transfer for a pair: antipodality, then the 2-adic
/// conditions on the `b`-differences, then the oracle check of the derived
/// time. Total: hypothesis violations come back as reasons, not errors,
/// so census scans never abort.
pub fn pst_decide_pair(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    walk: &QuantumWalk,
    u: usize,
    v: usize,
    tol: &Tolerances,
) -> PairVerdict {
    if u == v {
        return PairVerdict::NoPst(NoPstReason::TrivialPair);
    }
    if !is_spectrally_extremal(u, dec, dist, tol) {
        return PairVerdict::NoPst(NoPstReason::HypothesisNotExtremal);
    }
    if dist.distance(u, v) != dist.eccentricity(u) {
        return PairVerdict::NoPst(NoPstReason::HypothesisNotMaxDistance);
    }

    let evidence = match are_antipodal(g, dist, dec, u, v, tol) {
        Ok(e) => e,
        Err(err) => return PairVerdict::NoPst(NoPstReason::NotAntipodal(err.to_string())),
    };
    if !evidence.antipodal() {
        let why = evidence
            .definitional_failure
            .unwrap_or_else(|| "sign pattern is not alternating".into());
        return PairVerdict::NoPst(NoPstReason::NotAntipodal(why));
    }
    let sign_pattern = evidence.sign_pattern.expect("antipodal pair has a sign pattern");

    let support = eigenvalue_support(u, dec, tol).support;
    let Some(form) = quadratic_form_of_support(&support, &dec.spectrum) else {
        return PairVerdict::NoPst(NoPstReason::UnsupportedEigenvalueForm);
    };

    let alpha = match check_two_adic_conditions(&form.b) {
        Ok(alpha) => alpha,
        Err(reason) => return PairVerdict::NoPst(reason),
    };

    let tau = 2.0 * std::f64::consts::PI / (f64::from(2u32.pow(alpha)) * (form.delta as f64).sqrt());
    let oracle_fidelity = walk.fidelity(u, v, tau);
    PairVerdict::Pst(Box::new(PstCertificate {
        u,
        v,
        alpha,
        delta: form.delta,
        tau,
        sign_pattern,
        oracle_fidelity,
    }))
}

/// The valuation pattern over `b_0 - b_r`: constant `alpha` at odd support
/// positions, strictly larger at even positions `r >= 2` (vacuous when the
/// support has no even position beyond 0).
fn check_two_adic_conditions(b: &[i64]) -> std::result::Result<u32, NoPstReason> {
    debug_assert!(b.len() >= 2);
    let val = |r: usize| two_adic_valuation(b[0] - b[r]).expect("support eigenvalues distinct");
    let alpha = val(1);
    for r in (3..b.len()).step_by(2) {
        let v = val(r);
        if v != alpha {
            return Err(NoPstReason::OddValuationsDiffer { alpha, position: r, valuation: v });
        }
    }
    for r in (2..b.len()).step_by(2) {
        let v = val(r);
        if v <= alpha {
            return Err(NoPstReason::EvenValuationNotLarger { alpha, position: r, valuation: v });
        }
    }
    Ok(alpha)
}

/// The four global conditions for transfer between every pair at distance
/// `d` in a regular spectrally extremal graph, all evaluated so a report
/// can show every failure, with the first one named.
#[derive(Debug, Clone)]
pub struct GraphPstAnalysis {
    pub integer_spectrum: bool,
    pub alpha: Option<u32>,
    pub odd_condition: Option<bool>,
    pub even_condition: Option<bool>,
    pub identity: IdentityCheck,
    pub admits_pst: bool,
    /// Common transfer time `pi / 2^alpha` when all conditions hold.
    pub tau: Option<f64>,
    pub first_failure: Option<&'static str>,
}

/// Decide transfer between every distance-`d` pair of a connected regular
/// spectrally extremal graph: integer spectrum, the 2-adic pattern on the
/// eigenvalue differences `theta_0 - theta_r`, and the antipodality
/// identity. Precondition violations are named errors.
pub fn pst_decide_graph(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    tol: &Tolerances,
) -> Result<GraphPstAnalysis> {
    if g.is_regular().is_none() {
        return Err(Error::precondition("pst_decide_graph: graph is not regular"));
    }
    if dec.spectrum.len() != dist.diameter() + 1 {
        return Err(Error::precondition(format!(
            "pst_decide_graph: {} distinct eigenvalues for diameter {}, \
             graph is not spectrally extremal",
            dec.spectrum.len(),
            dist.diameter()
        )));
    }

    let identity = antipodality_identity(g, dist, dec, tol)?;
    let mut first_failure: Option<&'static str> = None;
    let note_failure = |name: &'static str, first: &mut Option<&'static str>| {
        if first.is_none() {
            *first = Some(name);
        }
    };

    let integer_spectrum = dec.spectrum.is_exact_integer();
    let (mut alpha, mut odd_condition, mut even_condition) = (None, None, None);
    if let Some(ints) = dec.spectrum.exact_integers() {
        // The pair-level differences are b_0 - b_r = 2 (theta_0 - theta_r),
        // so the valuation pattern transfers to the raw differences.
        let diffs: Vec<i64> = ints.iter().map(|&t| ints[0] - t).collect();
        let val = |r: usize| two_adic_valuation(diffs[r]).unwrap();
        let a = val(1);
        alpha = Some(a);
        let odd_ok = (3..diffs.len()).step_by(2).all(|r| val(r) == a);
        odd_condition = Some(odd_ok);
        let even_ok = (2..diffs.len()).step_by(2).all(|r| val(r) > a);
        even_condition = Some(even_ok);
        if !odd_ok {
            note_failure("odd-position valuations constant", &mut first_failure);
        }
        if !even_ok {
            note_failure("even-position valuation exceeds alpha", &mut first_failure);
        }
    } else {
        note_failure("all eigenvalues are integers", &mut first_failure);
    }
    if !identity.equal {
        note_failure("antipodality identity", &mut first_failure);
    }

    let admits_pst = first_failure.is_none();
    let tau = admits_pst
        .then(|| std::f64::consts::PI / f64::from(2u32.pow(alpha.unwrap())));
    Ok(GraphPstAnalysis {
        integer_spectrum,
        alpha,
        odd_condition,
        even_condition,
        identity,
        admits_pst,
        tau,
        first_failure,
    })
}

/// Given one certificate at maximal distance in a spectrally extremal
/// graph, every distance-`d` pair tying the maximal walk count admits the
/// same transfer at the same time. Returns those pairs (including the
/// certified one), after asserting both the walk-count bound and the oracle
/// fidelity at `tau` for each.
pub fn pst_transfer_along_ties(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    walk: &QuantumWalk,
    cert: &PstCertificate,
    tol: &Tolerances,
) -> Result<Vec<(usize, usize)>> {
    let d = dist.diameter();
    if dec.spectrum.len() != d + 1 {
        return Err(Error::precondition(
            "pst_transfer_along_ties: graph is not spectrally extremal",
        ));
    }
    if dist.distance(cert.u, cert.v) != d {
        return Err(Error::precondition(
            "pst_transfer_along_ties: certificate pair is not at full diameter",
        ));
    }
    let bound = walk_count(g, d, cert.u, cert.v);
    let mut ties = Vec::new();
    for z in 0..g.vertex_count() {
        for w in z + 1..g.vertex_count() {
            if dist.distance(z, w) != d {
                continue;
            }
            let count = walk_count(g, d, z, w);
            if count > bound {
                return Err(Error::Internal(format!(
                    "walk count ({z},{w}) exceeds the certified maximum"
                )));
            }
            if count == bound {
                let fidelity = walk.fidelity(z, w, cert.tau);
                if fidelity < 1.0 - tol.pst_confirm {
                    return Err(Error::Internal(format!(
                        "tied pair ({z},{w}) failed oracle check at tau: fidelity {fidelity}"
                    )));
                }
                ties.push((z, w));
            }
        }
    }
    Ok(ties)
}

// ---------------------------------------------------------------------------
// whole-graph classification

fn ser_opt_sig15<S: serde::Serializer>(
    x: &Option<f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&crate::round_sig15(*v)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueSummary {
    /// Exact integer, or a 15-significant-digit decimal.
    pub value: String,
    pub multiplicity: usize,
    /// Quadratic coefficient `b_r` when the spectrum has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSummary {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    pub eigenvalues: Vec<EigenvalueSummary>,
}

impl SpectrumSummary {
    pub fn new(spectrum: &Spectrum) -> Self {
        let (delta, a) = match &spectrum.kind {
            SpectrumKind::Quadratic { delta, a, .. } => (Some(*delta), Some(*a)),
            _ => (None, None),
        };
        let eigenvalues = (0..spectrum.len())
            .map(|r| EigenvalueSummary {
                value: match &spectrum.kind {
                    SpectrumKind::ExactInteger { values } => values[r].to_string(),
                    _ => crate::fmt_sig15(spectrum.value(r)),
                },
                multiplicity: spectrum.multiplicities[r],
                b: match &spectrum.kind {
                    SpectrumKind::Quadratic { b, .. } => Some(b[r]),
                    _ => None,
                },
            })
            .collect();
        SpectrumSummary { kind: spectrum.kind.name(), delta, a, eigenvalues }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexSummary {
    pub label: String,
    pub eccentricity: usize,
    pub dual_degree: usize,
    pub extremal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScPairSummary {
    pub u: String,
    pub v: String,
    pub sigmas: Vec<i8>,
}

fn ser_opt_sig15_matrix<S: serde::Serializer>(
    x: &Option<Vec<Vec<f64>>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(m) => {
            let rounded: Vec<Vec<f64>> = m
                .iter()
                .map(|row| row.iter().map(|&v| crate::round_sig15(v)).collect())
                .collect();
            s.serialize_some(&rounded)
        }
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AntipodalPairSummary {
    pub u: String,
    pub v: String,
    pub definitional: bool,
    pub spectral: bool,
    pub consistent: bool,
    /// Weighted class-sum parameters of the shared partition, as decimals.
    #[serde(serialize_with = "ser_opt_sig15_matrix", skip_serializing_if = "Option::is_none")]
    pub weighted_parameters: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentitySummary {
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub arithmetic: &'static str,
}

impl IdentitySummary {
    fn new(id: &IdentityCheck) -> Self {
        IdentitySummary {
            lhs: id.lhs.to_string(),
            rhs: id.rhs.to_string(),
            equal: id.equal,
            arithmetic: match id.lhs {
                crate::partition::ExactOrFloat::Exact(_) => "exact",
                crate::partition::ExactOrFloat::Float(_) => "floating",
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PstPairSummary {
    pub u: String,
    pub v: String,
    pub pst: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(serialize_with = "ser_opt_sig15", skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<i8>>,
    #[serde(serialize_with = "ser_opt_sig15", skip_serializing_if = "Option::is_none")]
    pub fidelity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Machine-readable one-shot analysis of a connected graph. Field order is
/// the JSON schema; two runs over the same input serialize identically.
#[derive(Debug, Clone, Serialize)]
pub struct GraphClassification {
    pub n: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<usize>,
    pub diameter: usize,
    pub spectrum: SpectrumSummary,
    pub spectrally_extremal_graph: bool,
    pub vertices: Vec<VertexSummary>,
    pub strongly_cospectral_pairs: Vec<ScPairSummary>,
    pub antipodal_pairs: Vec<AntipodalPairSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipodality_identity: Option<IdentitySummary>,
    pub pst_pairs: Vec<PstPairSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_parameters: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipodal_distance_regular: Option<bool>,
    /// Outcome of the implication "extremal + regular + transfer on a
    /// perfect matching of diameter pairs forces distance-regularity",
    /// present when its hypotheses hold. `false` would be critical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pst_matching_forces_drg: Option<bool>,
}

impl GraphClassification {
    pub fn pst_pair_count(&self) -> usize {
        self.pst_pairs.iter().filter(|p| p.pst).count()
    }

    pub fn antipodal_pair_count(&self) -> usize {
        self.antipodal_pairs.iter().filter(|p| p.definitional && p.spectral).count()
    }
}

/// Classify one connected graph end to end.
pub fn classify_graph(g: &Graph, tol: &Tolerances) -> Result<GraphClassification> {
    let dist = g.distances();
    if !dist.connected() {
        return Err(Error::Disconnected);
    }
    let dec = eigen_decompose(g, tol)?;
    let walk = QuantumWalk::new(&dec);
    let n = g.vertex_count();
    let diameter = dist.diameter();

    let vertices: Vec<VertexSummary> = (0..n)
        .map(|u| {
            let support = eigenvalue_support(u, &dec, tol);
            VertexSummary {
                label: g.label(u),
                eccentricity: dist.eccentricity(u),
                dual_degree: support.dual_degree,
                extremal: dist.eccentricity(u) == support.dual_degree,
            }
        })
        .collect();

    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();

    let sc_scan = exec::map_slice(&pairs, |&(u, v)| are_strongly_cospectral(u, v, &dec, tol));
    let strongly_cospectral_pairs: Vec<ScPairSummary> = pairs
        .iter()
        .zip(&sc_scan)
        .filter_map(|(&(u, v), sp)| {
            sp.as_ref().map(|sp| ScPairSummary {
                u: g.label(u),
                v: g.label(v),
                sigmas: sp.sigmas.clone(),
            })
        })
        .collect();

    let mut antipodal_pairs = Vec::new();
    let mut antipodal_index = Vec::new();
    if n >= 2 {
        let scan = exec::map_slice(&pairs, |&(u, v)| are_antipodal(g, &dist, &dec, u, v, tol));
        for (&(u, v), ev) in pairs.iter().zip(scan) {
            let ev = ev?;
            if ev.definitional || ev.spectral {
                antipodal_pairs.push(AntipodalPairSummary {
                    u: g.label(u),
                    v: g.label(v),
                    definitional: ev.definitional,
                    spectral: ev.spectral,
                    consistent: ev.consistent(),
                    weighted_parameters: ev.weighted_parameters.clone(),
                });
                if ev.antipodal() {
                    antipodal_index.push((u, v));
                }
            }
        }
    }

    let identity = match antipodality_identity(g, &dist, &dec, tol) {
        Ok(id) => Some(IdentitySummary::new(&id)),
        Err(Error::Precondition(_)) | Err(Error::TrivialGraph(_)) => None,
        Err(e) => return Err(e),
    };

    // Transfer verdicts for the pairs the decision criterion covers: one
    // endpoint extremal with the other at its maximal distance.
    let eligible: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter_map(|(u, v)| {
            let fwd = is_spectrally_extremal(u, &dec, &dist, tol)
                && dist.distance(u, v) == dist.eccentricity(u);
            if fwd {
                return Some((u, v));
            }
            let bwd = is_spectrally_extremal(v, &dec, &dist, tol)
                && dist.distance(u, v) == dist.eccentricity(v);
            bwd.then_some((v, u))
        })
        .collect();
    let verdicts = exec::map_slice(&eligible, |&(u, v)| {
        pst_decide_pair(g, &dist, &dec, &walk, u, v, tol)
    });
    let pst_pairs: Vec<PstPairSummary> = eligible
        .iter()
        .zip(&verdicts)
        .map(|(&(u, v), verdict)| match verdict {
            PairVerdict::Pst(c) => PstPairSummary {
                u: g.label(u),
                v: g.label(v),
                pst: true,
                alpha: Some(c.alpha),
                delta: Some(c.delta),
                tau: Some(c.tau),
                sigma: Some(c.sign_pattern.sigmas.clone()),
                fidelity: Some(c.oracle_fidelity),
                reason: None,
            },
            PairVerdict::NoPst(reason) => PstPairSummary {
                u: g.label(u),
                v: g.label(v),
                pst: false,
                alpha: None,
                delta: None,
                tau: None,
                sigma: None,
                fidelity: None,
                reason: Some(reason.to_string()),
            },
        })
        .collect();

    let (distance_regular, intersection_parameters, antipodal_distance_regular) = if n >= 2 {
        let drg = is_distance_regular(g, &dist)?;
        let antip = if drg.distance_regular {
            Some(is_antipodal_drg(g, &dist, &drg)?)
        } else {
            None
        };
        (Some(drg.distance_regular), drg.parameters, antip)
    } else {
        (None, None, None)
    };

    // Perfect matching of certified diameter pairs on a regular extremal
    // graph forces distance-regularity; record the assertion when armed.
    let pst_matching_forces_drg = {
        let extremal_graph = dec.spectrum.len() == diameter + 1;
        let certified: Vec<(usize, usize)> = eligible
            .iter()
            .zip(&verdicts)
            .filter(|(&(u, v), verdict)| {
                verdict.is_pst() && dist.distance(u, v) == diameter
            })
            .map(|(&(u, v), _)| (u, v))
            .collect();
        let mut covered = vec![0usize; n];
        for &(u, v) in &certified {
            covered[u] += 1;
            covered[v] += 1;
        }
        let perfect_matching = n >= 2 && covered.iter().all(|&c| c == 1);
        if extremal_graph && g.is_regular().is_some() && perfect_matching {
            Some(distance_regular == Some(true))
        } else {
            None
        }
    };

    Ok(GraphClassification {
        n,
        edges: g.edge_count(),
        regular: g.is_regular(),
        diameter,
        spectrum: SpectrumSummary::new(&dec.spectrum),
        spectrally_extremal_graph: dec.spectrum.len() == diameter + 1,
        vertices,
        strongly_cospectral_pairs,
        antipodal_pairs,
        antipodality_identity: identity,
        pst_pairs,
        distance_regular,
        intersection_parameters,
        antipodal_distance_regular,
        pst_matching_forces_drg,
    })
}

/// Classify a batch of graphs, fanning out across graphs with the
/// `parallel` feature.
pub fn classify_batch(graphs: &[Graph], tol: &Tolerances) -> Vec<Result<GraphClassification>> {
    exec::map_slice(graphs, |g| classify_graph(g, tol))
}

/// Sequential reference for [`classify_batch`]; identical results.
pub fn classify_batch_seq(
    graphs: &[Graph],
    tol: &Tolerances,
) -> Vec<Result<GraphClassification>> {
    graphs.iter().map(|g| classify_graph(g, tol)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use std::f64::consts::PI;

    fn context(g: &Graph) -> (DistanceInfo, Decomposition, QuantumWalk, Tolerances) {
        let tol = Tolerances::default();
        let dist = g.distances();
        let dec = eigen_decompose(g, &tol).unwrap();
        let walk = QuantumWalk::new(&dec);
        (dist, dec, walk, tol)
    }

    #[test]
    fn valuations() {
        assert_eq!(two_adic_valuation(12).unwrap(), 2);
        assert_eq!(two_adic_valuation(5).unwrap(), 0);
        assert_eq!(two_adic_valuation(-8).unwrap(), 3);
        assert!(matches!(two_adic_valuation(0), Err(Error::ZeroValuation)));
    }

    #[test]
    fn support_forms() {
        // Integer spectrum: b-differences are twice the eigenvalue gaps.
        let g = families::hypercube(3);
        let (_, dec, _, tol) = context(&g);
        let support = eigenvalue_support(0, &dec, &tol).support;
        let form = quadratic_form_of_support(&support, &dec.spectrum).unwrap();
        assert_eq!(form.delta, 1);
        let diffs: Vec<i64> = form.b.iter().map(|&b| form.b[0] - b).collect();
        assert_eq!(diffs, vec![0, 4, 8, 12]);

        // Quadratic spectrum restricted to an end vertex of the path.
        let p3 = families::path(3);
        let (_, dec, _, tol) = context(&p3);
        let support = eigenvalue_support(0, &dec, &tol).support;
        let form = quadratic_form_of_support(&support, &dec.spectrum).unwrap();
        assert_eq!(form, QuadraticSupportForm { delta: 2, a: 0, b: vec![2, 0, -2] });

        // Floating spectrum has no form.
        let p4 = families::path(4);
        let (_, dec, _, tol) = context(&p4);
        let support = eigenvalue_support(0, &dec, &tol).support;
        assert!(quadratic_form_of_support(&support, &dec.spectrum).is_none());
    }

    #[test]
    fn k2_pair_certificate() {
        let g = families::complete(2);
        let (dist, dec, walk, tol) = context(&g);
        let verdict = pst_decide_pair(&g, &dist, &dec, &walk, 0, 1, &tol);
        let cert = verdict.certificate().expect("K2 admits transfer");
        assert_eq!(cert.alpha, 2);
        assert_eq!(cert.delta, 1);
        assert!((cert.tau - PI / 2.0).abs() < 1e-15);
        assert!(cert.oracle_fidelity >= 1.0 - 1e-12);
    }

    #[test]
    fn path3_pair_certificate() {
        let g = families::path(3);
        let (dist, dec, walk, tol) = context(&g);
        let verdict = pst_decide_pair(&g, &dist, &dec, &walk, 0, 2, &tol);
        let cert = verdict.certificate().expect("P3 ends admit transfer");
        assert_eq!((cert.alpha, cert.delta), (1, 2));
        assert!((cert.tau - PI / 2f64.sqrt()).abs() < 1e-15);
        assert!(cert.oracle_fidelity >= 1.0 - 1e-9);
        assert_eq!(cert.sign_pattern.sigmas, vec![1, -1, 1]);
    }

    #[test]
    fn petersen_pair_is_not_antipodal() {
        let g = families::petersen();
        let (dist, dec, walk, tol) = context(&g);
        let v = dist.sphere(0, 2)[0];
        let verdict = pst_decide_pair(&g, &dist, &dec, &walk, 0, v, &tol);
        assert!(matches!(verdict, PairVerdict::NoPst(NoPstReason::NotAntipodal(_))));
        assert!(verdict.hypotheses_met());
    }

    #[test]
    fn path4_ends_fail_on_eigenvalue_form() {
        let g = families::path(4);
        let (dist, dec, walk, tol) = context(&g);
        let verdict = pst_decide_pair(&g, &dist, &dec, &walk, 0, 3, &tol);
        assert!(matches!(
            verdict,
            PairVerdict::NoPst(NoPstReason::UnsupportedEigenvalueForm)
        ));
    }

    #[test]
    fn trivial_and_hypothesis_reasons() {
        let g = families::paw();
        let (dist, dec, walk, tol) = context(&g);
        assert!(matches!(
            pst_decide_pair(&g, &dist, &dec, &walk, 1, 1, &tol),
            PairVerdict::NoPst(NoPstReason::TrivialPair)
        ));
        // Vertex 2 is not extremal.
        let v = pst_decide_pair(&g, &dist, &dec, &walk, 2, 0, &tol);
        assert!(matches!(v, PairVerdict::NoPst(NoPstReason::HypothesisNotExtremal)));
        assert!(!v.hypotheses_met());
        // Pendant is extremal but vertex 1 is adjacent, not at distance 2.
        assert!(matches!(
            pst_decide_pair(&g, &dist, &dec, &walk, 0, 1, &tol),
            PairVerdict::NoPst(NoPstReason::HypothesisNotMaxDistance)
        ));
    }

    #[test]
    fn cube_graph_analysis_passes() {
        let g = families::hypercube(3);
        let (dist, dec, _, tol) = context(&g);
        let a = pst_decide_graph(&g, &dist, &dec, &tol).unwrap();
        assert!(a.integer_spectrum);
        assert_eq!(a.alpha, Some(1));
        assert_eq!((a.odd_condition, a.even_condition), (Some(true), Some(true)));
        assert!(a.identity.equal);
        assert!(a.admits_pst);
        assert!((a.tau.unwrap() - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn c4_graph_analysis_passes() {
        let g = families::cycle(4);
        let (dist, dec, _, tol) = context(&g);
        let a = pst_decide_graph(&g, &dist, &dec, &tol).unwrap();
        assert!(a.admits_pst);
        assert_eq!(a.alpha, Some(1));
        assert!((a.tau.unwrap() - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn petersen_graph_analysis_fails_at_even_condition() {
        let g = families::petersen();
        let (dist, dec, _, tol) = context(&g);
        let a = pst_decide_graph(&g, &dist, &dec, &tol).unwrap();
        assert!(a.integer_spectrum);
        assert_eq!(a.alpha, Some(1));
        assert_eq!(a.even_condition, Some(false)); // v2(5) = 0
        assert!(!a.identity.equal);
        assert!(!a.admits_pst);
        assert_eq!(a.first_failure, Some("even-position valuation exceeds alpha"));
    }

    #[test]
    fn graph_analysis_preconditions() {
        let paw = families::paw();
        let (dist, dec, _, tol) = context(&paw);
        assert!(matches!(
            pst_decide_graph(&paw, &dist, &dec, &tol),
            Err(Error::Precondition(_))
        ));
        let prism = families::prism();
        let (dist, dec, _, tol) = context(&prism);
        assert!(matches!(
            pst_decide_graph(&prism, &dist, &dec, &tol),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ties_propagate_transfer() {
        let g = families::hypercube(3);
        let (dist, dec, walk, tol) = context(&g);
        let cert = pst_decide_pair(&g, &dist, &dec, &walk, 0, 7, &tol)
            .certificate()
            .unwrap()
            .clone();
        let ties = pst_transfer_along_ties(&g, &dist, &dec, &walk, &cert, &tol).unwrap();
        assert_eq!(ties, vec![(0, 7), (1, 6), (2, 5), (3, 4)]);

        let c4 = families::cycle(4);
        let (dist, dec, walk, tol) = context(&c4);
        let cert = pst_decide_pair(&c4, &dist, &dec, &walk, 0, 2, &tol)
            .certificate()
            .unwrap()
            .clone();
        let ties = pst_transfer_along_ties(&c4, &dist, &dec, &walk, &cert, &tol).unwrap();
        assert_eq!(ties, vec![(0, 2), (1, 3)]);

        let k2 = families::complete(2);
        let (dist, dec, walk, tol) = context(&k2);
        let cert = pst_decide_pair(&k2, &dist, &dec, &walk, 0, 1, &tol)
            .certificate()
            .unwrap()
            .clone();
        let ties = pst_transfer_along_ties(&k2, &dist, &dec, &walk, &cert, &tol).unwrap();
        assert_eq!(ties, vec![(0, 1)]);
    }

    #[test]
    fn classify_cube() {
        let g = families::hypercube(3);
        let c = classify_graph(&g, &Tolerances::default()).unwrap();
        assert!(c.spectrally_extremal_graph);
        assert_eq!(c.pst_pair_count(), 4);
        assert_eq!(c.antipodal_pair_count(), 4);
        assert_eq!(c.distance_regular, Some(true));
        assert_eq!(c.antipodal_distance_regular, Some(true));
        assert_eq!(c.pst_matching_forces_drg, Some(true));
        assert!(c.vertices.iter().all(|v| v.extremal));
        assert!(c.antipodality_identity.unwrap().equal);
    }

    #[test]
    fn classify_petersen() {
        let g = families::petersen();
        let c = classify_graph(&g, &Tolerances::default()).unwrap();
        assert!(c.spectrally_extremal_graph);
        assert_eq!(c.strongly_cospectral_pairs.len(), 0);
        assert_eq!(c.antipodal_pair_count(), 0);
        assert_eq!(c.pst_pair_count(), 0);
        assert_eq!(c.distance_regular, Some(true));
        assert_eq!(c.antipodal_distance_regular, Some(false));
        assert_eq!(c.pst_matching_forces_drg, None);
        assert!(!c.antipodality_identity.unwrap().equal);
    }

    #[test]
    fn classify_path4() {
        // Both the ends and the interior pair are strongly cospectral (the
        // flip automorphism with simple eigenvalues forces it), but only
        // the ends are antipodal.
        let g = families::path(4);
        let c = classify_graph(&g, &Tolerances::default()).unwrap();
        assert_eq!(c.strongly_cospectral_pairs.len(), 2);
        assert_eq!(c.antipodal_pair_count(), 1);
        assert_eq!(c.pst_pair_count(), 0);
        let end_pair = c.pst_pairs.iter().find(|p| p.u == "0" && p.v == "3").unwrap();
        assert!(end_pair.reason.as_ref().unwrap().contains("no integer or quadratic form"));
    }

    #[test]
    fn classify_single_vertex() {
        let g = families::path(1);
        let c = classify_graph(&g, &Tolerances::default()).unwrap();
        assert_eq!(c.n, 1);
        assert!(c.vertices[0].extremal);
        assert!(c.pst_pairs.is_empty());
        assert_eq!(c.distance_regular, None);
    }

    #[test]
    fn batch_matches_sequential() {
        let graphs = vec![
            families::complete(2),
            families::path(3),
            families::cycle(4),
            families::paw(),
        ];
        let tol = Tolerances::default();
        let par = classify_batch(&graphs, &tol);
        let seq = classify_batch_seq(&graphs, &tol);
        for (a, b) in par.iter().zip(&seq) {
            let a = serde_json::to_string(a.as_ref().unwrap()).unwrap();
            let b = serde_json::to_string(b.as_ref().unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn representation_independence_of_b_differences() {
        // Shifting a in the delta = 1 form leaves differences, alpha, and
        // the derived time unchanged.
        let b_with_a0: Vec<i64> = vec![6, 2, -2, -6];
        let b_with_a4: Vec<i64> = b_with_a0.iter().map(|x| x - 4).collect();
        let alpha0 = check_two_adic_conditions(&b_with_a0).unwrap();
        let alpha4 = check_two_adic_conditions(&b_with_a4).unwrap();
        assert_eq!(alpha0, alpha4);
    }
}
