//! Distance partitions, (pseudo-)equitable checks, antipodal vertex pairs,
//! the spectral identity that certifies antipodality at full distance, and
//! distance-regularity.

use num::rational::BigRational;
use num::{BigInt, ToPrimitive};

use crate::cospectral::{
    are_cospectral, are_strongly_cospectral, is_spectrally_extremal, SignPattern,
};
use crate::graph::{DistanceInfo, Graph};
use crate::spectral::Decomposition;
use crate::{Error, Result, Tolerances};

/// Ordered vertex partition; classes are disjoint, non-empty, and cover V.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub origin: PartitionOrigin,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionOrigin {
    DistanceFrom(usize),
    UserSupplied,
}

impl Partition {
    /// Map from vertex to class index.
    fn class_of(&self, n: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; n];
        for (ci, class) in self.classes.iter().enumerate() {
            for &v in class {
                map[v] = ci;
            }
        }
        debug_assert!(map.iter().all(|&c| c != usize::MAX));
        map
    }
}

/// Verdict of an equitability check: parameters when equitable, a witness
/// (vertex, class, expected, actual) otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct EquitableResult<T> {
    pub parameters: Option<Vec<Vec<T>>>,
    pub witness: Option<EquitableWitness<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquitableWitness<T> {
    pub vertex: usize,
    pub class: usize,
    pub expected: T,
    pub actual: T,
}

impl<T> EquitableResult<T> {
    pub fn is_equitable(&self) -> bool {
        self.parameters.is_some()
    }
}

fn reject_trivial(g: &Graph, dist: &DistanceInfo) -> Result<()> {
    if !dist.connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() < 2 {
        return Err(Error::TrivialGraph(g.vertex_count()));
    }
    Ok(())
}

/// Classes of vertices at distance 0, 1, ..., ecc(u) from `u`.
pub fn distance_partition(g: &Graph, dist: &DistanceInfo, u: usize) -> Result<Partition> {
    reject_trivial(g, dist)?;
    let classes = (0..=dist.eccentricity(u)).map(|d| dist.sphere(u, d)).collect();
    Ok(Partition { classes, origin: PartitionOrigin::DistanceFrom(u) })
}

/// Exact integer equitability: the number of neighbours a vertex has in
/// each class depends only on the vertex's own class.
pub fn is_equitable(g: &Graph, part: &Partition) -> EquitableResult<u64> {
    let n = g.vertex_count();
    let class_of = part.class_of(n);
    let k = part.classes.len();
    let mut parameters = vec![vec![0u64; k]; k];
    for (ci, class) in part.classes.iter().enumerate() {
        for (pos, &v) in class.iter().enumerate() {
            let mut counts = vec![0u64; k];
            for w in g.neighbors(v) {
                counts[class_of[w]] += 1;
            }
            if pos == 0 {
                parameters[ci] = counts;
            } else if counts != parameters[ci] {
                let cj = (0..k).find(|&j| counts[j] != parameters[ci][j]).unwrap();
                return EquitableResult {
                    parameters: None,
                    witness: Some(EquitableWitness {
                        vertex: v,
                        class: cj,
                        expected: parameters[ci][cj],
                        actual: counts[cj],
                    }),
                };
            }
        }
    }
    EquitableResult { parameters: Some(parameters), witness: None }
}

/// Entrywise-positive unit Perron eigenvector.
#[derive(Debug, Clone)]
pub struct PerronWeights {
    pub nu: Vec<f64>,
}

/// Extract the Perron vector from the leading idempotent: `E_0 = nu nu^T`
/// for a connected graph, so any nonzero column is proportional to `nu`.
pub fn perron_weights(g: &Graph, dec: &Decomposition, tol: &Tolerances) -> Result<PerronWeights> {
    let n = g.vertex_count();
    let best = (0..n)
        .max_by(|&a, &b| {
            dec.projectors
                .entry_f64(0, a, a)
                .partial_cmp(&dec.projectors.entry_f64(0, b, b))
                .unwrap()
        })
        .unwrap();
    let col = dec.projectors.column_f64(0, best);
    let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
    let sign = if col[best] < 0.0 { -1.0 } else { 1.0 };
    let nu: Vec<f64> = col.iter().map(|x| sign * x / norm).collect();
    if nu.iter().any(|&x| x <= 0.0) {
        return Err(Error::Internal(
            "Perron vector of a connected graph must be entrywise positive".into(),
        ));
    }
    // A nu = theta_0 nu, up to the floating error of the decomposition.
    let theta0 = dec.spectrum.value(0);
    let anu = g.adjacency_f64().matvec(&nu);
    let residual = anu
        .iter()
        .zip(&nu)
        .map(|(a, x)| (a - theta0 * x).abs())
        .fold(0.0, f64::max);
    if residual > tol.pseudo_equitable {
        return Err(Error::Internal(format!(
            "Perron residual {residual:e} above tolerance"
        )));
    }
    Ok(PerronWeights { nu })
}

/// Equitability of the weighted graph `D^-1 A D` with `D = diag(nu)`: the
/// weight sums `sum_{w in C} nu_w / nu_v` from `v` into each class depend
/// only on the class of `v`. For regular graphs this coincides with plain
/// equitability.
pub fn is_pseudo_equitable(
    g: &Graph,
    part: &Partition,
    weights: &PerronWeights,
    tol: &Tolerances,
) -> EquitableResult<f64> {
    let n = g.vertex_count();
    let class_of = part.class_of(n);
    let k = part.classes.len();
    let nu = &weights.nu;
    let mut parameters = vec![vec![0f64; k]; k];
    for (ci, class) in part.classes.iter().enumerate() {
        for (pos, &v) in class.iter().enumerate() {
            let mut sums = vec![0f64; k];
            for w in g.neighbors(v) {
                sums[class_of[w]] += nu[w] / nu[v];
            }
            if pos == 0 {
                parameters[ci] = sums;
            } else if let Some(cj) =
                (0..k).find(|&j| (sums[j] - parameters[ci][j]).abs() > tol.pseudo_equitable)
            {
                return EquitableResult {
                    parameters: None,
                    witness: Some(EquitableWitness {
                        vertex: v,
                        class: cj,
                        expected: parameters[ci][cj],
                        actual: sums[cj],
                    }),
                };
            }
        }
    }
    EquitableResult { parameters: Some(parameters), witness: None }
}

/// Both antipodality tests, reported side by side. They are equivalent for
/// conforming graphs, so any disagreement is a critical failure the census
/// checks watch for.
#[derive(Debug, Clone)]
pub struct AntipodalEvidence {
    /// Shared pseudo-equitable distance partition with `{u}`, `{v}`
    /// singletons at maximal distance, plus cospectrality.
    pub definitional: bool,
    pub definitional_failure: Option<String>,
    /// Weighted class-sum parameters of the shared partition, present when
    /// the definitional test passed.
    pub weighted_parameters: Option<Vec<Vec<f64>>>,
    /// Strong cospectrality of extremal vertices with alternating signs
    /// over the support.
    pub spectral: bool,
    pub sign_pattern: Option<SignPattern>,
}

impl AntipodalEvidence {
    pub fn antipodal(&self) -> bool {
        self.definitional && self.spectral
    }

    pub fn consistent(&self) -> bool {
        self.definitional == self.spectral
    }
}

/// Decide whether `u, v` are an antipodal pair, by the partition definition
/// and by the alternating-sign criterion, independently.
pub fn are_antipodal(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    u: usize,
    v: usize,
    tol: &Tolerances,
) -> Result<AntipodalEvidence> {
    reject_trivial(g, dist)?;

    // Alternating signs pin the transfer polynomial to full support degree
    // d*, and d* is the distance only for extremal vertices; the interior
    // pair of a 4-path alternates without being antipodal. The spectral
    // test therefore carries the extremality qualifier.
    let spectral_pattern = are_strongly_cospectral(u, v, dec, tol);
    let spectral = spectral_pattern.as_ref().is_some_and(|sp| sp.alternating())
        && is_spectrally_extremal(u, dec, dist, tol)
        && is_spectrally_extremal(v, dec, dist, tol);

    let definitional = definitional_antipodal_check(g, dist, dec, u, v, tol)?;
    let (definitional_failure, weighted_parameters) = match definitional {
        Ok(params) => (None, Some(params)),
        Err(why) => (Some(why), None),
    };
    Ok(AntipodalEvidence {
        definitional: definitional_failure.is_none(),
        definitional_failure,
        weighted_parameters,
        spectral,
        sign_pattern: spectral_pattern,
    })
}

/// Weighted parameters of the shared partition on success, otherwise the
/// first failing requirement.
fn definitional_antipodal_check(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    u: usize,
    v: usize,
    tol: &Tolerances,
) -> Result<std::result::Result<Vec<Vec<f64>>, String>> {
    if u == v {
        return Ok(Err("trivial pair".into()));
    }
    let m = dist.distance(u, v);
    if dist.eccentricity(u) != m || dist.eccentricity(v) != m {
        return Ok(Err(format!(
            "distance {m} differs from eccentricities ({}, {})",
            dist.eccentricity(u),
            dist.eccentricity(v)
        )));
    }
    let dp_u = distance_partition(g, dist, u)?;
    let dp_v = distance_partition(g, dist, v)?;
    if dp_u.classes[m].len() != 1 || dp_v.classes[m].len() != 1 {
        return Ok(Err(format!(
            "{} vertices at maximal distance from u, singleton required",
            dp_u.classes[m].len()
        )));
    }
    // One shared partition: class i from u must be class m - i from v.
    if dp_u.classes.len() != dp_v.classes.len()
        || (0..=m).any(|i| dp_u.classes[i] != dp_v.classes[m - i])
    {
        return Ok(Err(
            "distance partitions of u and v differ as set partitions".into(),
        ));
    }
    let weights = perron_weights(g, dec, tol)?;
    let eq = is_pseudo_equitable(g, &dp_u, &weights, tol);
    if let Some(w) = eq.witness {
        return Ok(Err(format!(
            "distance partition is not pseudo-equitable (vertex {} into class {})",
            w.vertex, w.class
        )));
    }
    if !are_cospectral(u, v, dec, tol) {
        return Ok(Err("u and v are not cospectral".into()));
    }
    Ok(Ok(eq.parameters.expect("equitable result carries parameters")))
}

/// Exact rational or floating scalar, kept apart so reports can show `1/6`
/// rather than a decimal when the arithmetic was exact.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactOrFloat {
    Exact(BigRational),
    Float(f64),
}

impl ExactOrFloat {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactOrFloat::Exact(r) => r.to_f64().unwrap(),
            ExactOrFloat::Float(x) => *x,
        }
    }
}

impl std::fmt::Display for ExactOrFloat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactOrFloat::Exact(r) => write!(f, "{r}"),
            ExactOrFloat::Float(x) => write!(f, "{}", crate::fmt_sig15(*x)),
        }
    }
}

/// Both sides of the antipodality identity for regular spectrally extremal
/// graphs: `n prod_{s>=1} 1/(theta_0 - theta_s)` against the alternating
/// sum `sum_r (-1)^r prod_{s != r} 1/(theta_r - theta_s)`. Equality holds
/// exactly when every pair at distance `d` is antipodal.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub lhs: ExactOrFloat,
    pub rhs: ExactOrFloat,
    pub equal: bool,
}

pub fn antipodality_identity(
    g: &Graph,
    dist: &DistanceInfo,
    dec: &Decomposition,
    tol: &Tolerances,
) -> Result<IdentityCheck> {
    reject_trivial(g, dist)?;
    if g.is_regular().is_none() {
        return Err(Error::precondition("antipodality_identity: graph is not regular"));
    }
    let d = dist.diameter();
    if dec.spectrum.len() != d + 1 {
        return Err(Error::precondition(format!(
            "antipodality_identity: {} distinct eigenvalues for diameter {d}, \
             graph is not spectrally extremal",
            dec.spectrum.len()
        )));
    }

    if let Some(ints) = dec.spectrum.exact_integers() {
        let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut lhs = rat(g.vertex_count() as i64);
        for s in 1..ints.len() {
            lhs /= rat(ints[0] - ints[s]);
        }
        let mut rhs = rat(0);
        for r in 0..ints.len() {
            let mut term = rat(if r % 2 == 0 { 1 } else { -1 });
            for s in 0..ints.len() {
                if s != r {
                    term /= rat(ints[r] - ints[s]);
                }
            }
            rhs += term;
        }
        let equal = lhs == rhs;
        Ok(IdentityCheck {
            lhs: ExactOrFloat::Exact(lhs),
            rhs: ExactOrFloat::Exact(rhs),
            equal,
        })
    } else {
        let vals = &dec.spectrum.values;
        let mut lhs = g.vertex_count() as f64;
        for s in 1..vals.len() {
            lhs /= vals[0] - vals[s];
        }
        let mut rhs = 0.0;
        for r in 0..vals.len() {
            let mut term = if r % 2 == 0 { 1.0 } else { -1.0 };
            for s in 0..vals.len() {
                if s != r {
                    term /= vals[r] - vals[s];
                }
            }
            rhs += term;
        }
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        let equal = (lhs - rhs).abs() <= 100.0 * tol.base * scale;
        Ok(IdentityCheck {
            lhs: ExactOrFloat::Float(lhs),
            rhs: ExactOrFloat::Float(rhs),
            equal,
        })
    }
}

/// Distance-regularity verdict with the common intersection parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct DrgStatus {
    pub distance_regular: bool,
    pub parameters: Option<Vec<Vec<u64>>>,
}

/// A connected regular graph whose every distance partition is equitable is
/// distance-regular; the parameters then cannot depend on the vertex, and
/// that coincidence is still asserted rather than assumed.
pub fn is_distance_regular(g: &Graph, dist: &DistanceInfo) -> Result<DrgStatus> {
    reject_trivial(g, dist)?;
    if g.is_regular().is_none() {
        return Ok(DrgStatus { distance_regular: false, parameters: None });
    }
    let mut common: Option<Vec<Vec<u64>>> = None;
    for u in 0..g.vertex_count() {
        let part = distance_partition(g, dist, u)?;
        let eq = is_equitable(g, &part);
        let Some(params) = eq.parameters else {
            return Ok(DrgStatus { distance_regular: false, parameters: None });
        };
        match &common {
            None => common = Some(params),
            Some(c) if *c == params => {}
            Some(_) => {
                return Err(Error::Internal(
                    "regular graph with all distance partitions equitable \
                     produced vertex-dependent parameters"
                        .into(),
                ));
            }
        }
    }
    Ok(DrgStatus { distance_regular: true, parameters: common })
}

/// For a distance-regular graph: is the relation "at distance 0 or d" an
/// equivalence? Checked by brute-force transitivity over the fibres.
pub fn is_antipodal_drg(g: &Graph, dist: &DistanceInfo, drg: &DrgStatus) -> Result<bool> {
    if !drg.distance_regular {
        return Err(Error::precondition("is_antipodal_drg: graph is not distance-regular"));
    }
    let d = dist.diameter();
    let fibre = |u: usize| -> Vec<usize> {
        let mut f = dist.sphere(u, d);
        f.push(u);
        f.sort_unstable();
        f
    };
    for u in 0..g.vertex_count() {
        let fu = fibre(u);
        for &v in &fu {
            if fibre(v) != fu {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
