use serde::Serialize;

/// Every numeric threshold used by the analyses, surfaced so reports can
/// record exactly what a verdict was checked against.
///
/// `base` is the user-facing tolerance (CLI `--tol`, default `1e-9`): it is
/// the eigenvalue cluster-merge width and the entrywise bound for floating
/// identity checks. The remaining fields are fixed companions: snapping a
/// cluster center to a nearby integer is generous (`1e-6`) because the snap
/// is only accepted after an exact root verification, support membership
/// leaves one safety decade above observed projector residuals, and the two
/// transfer thresholds are deliberately hysteretic: confirmation demands
/// more than refutation so neither hinges on the other.
#[derive(Debug, Clone, Serialize)]
pub struct Tolerances {
    /// Cluster-merge width and floating comparison tolerance.
    pub base: f64,
    /// Distance at which a cluster center snaps to an integer candidate.
    pub integer_snap: f64,
    /// Floating support membership: `||E_r e_u|| > support` keeps index r.
    pub support: f64,
    /// Allowed spread of weighted neighbour sums in pseudo-equitable checks.
    pub pseudo_equitable: f64,
    /// Norm drift allowed for `||U(t) e_u|| = 1`.
    pub unitarity: f64,
    /// Transfer is confirmed at fidelity `>= 1 - pst_confirm`.
    pub pst_confirm: f64,
    /// Transfer is refuted only if a refined search stays below
    /// `1 - pst_refute`.
    pub pst_refute: f64,
    /// Horizon of the refutation search.
    pub refutation_t_max: f64,
}

impl Tolerances {
    pub fn with_base(base: f64) -> Self {
        Tolerances {
            base,
            integer_snap: 1e-6,
            support: 1e-8,
            pseudo_equitable: 1e-7,
            unitarity: 1e-10,
            pst_confirm: 1e-9,
            pst_refute: 1e-6,
            refutation_t_max: 20.0 * std::f64::consts::PI,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::with_base(1e-9)
    }
}
