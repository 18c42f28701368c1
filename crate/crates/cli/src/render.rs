//! Human-readable table renderings of the machine reports. Every number
//! shown here also appears in the JSON output.

use pstlab_core::pst::GraphClassification;

fn sigma_string(sigmas: &[i8]) -> String {
    sigmas
        .iter()
        .map(|&s| if s > 0 { '+' } else { '-' })
        .collect()
}

pub fn classification_table(c: &GraphClassification) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    let regular = match c.regular {
        Some(k) => format!("regular (k={k})"),
        None => "not regular".into(),
    };
    line(format!(
        "graph: n={} edges={} {} diameter={}",
        c.n, c.edges, regular, c.diameter
    ));

    let eigs: Vec<String> = c
        .spectrum
        .eigenvalues
        .iter()
        .map(|e| format!("{} (x{})", e.value, e.multiplicity))
        .collect();
    let field = match (c.spectrum.delta, c.spectrum.a) {
        (Some(d), Some(a)) => format!(" [theta = (a + b sqrt({d}))/2, a = {a}]"),
        _ => String::new(),
    };
    line(format!("spectrum [{}]{}: {}", c.spectrum.kind, field, eigs.join(", ")));
    line(format!(
        "spectrally extremal graph: {}",
        if c.spectrally_extremal_graph { "yes" } else { "no" }
    ));

    line("vertex   ecc  d*  extremal".into());
    for v in &c.vertices {
        line(format!(
            "{:<8} {:<4} {:<3} {}",
            v.label,
            v.eccentricity,
            v.dual_degree,
            if v.extremal { "yes" } else { "no" }
        ));
    }

    if c.strongly_cospectral_pairs.is_empty() {
        line("strongly cospectral pairs: none".into());
    } else {
        line("strongly cospectral pairs:".into());
        for p in &c.strongly_cospectral_pairs {
            line(format!("  ({}, {})  sigma = {}", p.u, p.v, sigma_string(&p.sigmas)));
        }
    }

    let antipodal: Vec<String> = c
        .antipodal_pairs
        .iter()
        .filter(|p| p.definitional && p.spectral)
        .map(|p| format!("({}, {})", p.u, p.v))
        .collect();
    line(format!(
        "antipodal pairs: {}",
        if antipodal.is_empty() { "none".into() } else { antipodal.join(", ") }
    ));

    if let Some(id) = &c.antipodality_identity {
        line(format!(
            "antipodality identity [{}]: lhs = {} rhs = {} => {}",
            id.arithmetic,
            id.lhs,
            id.rhs,
            if id.equal { "equal" } else { "not equal" }
        ));
    }

    if c.pst_pairs.is_empty() {
        line("perfect state transfer: no eligible pairs".into());
    } else {
        line("perfect state transfer:".into());
        for p in &c.pst_pairs {
            if p.pst {
                line(format!(
                    "  ({}, {})  PST  tau = {}  alpha = {}  delta = {}  fidelity = {}",
                    p.u,
                    p.v,
                    pstlab_core::fmt_sig15(p.tau.unwrap()),
                    p.alpha.unwrap(),
                    p.delta.unwrap(),
                    pstlab_core::fmt_sig15(p.fidelity.unwrap()),
                ));
            } else {
                line(format!(
                    "  ({}, {})  no PST: {}",
                    p.u,
                    p.v,
                    p.reason.as_deref().unwrap_or("")
                ));
            }
        }
    }

    match (c.distance_regular, c.antipodal_distance_regular) {
        (Some(true), Some(antip)) => line(format!(
            "distance-regular: yes (antipodal: {})",
            if antip { "yes" } else { "no" }
        )),
        (Some(false), _) => line("distance-regular: no".into()),
        _ => {}
    }
    if let Some(ok) = c.pst_matching_forces_drg {
        line(format!(
            "transfer matching forces distance-regularity: {}",
            if ok { "confirmed" } else { "VIOLATED" }
        ));
    }
    out
}

/// One row of the census scan table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanRow {
    pub line: usize,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strongly_cospectral: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipodal: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pst: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_consistent: Option<bool>,
}

pub fn scan_table(rows: &[ScanRow], oracle: bool) -> String {
    let yn = |b: Option<bool>| match b {
        Some(true) => "yes".to_string(),
        Some(false) => "no".to_string(),
        None => "-".to_string(),
    };
    let num = |n: Option<usize>| n.map_or("-".to_string(), |x| x.to_string());
    let mut out = String::new();
    out.push_str("line  graph           n   kind           extremal  sc  antip  pst  drg  identity");
    if oracle {
        out.push_str("  oracle");
    }
    out.push('\n');
    for r in rows {
        if let Some(err) = &r.error {
            out.push_str(&format!("{:<5} {:<15} ERROR: {err}\n", r.line, r.input));
            continue;
        }
        out.push_str(&format!(
            "{:<5} {:<15} {:<3} {:<14} {:<9} {:<3} {:<6} {:<4} {:<4} {:<8}",
            r.line,
            r.input,
            num(r.n),
            r.kind.as_deref().unwrap_or("-"),
            yn(r.extremal),
            num(r.strongly_cospectral),
            num(r.antipodal),
            num(r.pst),
            yn(r.distance_regular),
            yn(r.identity),
        ));
        if oracle {
            out.push_str(&format!("  {}", yn(r.oracle_consistent)));
        }
        out.push('\n');
    }
    out
}
