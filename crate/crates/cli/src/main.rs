//! pstlab: spectral and quantum-walk analysis of finite simple graphs.
//!
//! Exit codes: 0 success (and transfer confirmed for `pst`), 1 transfer
//! denied, 2 input/parse errors, 3 analysis refusals.

mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pstlab_core::cospectral::is_spectrally_extremal;
use pstlab_core::graph::{DistanceInfo, Graph};
use pstlab_core::pst::{
    classify_graph, pst_decide_pair, GraphClassification, PairVerdict,
};
use pstlab_core::spectral::{eigen_decompose, Decomposition};
use pstlab_core::walk::QuantumWalk;
use pstlab_core::{Error, Tolerances};

use input::{parse_one, read_input, Format};
use render::{classification_table, scan_table, ScanRow};

#[derive(Parser)]
#[command(
    name = "pstlab",
    version,
    about = "Decide strong cospectrality, antipodality, and perfect state transfer \
             for continuous-time quantum walks on graphs"
)]
struct Cli {
    /// Numeric tolerance (overrides the PSTLAB_TOL environment variable).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report for one graph.
    Analyze {
        /// Path, or '-' for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Emit the machine-readable JSON report.
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Emit the human-readable table (default).
        #[arg(long)]
        table: bool,
        /// Cross-check every transfer verdict against the simulator.
        #[arg(long)]
        verify_oracle: bool,
    },
    /// Decide perfect state transfer between two vertices.
    Pst {
        input: String,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Also run the refutation search when transfer is denied.
        #[arg(long)]
        verify_oracle: bool,
    },
    /// Scan a file of graph6 lines, one summary row per graph.
    Scan {
        input: String,
        /// Cross-check every verdict against the simulator.
        #[arg(long)]
        verify_oracle: bool,
        /// Exit nonzero if any line fails to parse or analyze.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export the fidelity time series of a pair as CSV.
    Walk {
        input: String,
        u: String,
        v: String,
        #[arg(long, default_value_t = 2.0 * std::f64::consts::PI)]
        t_max: f64,
        #[arg(long, default_value_t = 256)]
        steps: usize,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
    },
}

/// (exit code, one-line diagnostic).
pub(crate) fn fail(code: i32, msg: String) -> (i32, String) {
    (code, msg)
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Graph6 { .. }
        | Error::EdgeList(_)
        | Error::VertexOutOfRange(..)
        | Error::BadGrid(_) => 2,
        _ => 3,
    }
}

fn core_err(e: Error) -> (i32, String) {
    (exit_code_for(&e), e.to_string())
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err((code, msg)) => {
            eprintln!("pstlab: {msg}");
            std::process::exit(code);
        }
    }
}

fn tolerances(flag: Option<f64>) -> Result<Tolerances, (i32, String)> {
    let base = match flag {
        Some(t) => t,
        None => match std::env::var("PSTLAB_TOL") {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| fail(2, format!("invalid PSTLAB_TOL value '{s}'")))?,
            Err(_) => 1e-9,
        },
    };
    if !(base > 0.0 && base.is_finite()) {
        return Err(fail(2, format!("tolerance must be positive and finite, got {base}")));
    }
    Ok(Tolerances::with_base(base))
}

struct PairContext {
    g: Graph,
    dist: DistanceInfo,
    dec: Decomposition,
    walk: QuantumWalk,
}

fn pair_context(g: Graph, tol: &Tolerances) -> Result<PairContext, (i32, String)> {
    let dist = g.distances();
    let dec = eigen_decompose(&g, tol).map_err(core_err)?;
    let walk = QuantumWalk::new(&dec);
    Ok(PairContext { g, dist, dec, walk })
}

/// Compare every covered pair's verdict with a refutation/confirmation
/// search of the simulator.
fn oracle_consistent(c: &PairContext, tol: &Tolerances) -> bool {
    let n = c.g.vertex_count();
    let t_max = tol.refutation_t_max;
    let steps = c.walk.default_search_steps(t_max);
    for u in 0..n {
        for v in 0..n {
            if u == v
                || !is_spectrally_extremal(u, &c.dec, &c.dist, tol)
                || c.dist.distance(u, v) != c.dist.eccentricity(u)
            {
                continue;
            }
            let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, u, v, tol);
            if let Some(cert) = verdict.certificate() {
                if cert.oracle_fidelity < 1.0 - tol.pst_confirm {
                    return false;
                }
            } else {
                let search = c.walk.pst_oracle_search(u, v, t_max, steps, tol.pst_refute);
                if search.hit.is_some() {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    source: &'a str,
    format: &'static str,
    tolerances: &'a Tolerances,
    classification: &'a GraphClassification,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_consistent: Option<bool>,
}

fn run(cli: Cli) -> Result<i32, (i32, String)> {
    let tol = tolerances(cli.tol)?;
    match cli.command {
        Command::Analyze { input, format, json, table: _, verify_oracle } => {
            let text = read_input(&input)?;
            let (g, fmt_name) = parse_one(&text, format)?;
            let classification = classify_graph(&g, &tol).map_err(core_err)?;
            let oracle = verify_oracle.then(|| {
                let c = pair_context(g.clone(), &tol).expect("already decomposed");
                oracle_consistent(&c, &tol)
            });
            if json {
                let report = Report {
                    tool: "pstlab",
                    version: env!("CARGO_PKG_VERSION"),
                    source: &input,
                    format: fmt_name,
                    tolerances: &tol,
                    classification: &classification,
                    oracle_consistent: oracle,
                };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", classification_table(&classification));
                if let Some(ok) = oracle {
                    println!("oracle cross-check: {}", if ok { "consistent" } else { "INCONSISTENT" });
                }
            }
            Ok(0)
        }

        Command::Pst { input, u, v, format, verify_oracle } => {
            let text = read_input(&input)?;
            let (g, _) = parse_one(&text, format)?;
            let ui = g
                .resolve_vertex(&u)
                .ok_or_else(|| fail(2, format!("unknown vertex '{u}'")))?;
            let vi = g
                .resolve_vertex(&v)
                .ok_or_else(|| fail(2, format!("unknown vertex '{v}'")))?;
            if ui == vi {
                return Err(fail(2, "trivial pair rejected".into()));
            }
            let c = pair_context(g, &tol)?;
            let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, ui, vi, &tol);
            match verdict {
                PairVerdict::Pst(cert) => {
                    #[derive(Serialize)]
                    struct CertificateJson {
                        u: String,
                        v: String,
                        alpha: u32,
                        delta: i64,
                        tau: f64,
                        sigma: Vec<i8>,
                        fidelity: f64,
                    }
                    let json = CertificateJson {
                        u: c.g.label(cert.u),
                        v: c.g.label(cert.v),
                        alpha: cert.alpha,
                        delta: cert.delta,
                        tau: pstlab_core::round_sig15(cert.tau),
                        sigma: cert.sign_pattern.sigmas.clone(),
                        fidelity: pstlab_core::round_sig15(cert.oracle_fidelity),
                    };
                    println!("{}", serde_json::to_string_pretty(&json).unwrap());
                    Ok(0)
                }
                PairVerdict::NoPst(reason) => {
                    #[derive(Serialize)]
                    struct DenialJson {
                        u: String,
                        v: String,
                        pst: bool,
                        reason: String,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        oracle_max_fidelity: Option<f64>,
                    }
                    let oracle_max_fidelity = verify_oracle.then(|| {
                        let t_max = tol.refutation_t_max;
                        let steps = c.walk.default_search_steps(t_max);
                        let out = c.walk.pst_oracle_search(ui, vi, t_max, steps, tol.pst_refute);
                        pstlab_core::round_sig15(out.best_fidelity)
                    });
                    let json = DenialJson {
                        u: c.g.label(ui),
                        v: c.g.label(vi),
                        pst: false,
                        reason: reason.to_string(),
                        oracle_max_fidelity,
                    };
                    println!("{}", serde_json::to_string_pretty(&json).unwrap());
                    Ok(1)
                }
            }
        }

        Command::Scan { input, verify_oracle, strict, json } => {
            let text = read_input(&input)?;
            let lines: Vec<(usize, &str)> = text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty())
                .collect();
            let parsed: Vec<(usize, String, Result<Graph, Error>)> = lines
                .iter()
                .map(|&(no, l)| (no, l.to_string(), pstlab_core::graph::parse_graph6(l)))
                .collect();
            let graphs: Vec<Graph> = parsed
                .iter()
                .filter_map(|(_, _, r)| r.as_ref().ok().cloned())
                .collect();
            let classified = pstlab_core::pst::classify_batch(&graphs, &tol);

            let mut rows = Vec::new();
            let mut any_error = false;
            let mut next = classified.into_iter();
            for (no, raw, parse_result) in parsed {
                let row = match parse_result {
                    Err(e) => {
                        any_error = true;
                        ScanRow {
                            line: no,
                            input: raw,
                            error: Some(e.to_string()),
                            n: None,
                            kind: None,
                            extremal: None,
                            strongly_cospectral: None,
                            antipodal: None,
                            pst: None,
                            distance_regular: None,
                            identity: None,
                            oracle_consistent: None,
                        }
                    }
                    Ok(g) => match next.next().unwrap() {
                        Err(e) => {
                            any_error = true;
                            ScanRow {
                                line: no,
                                input: raw,
                                error: Some(e.to_string()),
                                n: Some(g.vertex_count()),
                                kind: None,
                                extremal: None,
                                strongly_cospectral: None,
                                antipodal: None,
                                pst: None,
                                distance_regular: None,
                                identity: None,
                                oracle_consistent: None,
                            }
                        }
                        Ok(c) => {
                            let oracle = verify_oracle.then(|| {
                                pair_context(g.clone(), &tol)
                                    .map(|ctx| oracle_consistent(&ctx, &tol))
                                    .unwrap_or(false)
                            });
                            ScanRow {
                                line: no,
                                input: raw,
                                error: None,
                                n: Some(c.n),
                                kind: Some(c.spectrum.kind.to_string()),
                                extremal: Some(c.spectrally_extremal_graph),
                                strongly_cospectral: Some(c.strongly_cospectral_pairs.len()),
                                antipodal: Some(c.antipodal_pair_count()),
                                pst: Some(c.pst_pair_count()),
                                distance_regular: c.distance_regular,
                                identity: c.antipodality_identity.as_ref().map(|i| i.equal),
                                oracle_consistent: oracle,
                            }
                        }
                    },
                };
                rows.push(row);
            }

            if json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                print!("{}", scan_table(&rows, verify_oracle));
            }
            if strict && any_error {
                return Err(fail(2, "scan encountered errors (strict mode)".into()));
            }
            Ok(0)
        }

        Command::Walk { input, u, v, t_max, steps, output, format } => {
            let text = read_input(&input)?;
            let (g, _) = parse_one(&text, format)?;
            let ui = g
                .resolve_vertex(&u)
                .ok_or_else(|| fail(2, format!("unknown vertex '{u}'")))?;
            let vi = g
                .resolve_vertex(&v)
                .ok_or_else(|| fail(2, format!("unknown vertex '{v}'")))?;
            let c = pair_context(g, &tol)?;
            let series = c.walk.fidelity_series(ui, vi, t_max, steps).map_err(core_err)?;
            let csv = series.to_csv();
            match output {
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| fail(2, format!("cannot write '{}': {e}", path.display())))?;
                    f.write_all(csv.as_bytes())
                        .map_err(|e| fail(2, format!("cannot write '{}': {e}", path.display())))?;
                }
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}
