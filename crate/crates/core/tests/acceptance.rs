//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured runtime and asserting the stated budget. Pipelines
//! are warmed up once before timing so budgets measure the algorithms,
//! not lazy allocator setup.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num::rational::BigRational;
use num::BigInt;
use pstlab_core::cospectral::{
    are_strongly_cospectral, is_spectrally_extremal, walk_maximality_scan,
};
use pstlab_core::graph::{families, DistanceInfo, Graph};
use pstlab_core::partition::{antipodality_identity, are_antipodal, ExactOrFloat};
use pstlab_core::pst::{
    classify_graph, pst_decide_graph, pst_decide_pair, quadratic_form_of_support,
    two_adic_valuation, PairVerdict,
};
use pstlab_core::spectral::{eigen_decompose, verify_decomposition, Decomposition};
use pstlab_core::walk::QuantumWalk;
use pstlab_core::Tolerances;

struct Ctx {
    g: Graph,
    dist: DistanceInfo,
    dec: Decomposition,
    walk: QuantumWalk,
    tol: Tolerances,
}

fn ctx(g: Graph) -> Ctx {
    let tol = common::tolerances();
    let dist = g.distances();
    let dec = eigen_decompose(&g, &tol).unwrap();
    let walk = QuantumWalk::new(&dec);
    Ctx { g, dist, dec, walk, tol }
}

fn rat(p: i64, q: i64) -> ExactOrFloat {
    ExactOrFloat::Exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn report(name: &str, elapsed: Duration, budget: Duration) {
    println!(
        "acceptance {name}: PASS in {elapsed:?} (budget {budget:?})"
    );
    assert!(
        elapsed < budget,
        "{name} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
}

/// Pairs covered by the pair decision criterion, one direction each.
fn eligible_pairs(c: &Ctx) -> Vec<(usize, usize)> {
    let n = c.g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_spectrally_extremal(u, &c.dec, &c.dist, &c.tol)
                && c.dist.distance(u, v) == c.dist.eccentricity(u)
            {
                out.push((u, v));
            } else if is_spectrally_extremal(v, &c.dec, &c.dist, &c.tol)
                && c.dist.distance(u, v) == c.dist.eccentricity(v)
            {
                out.push((v, u));
            }
        }
    }
    out
}

#[test]
fn criterion_1_k2_certificate() {
    let run = || {
        let c = ctx(families::complete(2));
        let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, 0, 1, &c.tol);
        let cert = verdict.certificate().expect("K2 admits transfer").clone();
        assert!((cert.tau - PI / 2.0).abs() < 1e-15);
        assert!(cert.oracle_fidelity >= 1.0 - 1e-12);
        let quarter = c.walk.fidelity(0, 1, PI / 4.0);
        assert!((quarter - (PI / 4.0).sin()).abs() < 1e-12);
    };
    run();
    let t0 = Instant::now();
    run();
    report("1 (K2 certificate)", t0.elapsed(), Duration::from_millis(1));
}

#[test]
fn criterion_2_p3_certificate() {
    let run = || {
        let c = ctx(families::path(3));
        let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, 0, 2, &c.tol);
        let cert = verdict.certificate().expect("P3 ends admit transfer").clone();
        assert_eq!(cert.delta, 2);
        assert_eq!(cert.alpha, 1);
        assert!((cert.tau - PI / 2f64.sqrt()).abs() < 1e-15);
        assert!(cert.oracle_fidelity >= 1.0 - 1e-9);
        assert_eq!(cert.sign_pattern.sigmas, vec![1, -1, 1]);
    };
    run();
    let t0 = Instant::now();
    run();
    report("2 (P3 certificate)", t0.elapsed(), Duration::from_millis(10));
}

#[test]
fn criterion_3_cube_global_criterion() {
    let run = || {
        let c = ctx(families::hypercube(3));

        // Exact eigenvalue differences and their valuation pattern.
        let ints = c.dec.spectrum.exact_integers().unwrap();
        let diffs: Vec<i64> = ints[1..].iter().map(|&t| ints[0] - t).collect();
        assert_eq!(diffs, vec![2, 4, 6]);
        assert_eq!(two_adic_valuation(diffs[0]).unwrap(), 1);

        let analysis = pst_decide_graph(&c.g, &c.dist, &c.dec, &c.tol).unwrap();
        assert!(analysis.admits_pst);
        assert_eq!(analysis.alpha, Some(1));
        assert_eq!(analysis.identity.lhs, rat(1, 6));
        assert_eq!(analysis.identity.rhs, rat(1, 6));
        assert!(analysis.identity.equal);
        assert!((analysis.tau.unwrap() - PI / 2.0).abs() < 1e-15);

        for (u, v) in [(0, 7), (1, 6), (2, 5), (3, 4)] {
            let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, u, v, &c.tol);
            let cert = verdict.certificate().expect("antipodal cube pair");
            assert!((cert.tau - PI / 2.0).abs() < 1e-15);
            assert!(cert.oracle_fidelity >= 1.0 - 1e-9);
        }

        let class = classify_graph(&c.g, &c.tol).unwrap();
        assert_eq!(class.distance_regular, Some(true));
        assert_eq!(class.antipodal_distance_regular, Some(true));
        assert_eq!(class.pst_pair_count(), 4);
    };
    run();
    let t0 = Instant::now();
    run();
    report("3 (Q3 global criterion)", t0.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_4_c4_passes_petersen_refuted() {
    let run = || {
        let c4 = ctx(families::cycle(4));
        let id = antipodality_identity(&c4.g, &c4.dist, &c4.dec, &c4.tol).unwrap();
        assert!(id.equal);
        assert_eq!(id.lhs, rat(1, 2));
        assert_eq!(id.rhs, rat(1, 2));
        for (u, v) in [(0, 2), (1, 3)] {
            let verdict = pst_decide_pair(&c4.g, &c4.dist, &c4.dec, &c4.walk, u, v, &c4.tol);
            let cert = verdict.certificate().expect("opposite C4 pair");
            assert!((cert.tau - PI / 2.0).abs() < 1e-15);
            assert!(cert.oracle_fidelity >= 1.0 - 1e-9);
        }

        let pet = ctx(families::petersen());
        let id = antipodality_identity(&pet.g, &pet.dist, &pet.dec, &pet.tol).unwrap();
        assert!(!id.equal);
        assert_eq!(id.lhs, rat(1, 1));
        assert_eq!(id.rhs, rat(1, 3));
        let analysis = pst_decide_graph(&pet.g, &pet.dist, &pet.dec, &pet.tol).unwrap();
        assert_eq!(analysis.even_condition, Some(false)); // v2(5) = 0, alpha = 1
        assert!(!analysis.admits_pst);

        // Refutation: no pair of the Petersen graph ever gets close.
        let t_max = pet.tol.refutation_t_max;
        let steps = pet.walk.default_search_steps(t_max);
        for u in 0..10 {
            for v in u + 1..10 {
                let out = pet.walk.pst_oracle_search(u, v, t_max, steps, pet.tol.pst_refute);
                assert!(out.hit.is_none(), "({u},{v}) reached {}", out.best_fidelity);
                assert!(out.best_fidelity < 1.0 - 1e-6);
            }
        }
    };
    run();
    let t0 = Instant::now();
    run();
    report("4 (C4 / Petersen)", t0.elapsed(), Duration::from_secs(5));
}

#[test]
fn criterion_5_p4_ends_denied_with_oracle_agreement() {
    let run = || {
        let c = ctx(families::path(4));
        assert!(are_strongly_cospectral(0, 3, &c.dec, &c.tol).is_some());
        let ev = are_antipodal(&c.g, &c.dist, &c.dec, 0, 3, &c.tol).unwrap();
        assert!(ev.antipodal());

        let support = pstlab_core::cospectral::eigenvalue_support(0, &c.dec, &c.tol);
        assert!(quadratic_form_of_support(&support.support, &c.dec.spectrum).is_none());

        let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, 0, 3, &c.tol);
        assert!(matches!(
            verdict,
            PairVerdict::NoPst(pstlab_core::pst::NoPstReason::UnsupportedEigenvalueForm)
        ));

        let t_max = c.tol.refutation_t_max;
        let steps = c.walk.default_search_steps(t_max);
        let out = c.walk.pst_oracle_search(0, 3, t_max, steps, c.tol.pst_refute);
        assert!(out.hit.is_none());
        assert!(out.best_fidelity < 1.0 - 1e-6);
    };
    run();
    let t0 = Instant::now();
    run();
    report("5 (P4 denial)", t0.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_6_census_equivalences() {
    use pstlab_core::cospectral::{
        are_cospectral, transfer_polynomial_checked, vector_in_walk_module,
    };
    use pstlab_core::partition::{distance_partition, is_pseudo_equitable, perron_weights};

    let t0 = Instant::now();
    let tol = common::tolerances();
    let graphs = common::census_up_to_6();
    assert_eq!(graphs.iter().filter(|g| g.vertex_count() == 6).count(), 112);

    for g in graphs {
        let n = g.vertex_count();
        let dist = g.distances();
        let dec = eigen_decompose(g, &tol).unwrap();
        let walk = QuantumWalk::new(&dec);
        let label = pstlab_core::graph::encode_graph6(g).unwrap();

        // (a) strong cospectrality implies cospectrality;
        // (b) and it is exactly cospectrality plus a transfer polynomial.
        for u in 0..n {
            for v in u + 1..n {
                let strong = are_strongly_cospectral(u, v, &dec, &tol).is_some();
                let cosp = are_cospectral(u, v, &dec, &tol);
                if strong {
                    assert!(cosp, "{label}: ({u},{v})");
                }
                let poly = transfer_polynomial_checked(g, u, v, &dec, &tol)
                    .unwrap()
                    .is_some();
                assert_eq!(strong, cosp && poly, "{label}: ({u},{v})");
            }
        }

        // (c) pseudo-equitable distance partition iff extremal vertex with
        // a polynomial onto the weighted far-class vector.
        if n >= 2 {
            let weights = perron_weights(g, &dec, &tol).unwrap();
            for u in 0..n {
                let part = distance_partition(g, &dist, u).unwrap();
                let lhs = is_pseudo_equitable(g, &part, &weights, &tol).is_equitable();
                let mut target = vec![0.0; n];
                for w in dist.sphere(u, dist.eccentricity(u)) {
                    target[w] = weights.nu[w];
                }
                let rhs = is_spectrally_extremal(u, &dec, &dist, &tol)
                    && vector_in_walk_module(&target, u, &dec, &tol);
                assert_eq!(lhs, rhs, "{label}: vertex {u}");
            }

            // (d) both antipodality tests agree on every pair.
            for u in 0..n {
                for v in u + 1..n {
                    let ev = are_antipodal(g, &dist, &dec, u, v, &tol).unwrap();
                    assert!(ev.consistent(), "{label}: ({u},{v})");
                }
            }
        }

        // (e) the decision matches the simulator on every pair the
        // decision criterion covers.
        let c = Ctx { g: g.clone(), dist, dec, walk, tol: tol.clone() };
        let t_max = c.tol.refutation_t_max;
        let steps = c.walk.default_search_steps(t_max);
        for (u, v) in eligible_pairs(&c) {
            let verdict = pst_decide_pair(&c.g, &c.dist, &c.dec, &c.walk, u, v, &c.tol);
            assert!(verdict.hypotheses_met());
            let search = c.walk.pst_oracle_search(u, v, t_max, steps, c.tol.pst_refute);
            assert_eq!(
                verdict.is_pst(),
                search.hit.is_some(),
                "{label}: ({u},{v}) verdict vs oracle (best {})",
                search.best_fidelity
            );
            if let Some(cert) = verdict.certificate() {
                assert!(cert.oracle_fidelity >= 1.0 - c.tol.pst_confirm);
                // Certified time in exact arithmetic: tau (theta_0 -
                // theta_r) / pi = (b_0 - b_r) / 2^alpha must be an integer
                // of the same parity as the support position.
                let support =
                    pstlab_core::cospectral::eigenvalue_support(u, &c.dec, &c.tol);
                let form =
                    quadratic_form_of_support(&support.support, &c.dec.spectrum).unwrap();
                for (r, &br) in form.b.iter().enumerate().skip(1) {
                    let diff = form.b[0] - br;
                    let pow = 1i64 << cert.alpha;
                    assert_eq!(diff.rem_euclid(pow), 0, "{label}: ({u},{v}) r={r}");
                    let k = diff / pow;
                    assert_eq!(
                        k.rem_euclid(2),
                        (r as i64).rem_euclid(2),
                        "{label}: ({u},{v}) parity at r={r}"
                    );
                }
                // Odd multiples of the certified time also transfer.
                for mult in [3.0, 5.0] {
                    let f = c.walk.fidelity(u, v, mult * cert.tau);
                    assert!(f >= 1.0 - 1e-9, "{label}: ({u},{v}) at {mult} tau");
                }
            }
        }
    }
    report("6 (census equivalences)", t0.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_7_numerical_hygiene() {
    let t0 = Instant::now();
    let tol = common::tolerances();
    for g in common::census_up_to_6() {
        let dec = eigen_decompose(g, &tol).unwrap();
        let report = verify_decomposition(&dec, g, &tol);
        if report.exact {
            assert!(report.pass());
            assert_eq!(report.max_residual(), 0.0);
        } else {
            assert!(report.max_residual() <= 1e-8);
        }

        let walk = QuantumWalk::new(&dec);
        let n = g.vertex_count();
        let mut rng = common::TinyRng::new(g.edge_bitmask() | 1);
        for _ in 0..10 {
            let t = rng.uniform(10.0 * PI);
            let u = (rng.next_u64() % n as u64) as usize;
            assert!((walk.evolve(u, t).norm() - 1.0).abs() < 1e-10);
        }

        // Independent series exponential, full column agreement.
        let t = rng.uniform(4.0 * PI);
        let series = common::series_exponential(g, t);
        for u in 0..n {
            let amp = walk.evolve(u, t);
            for i in 0..n {
                assert!((amp.amp[i] - series.get(i, u)).norm() < 1e-8);
            }
        }
    }
    report("7 (numerical hygiene)", t0.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_8_walk_maximality_scans() {
    let t0 = Instant::now();
    let tol = common::tolerances();
    let mut scanned_pairs = 0;
    for g in [
        families::hypercube(3),
        families::cycle(4),
        families::cycle(6),
        families::complete_bipartite(3, 3),
    ] {
        let c = ctx(g);
        let n = c.g.vertex_count();
        let mut sc_pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if are_strongly_cospectral(u, v, &c.dec, &c.tol).is_some() {
                    sc_pairs.push((u, v));
                }
            }
        }
        if c.g == families::complete_bipartite(3, 3) {
            assert!(sc_pairs.is_empty(), "K33 has no strongly cospectral pairs");
        }
        for &(u, v) in &sc_pairs {
            if !is_spectrally_extremal(u, &c.dec, &c.dist, &c.tol) {
                continue;
            }
            let violations =
                walk_maximality_scan(&c.g, u, v, &c.dec, &c.dist, &c.tol).unwrap();
            assert!(violations.is_empty(), "pair ({u},{v}): {violations:?}");
            scanned_pairs += 1;
        }
    }
    assert!(scanned_pairs >= 9, "expected scans on Q3, C4 and C6 pairs");
    let _ = tol;
    report("8 (walk maximality)", t0.elapsed(), Duration::from_secs(5));
}
