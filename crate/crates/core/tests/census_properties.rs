//! Structural invariants quantified over every small connected graph, with
//! the exact Krylov rank and integer walk counts as independent oracles.

mod common;

use num::BigUint;
use pstlab_core::cospectral::{
    are_cospectral, are_strongly_cospectral, eigenvalue_support, is_spectrally_extremal,
    sign_pattern_sanity, transfer_polynomial_checked, unique_at_distance,
    vector_in_walk_module, walk_module_dimension, UniqueAtDistance,
};
use pstlab_core::graph::{walk_counts_from, DistanceInfo, Graph};
use pstlab_core::partition::{
    are_antipodal, distance_partition, is_equitable, is_pseudo_equitable, perron_weights,
};
use pstlab_core::spectral::{eigen_decompose, Decomposition};
use pstlab_core::census;

fn contexts() -> Vec<(Graph, DistanceInfo, Decomposition)> {
    let tol: pstlab_core::Tolerances = common::tolerances();
    common::census_up_to_6()
        .iter()
        .map(|g| {
            let dist = g.distances();
            let dec = eigen_decompose(g, &tol).unwrap();
            (g.clone(), dist, dec)
        })
        .collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

#[test]
fn strongly_cospectral_implies_cospectral_up_to_six() {
    let tol = common::tolerances();
    for (g, _, dec) in contexts() {
        for (u, v) in pairs(g.vertex_count()) {
            if are_strongly_cospectral(u, v, &dec, &tol).is_some() {
                assert!(
                    are_cospectral(u, v, &dec, &tol),
                    "{}: pair ({u},{v})",
                    pstlab_core::graph::encode_graph6(&g).unwrap()
                );
            }
        }
    }
}

#[test]
fn seven_vertex_census_invariants() {
    // The heavier census level: one decomposition per graph carries the
    // pair implication plus the per-vertex bound and the Krylov oracle.
    let tol = common::tolerances();
    let graphs = census::connected_census(7);
    assert_eq!(graphs.len(), 853);
    for g in graphs {
        let dist = g.distances();
        let dec = eigen_decompose(&g, &tol).unwrap();
        for u in 0..7 {
            let support = eigenvalue_support(u, &dec, &tol);
            assert!(dist.eccentricity(u) <= support.dual_degree);
            assert_eq!(support.support.len(), walk_module_dimension(&g, u));
        }
        for (u, v) in pairs(7) {
            if let Some(sp) = are_strongly_cospectral(u, v, &dec, &tol) {
                assert!(are_cospectral(u, v, &dec, &tol));
                assert_eq!(sp.sigmas[0], 1);
            }
        }
    }
}

#[test]
fn strong_cospectrality_iff_cospectral_with_transfer_polynomial() {
    let tol = common::tolerances();
    for (g, _, dec) in contexts() {
        for (u, v) in pairs(g.vertex_count()) {
            let strong = are_strongly_cospectral(u, v, &dec, &tol).is_some();
            let cospectral = are_cospectral(u, v, &dec, &tol);
            let poly = transfer_polynomial_checked(&g, u, v, &dec, &tol)
                .expect("transfer solve must not be refused on census graphs")
                .is_some();
            assert_eq!(
                strong,
                cospectral && poly,
                "{}: pair ({u},{v}) strong={strong} cospectral={cospectral} poly={poly}",
                pstlab_core::graph::encode_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn cospectral_iff_closed_walk_counts_agree() {
    let tol = common::tolerances();
    for (g, _, dec) in contexts() {
        let n = g.vertex_count();
        // diag[u][k] = (A^k)_{uu} for k = 1..=2n, exact.
        let diag: Vec<Vec<BigUint>> = (0..n)
            .map(|u| (1..=2 * n).map(|k| walk_counts_from(&g, k, u)[u].clone()).collect())
            .collect();
        for (u, v) in pairs(n) {
            let by_walks = diag[u] == diag[v];
            let by_projectors = are_cospectral(u, v, &dec, &tol);
            assert_eq!(by_walks, by_projectors, "pair ({u},{v})");
        }
    }
}

#[test]
fn eccentricity_never_exceeds_dual_degree() {
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        for u in 0..g.vertex_count() {
            let support = eigenvalue_support(u, &dec, &tol);
            assert!(dist.eccentricity(u) <= support.dual_degree);
            assert_eq!(support.support[0], 0, "Perron index always supported");
            // Exact cross-oracle: walk-module dimension equals support size.
            assert_eq!(support.support.len(), walk_module_dimension(&g, u));
        }
    }
}

#[test]
fn sign_patterns_start_positive_and_never_run_three() {
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        for (u, v) in pairs(g.vertex_count()) {
            if let Some(sp) = are_strongly_cospectral(u, v, &dec, &tol) {
                assert_eq!(sp.sigmas[0], 1, "Perron signs always align");
                let both_extremal = is_spectrally_extremal(u, &dec, &dist, &tol)
                    && is_spectrally_extremal(v, &dec, &dist, &tol);
                if both_extremal {
                    assert!(sign_pattern_sanity(&sp, &dec, &dist, &tol).unwrap());
                }
            }
        }
    }
}

#[test]
fn extremal_pairs_have_unique_partners() {
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        for u in 0..g.vertex_count() {
            if !is_spectrally_extremal(u, &dec, &dist, &tol) {
                continue;
            }
            for v in 0..g.vertex_count() {
                if v == u || are_strongly_cospectral(u, v, &dec, &tol).is_none() {
                    continue;
                }
                assert_eq!(
                    unique_at_distance(u, v, &dec, &dist, &tol).unwrap(),
                    UniqueAtDistance::Unique,
                    "{}: pair ({u},{v})",
                    pstlab_core::graph::encode_graph6(&g).unwrap()
                );
            }
        }
    }
}

#[test]
fn antipodal_tests_agree_on_every_pair() {
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        if g.vertex_count() < 2 {
            continue;
        }
        for (u, v) in pairs(g.vertex_count()) {
            let ev = are_antipodal(&g, &dist, &dec, u, v, &tol).unwrap();
            assert!(
                ev.consistent(),
                "{}: pair ({u},{v}) definitional={} spectral={} ({:?})",
                pstlab_core::graph::encode_graph6(&g).unwrap(),
                ev.definitional,
                ev.spectral,
                ev.definitional_failure
            );
            let flipped = are_antipodal(&g, &dist, &dec, v, u, &tol).unwrap();
            assert_eq!(ev.antipodal(), flipped.antipodal());
        }
    }
}

#[test]
fn pseudo_equitable_iff_extremal_with_far_class_polynomial() {
    // The polynomial side targets the Perron-weighted characteristic
    // vector of the farthest class (the plain 0/1 vector only works for
    // regular graphs; both agree whenever the class is a singleton).
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        let n = g.vertex_count();
        if n < 2 {
            continue;
        }
        let weights = perron_weights(&g, &dec, &tol).unwrap();
        for u in 0..n {
            let part = distance_partition(&g, &dist, u).unwrap();
            let lhs = is_pseudo_equitable(&g, &part, &weights, &tol).is_equitable();

            let extremal = is_spectrally_extremal(u, &dec, &dist, &tol);
            let mut target = vec![0.0; n];
            for w in dist.sphere(u, dist.eccentricity(u)) {
                target[w] = weights.nu[w];
            }
            let rhs = extremal && vector_in_walk_module(&target, u, &dec, &tol);
            assert_eq!(
                lhs,
                rhs,
                "{}: vertex {u}",
                pstlab_core::graph::encode_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn pseudo_equitable_equals_equitable_on_regular_graphs() {
    let tol = common::tolerances();
    for (g, dist, dec) in contexts() {
        if g.vertex_count() < 2 || g.is_regular().is_none() {
            continue;
        }
        let weights = perron_weights(&g, &dec, &tol).unwrap();
        for u in 0..g.vertex_count() {
            let part = distance_partition(&g, &dist, u).unwrap();
            assert_eq!(
                is_equitable(&g, &part).is_equitable(),
                is_pseudo_equitable(&g, &part, &weights, &tol).is_equitable()
            );
        }
    }
}

#[test]
fn identity_equality_iff_all_diameter_pairs_antipodal() {
    // On regular spectrally extremal graphs the identity holds exactly
    // when every pair at full diameter is antipodal; the prism fails the
    // extremality precondition outright.
    use pstlab_core::graph::families;
    use pstlab_core::partition::antipodality_identity;

    let tol = common::tolerances();
    for g in [
        families::cycle(4),
        families::hypercube(3),
        families::cycle(6),
        families::complete(4),
        families::complete_bipartite(3, 3),
        families::petersen(),
    ] {
        let dist = g.distances();
        let dec = eigen_decompose(&g, &tol).unwrap();
        let id = antipodality_identity(&g, &dist, &dec, &tol).unwrap();
        let d = dist.diameter();
        let mut all_antipodal = true;
        for u in 0..g.vertex_count() {
            for v in u + 1..g.vertex_count() {
                if dist.distance(u, v) == d {
                    all_antipodal &=
                        are_antipodal(&g, &dist, &dec, u, v, &tol).unwrap().antipodal();
                }
            }
        }
        assert_eq!(id.equal, all_antipodal);
    }

    let prism = families::prism();
    let dist = prism.distances();
    let dec = eigen_decompose(&prism, &tol).unwrap();
    assert!(antipodality_identity(&prism, &dist, &dec, &tol).is_err());
}

#[test]
fn identity_pipeline_forces_antipodal_drg() {
    // Regular + spectrally extremal + every eccentricity at the diameter +
    // the identity holding together force an antipodal distance-regular
    // graph. Holds on Q3 and C6; vacuous for K33 (identity fails there).
    use pstlab_core::graph::families;
    use pstlab_core::partition::{antipodality_identity, is_antipodal_drg, is_distance_regular};

    let tol = common::tolerances();
    let mut armed = 0;
    for g in [
        families::hypercube(3),
        families::cycle(6),
        families::complete_bipartite(3, 3),
    ] {
        let dist = g.distances();
        let dec = eigen_decompose(&g, &tol).unwrap();
        let d = dist.diameter();
        let extremal_graph = dec.spectrum.len() == d + 1;
        let all_ecc_d = (0..g.vertex_count()).all(|u| dist.eccentricity(u) == d);
        let identity = antipodality_identity(&g, &dist, &dec, &tol).unwrap().equal;
        if g.is_regular().is_some() && extremal_graph && all_ecc_d && identity {
            let drg = is_distance_regular(&g, &dist).unwrap();
            assert!(drg.distance_regular);
            assert!(is_antipodal_drg(&g, &dist, &drg).unwrap());
            armed += 1;
        }
    }
    assert_eq!(armed, 2, "Q3 and C6 arm the pipeline, K33 does not");
}

#[test]
fn oracle_detected_transfer_implies_strong_cospectrality() {
    // Scan every pair of every census graph with the simulator: wherever a
    // refined search reaches fidelity 1, the endpoints must be strongly
    // cospectral.
    let tol = common::tolerances();
    let t_max = tol.refutation_t_max;
    let mut detected = 0;
    for (g, _, dec) in contexts() {
        let walk = pstlab_core::walk::QuantumWalk::new(&dec);
        let steps = walk.default_search_steps(t_max);
        for (u, v) in pairs(g.vertex_count()) {
            let out = walk.pst_oracle_search(u, v, t_max, steps, tol.pst_refute);
            if out.hit.is_some() {
                detected += 1;
                assert!(
                    are_strongly_cospectral(u, v, &dec, &tol).is_some(),
                    "{}: oracle transfer on non-strongly-cospectral pair ({u},{v})",
                    pstlab_core::graph::encode_graph6(&g).unwrap()
                );
            }
        }
    }
    assert!(detected >= 4, "K2, P3 and C4 transfers live inside the census");
}

#[test]
fn census_has_a_pinned_non_equitable_witness() {
    // One concrete fixture: the 4-path rooted at its second vertex has
    // classes {1},{0,2},{3}; vertex 0 sends no edge on to class {3} while
    // vertex 2 does.
    let g = pstlab_core::graph::families::path(4);
    let dist = g.distances();
    let part = distance_partition(&g, &dist, 1).unwrap();
    let eq = is_equitable(&g, &part);
    assert!(!eq.is_equitable());
    let w = eq.witness.unwrap();
    assert_eq!(w.class, 2);
}
