//! Exhaustive census of connected graphs up to isomorphism, for scan
//! fixtures and the property checks that quantify over "every small graph".
//!
//! Generation is by vertex augmentation: every connected graph on `n`
//! vertices arises from a connected graph on `n - 1` (delete a non-cut
//! vertex) plus a new vertex joined to a non-empty subset. Candidates are
//! reduced to the lexicographically minimal edge bitmask over all vertex
//! relabelings.

use crate::graph::Graph;

/// Number of connected graphs on `n` vertices up to isomorphism.
pub const CONNECTED_COUNTS: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

// Canonicalization is brute force over all n! relabelings, which stays
// comfortable through n = 7 and hopeless beyond.
const MAX_CENSUS_N: usize = 7;

fn pair_bit(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// All permutations of `0..n` (Heap's algorithm).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// Bit-relabeling tables: for each permutation, where each edge slot of the
/// relabeled graph reads from in the original mask.
fn perm_tables(n: usize) -> Vec<Vec<u8>> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut table = vec![0u8; n * (n - 1) / 2];
            for v in 1..n {
                for u in 0..v {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    table[pair_bit(u, v)] = pair_bit(a, b) as u8;
                }
            }
            table
        })
        .collect()
}

fn apply_perm(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0u64;
    for (e, &src) in table.iter().enumerate() {
        out |= (mask >> src & 1) << e;
    }
    out
}

fn canonical(mask: u64, tables: &[Vec<u8>]) -> u64 {
    tables.iter().map(|t| apply_perm(mask, t)).min().unwrap()
}

/// All connected graphs on exactly `n` vertices, one canonical
/// representative per isomorphism class, in ascending bitmask order.
pub fn connected_census(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_CENSUS_N).contains(&n),
        "census limited to 1..={MAX_CENSUS_N} vertices"
    );
    let mut level: Vec<u64> = vec![0]; // K1
    for m in 2..=n {
        let tables = perm_tables(m);
        let base = pair_bit(0, m - 1);
        let mut next = std::collections::BTreeSet::new();
        for &parent in &level {
            for subset in 1u64..1 << (m - 1) {
                let mask = parent | (subset << base);
                next.insert(canonical(mask, &tables));
            }
        }
        level = next.into_iter().collect();
    }
    level
        .into_iter()
        .map(|mask| Graph::from_edge_bitmask(n, mask))
        .collect()
}

/// All connected graphs on `1..=n` vertices.
pub fn connected_census_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_census).collect()
}
