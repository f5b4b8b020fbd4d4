//! Brute-force reference implementations.
//!
//! Everything here trades speed for obviousness. These functions pin down the
//! optimised solvers in tests and back the exhaustive `oracle` subcommand;
//! none of them share search logic with the engines they check.

use crate::graph::dense::{iter_bits, DenseGraph};

/// Transversal number by scanning all vertex subsets.
#[must_use]
pub fn transversal_by_scan(g: &DenseGraph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset scan needs 2^n masks");
    let edges = g.edges();
    let loops = g.loops();
    let mut best = n;
    for mask in 0u32..(1u32 << n) {
        if mask & loops != loops || mask.count_ones() as usize >= best {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        {
            best = mask.count_ones() as usize;
        }
    }
    best
}

/// Clique number of a 3-uniform hypergraph on `0..n` by scanning all vertex
/// subsets; sets of size at most 2 are vacuously cliques.
#[must_use]
pub fn hypergraph_clique_by_scan(n: usize, triples: &[[usize; 3]]) -> usize {
    assert!(n <= 20, "subset scan needs 2^n masks");
    let present = triple_bitset(n, triples);
    let mut best = n.min(2);
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize <= best {
            continue;
        }
        if mask_is_clique(n, &present, mask) {
            best = mask.count_ones() as usize;
        }
    }
    best
}

/// All maximum cliques of a 3-uniform hypergraph, as masks, ascending.
#[must_use]
pub fn hypergraph_max_cliques_by_scan(n: usize, triples: &[[usize; 3]]) -> Vec<u32> {
    assert!(n <= 20);
    let omega = hypergraph_clique_by_scan(n, triples);
    let present = triple_bitset(n, triples);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == omega && mask_is_clique(n, &present, mask) {
            out.push(mask);
        }
    }
    out
}

fn triple_index(n: usize, a: usize, b: usize, c: usize) -> usize {
    // Flat index of the sorted triple a < b < c inside 0..C(n,3).
    debug_assert!(a < b && b < c && c < n);
    let _ = n;
    choose3(c) + choose2(b) + a
}

fn choose2(b: usize) -> usize {
    b * (b - 1) / 2
}

fn choose3(c: usize) -> usize {
    c * (c - 1) * (c - 2) / 6
}

fn triple_bitset(n: usize, triples: &[[usize; 3]]) -> Vec<u64> {
    let words = (choose3(n).max(1) + 63) / 64;
    let mut bits = vec![0u64; words];
    for t in triples {
        let mut s = *t;
        s.sort_unstable();
        assert!(s[0] < s[1] && s[1] < s[2], "degenerate triple");
        assert!(s[2] < n);
        let idx = triple_index(n, s[0], s[1], s[2]);
        bits[idx / 64] |= 1 << (idx % 64);
    }
    bits
}

fn mask_is_clique(n: usize, present: &[u64], mask: u32) -> bool {
    let verts: Vec<usize> = iter_bits(mask).collect();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            for k in j + 1..verts.len() {
                let idx = triple_index(n, verts[i], verts[j], verts[k]);
                if present[idx / 64] >> (idx % 64) & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Loop-respecting graph isomorphism by trying every vertex permutation.
#[must_use]
pub fn isomorphic_by_permutation(a: &DenseGraph, b: &DenseGraph) -> bool {
    if a.n() != b.n()
        || a.simple_edge_count() != b.simple_edge_count()
        || a.loop_count() != b.loop_count()
    {
        return false;
    }
    assert!(a.n() <= 8, "factorial scan");
    let mut perm: Vec<usize> = (0..a.n()).collect();
    permutations(&mut perm, 0, &mut |p| &a.permuted(p) == b)
}

fn permutations(perm: &mut Vec<usize>, at: usize, hit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if at == perm.len() {
        return hit(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permutations(perm, at + 1, hit) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// Raw quantifier scan behind the closed-form first-stage bound: the order a
/// configuration can reach with two branch vertices, maximised over all
/// admissible degree splits. Returns (adjacent-branch case, disjoint-branch
/// case).
#[must_use]
pub fn first_stage_scan(m: usize) -> (usize, usize) {
    assert!(m >= 2);
    // Branch vertices adjacent: x edges on one side, y on the other, y <= x.
    let mut adjacent = 0;
    for x in 0..=m + 1 {
        for y in 0..=x {
            let value = m + 2 + x * (m + 1 - x) + y * (m.saturating_sub(y + 1));
            adjacent = adjacent.max(value);
        }
    }
    // Branch vertices non-adjacent: a balanced split of m doubles up.
    let mut disjoint = 0;
    for z in 0..=m {
        disjoint = disjoint.max(m + 2 + 2 * z * (m - z));
    }
    (adjacent, disjoint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scan_matches_solver_on_known_graphs() {
        let c5 = DenseGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(transversal_by_scan(&c5), 3);
        let mut looped = DenseGraph::from_edges(2, &[(0, 1)]);
        looped.add_loop(1);
        assert_eq!(transversal_by_scan(&looped), 1);
    }

    #[test]
    fn clique_scan_basics() {
        // Complete triple system on 5 vertices.
        let mut triples = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    triples.push([a, b, c]);
                }
            }
        }
        assert_eq!(hypergraph_clique_by_scan(5, &triples), 5);
        assert_eq!(hypergraph_clique_by_scan(6, &[]), 2);
        // Two disjoint 4-sets.
        let mut two = Vec::new();
        for set in [[0usize, 1, 2, 3], [4, 5, 6, 7]] {
            for a in 0..4 {
                for b in a + 1..4 {
                    for c in b + 1..4 {
                        two.push([set[a], set[b], set[c]]);
                    }
                }
            }
        }
        assert_eq!(hypergraph_clique_by_scan(8, &two), 4);
        assert_eq!(hypergraph_max_cliques_by_scan(8, &two).len(), 2);
    }

    #[test]
    fn permutation_isomorphism() {
        let p4 = DenseGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let p4_shuffled = DenseGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert!(isomorphic_by_permutation(&p4, &p4_shuffled));
        let star = DenseGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!isomorphic_by_permutation(&p4, &star));
        // Loops distinguish.
        let mut a = DenseGraph::from_edges(2, &[(0, 1)]);
        a.add_loop(0);
        let mut b = DenseGraph::from_edges(2, &[(0, 1)]);
        b.add_loop(1);
        assert!(isomorphic_by_permutation(&a, &b));
        let plain = DenseGraph::from_edges(2, &[(0, 1)]);
        assert!(!isomorphic_by_permutation(&a, &plain));
    }

    proptest! {
        #[test]
        fn solver_agrees_with_scan(edges in proptest::collection::vec((0usize..7, 0usize..7), 0..16)) {
            let g = DenseGraph::from_edges(7, &edges);
            prop_assert_eq!(g.transversal_number(), transversal_by_scan(&g));
        }

        #[test]
        fn solver_agrees_with_scan_with_loops(
            edges in proptest::collection::vec((0usize..6, 0usize..6), 0..12),
            loops in proptest::collection::vec(0usize..6, 0..4),
        ) {
            let mut g = DenseGraph::from_edges(6, &edges);
            for v in loops {
                g.add_loop(v);
            }
            prop_assert_eq!(g.transversal_number(), transversal_by_scan(&g));
        }

        #[test]
        fn min_transversals_are_minimum_and_cover(
            edges in proptest::collection::vec((0usize..6, 0usize..6), 1..12),
        ) {
            let g = DenseGraph::from_edges(6, &edges);
            let t = g.transversal_number();
            let covers = g.all_min_transversals();
            prop_assert!(!covers.is_empty());
            for mask in covers {
                prop_assert_eq!(mask.count_ones() as usize, t);
                for (u, v) in g.edges() {
                    prop_assert!(mask >> u & 1 == 1 || mask >> v & 1 == 1);
                }
            }
        }
    }
}
