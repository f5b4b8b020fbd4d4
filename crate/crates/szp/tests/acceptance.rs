//! Acceptance gate: one test per criterion, each printing a single
//! verdict line. Two criteria state expectations the mathematics does
//! not bear out; those tests print FAIL and panic with the analysis
//! rather than bending the computation to match.

use std::collections::BTreeSet;

use szp::cases::{enumerate_case_candidates, enumerate_tau_critical, step1_bound, CoreClass};
use szp::cases::{erdos_gallai_check, gyarfas_lehel_check};
use szp::cert::{run_verify, Status};
use szp::graph::canon::canonical_code;
use szp::graph::enumerate::all_support_graphs;
use szp::graph::LoopGraph;
use szp::hypergraph::are_isomorphic;
use szp::realize::{
    extremal_construct, extremal_verify, forced_realization, search_configurations, triples_test,
    Verdict,
};
use szp::weight::{check_chain, order_bound, reduce_zero_weights, WeightedContext};

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

#[test]
fn criterion_1_critical_graphs_at_three() {
    let found = enumerate_tau_critical(3, 6);
    let known = [
        LoopGraph::from_pairs(&[("a", "b"), ("c", "d"), ("e", "f")]),
        LoopGraph::from_pairs(&[("a", "b"), ("c", "d"), ("d", "e"), ("c", "e")]),
        LoopGraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")]),
        LoopGraph::from_pairs(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]),
    ];
    let codes = |graphs: &[LoopGraph]| -> BTreeSet<_> {
        graphs
            .iter()
            .map(|g| {
                let (d, _) = g.to_dense();
                canonical_code(&d)
            })
            .collect()
    };
    assert_eq!(found.len(), 4, "exactly four critical graphs");
    assert_eq!(codes(&found), codes(&known), "the known four, up to isomorphism");
    println!("criterion 1: PASS (three disjoint edges, triangle plus edge, five-cycle, complete four)");
}

#[test]
fn criterion_2_bound_table() {
    let table: [(&str, LoopGraph, usize); 4] = [
        (
            "complete four",
            LoopGraph::from_pairs(&[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ]),
            16,
        ),
        (
            "five-cycle",
            LoopGraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "e")]),
            15,
        ),
        (
            "three disjoint edges",
            LoopGraph::from_pairs(&[("a", "b"), ("c", "d"), ("e", "f")]),
            12,
        ),
        (
            "triple star",
            LoopGraph::from_pairs(&[
                ("c1", "l1"),
                ("c1", "l2"),
                ("c2", "l3"),
                ("c2", "l4"),
                ("c3", "l5"),
                ("c3", "l6"),
            ]),
            15,
        ),
    ];
    for (name, graph, expected) in table {
        let ctx = WeightedContext::new(graph, 4);
        let bound = order_bound(&ctx).unwrap();
        assert_eq!(bound, expected, "{name}");
    }
    println!("criterion 2: PASS (bounds 16, 15, 12, 15)");
}

#[test]
fn criterion_3_deficiency_four_endgame() {
    let cands = enumerate_case_candidates(4);
    let top: Vec<_> = cands.iter().filter(|c| c.bound == 16).collect();
    assert_eq!(top.len(), 1, "exactly one candidate at the top bound");

    let reals = forced_realization(top[0], 16).unwrap();
    assert_eq!(reals.len(), 1, "the top system is fully forced");
    let real = &reals[0];
    let support = top[0].graph.support();
    for (j, (a, b)) in real.system.pairs.iter().enumerate() {
        let mj = &real.system.complements[j];
        let support_part: BTreeSet<_> = mj.intersection(&support).collect();
        let expected: BTreeSet<_> = support.iter().filter(|v| *v != a && *v != b).collect();
        assert_eq!(support_part, expected, "complement keeps the other two vertices");
        assert_eq!(mj.len() - support_part.len(), 2, "plus its own two fresh vertices");
    }
    let report = triples_test(real);
    match &report.verdict {
        Verdict::Reject { witness } => {
            assert_eq!(witness.len(), 13);
            assert_eq!(witness.len(), real.k + 1);
        }
        Verdict::Pass => panic!("criterion 3: FAIL (the top system was not rejected)"),
    }

    let mut five_cycle_passes = false;
    for cand in cands.iter().filter(|c| c.bound == 15) {
        let systems = forced_realization(cand, 15).unwrap();
        let any_pass = systems
            .iter()
            .any(|r| matches!(triples_test(r).verdict, Verdict::Pass));
        if cand.core == CoreClass::C5 {
            five_cycle_passes = any_pass;
        } else {
            assert!(
                !any_pass,
                "criterion 3: FAIL (a non-five-cycle candidate passed at 15: {})",
                cand.graph.to_edge_list()
            );
        }
    }

    let cert = run_verify(4).unwrap();
    assert!(cert.passed(), "the pipeline certifies without failures");
    let bound = cert
        .claims
        .iter()
        .find(|c| c.name == "order-bound")
        .unwrap();
    assert_eq!(bound.computed, serde_json::json!(15), "order bound 15 certified");

    if !five_cycle_passes {
        println!("criterion 3: FAIL (the five-cycle candidate is rejected at order 15, not passed)");
        panic!(
            "the five-cycle system at order 15 is unique (each complement holds the two \
             cycle vertices at distance two from the truncated edge plus its own two fresh \
             vertices), and the triples rule rejects it: removing the vertex cover \
             {{y1, y2, y4}} leaves the complements of the four other edges pairwise \
             disjoint, so all 220 triples on the remaining 12 vertices are forced and a \
             12-clique exceeds the clique number 11. The stated expectation that this \
             candidate passes is therefore not satisfiable; the order bound of 15 is \
             certified regardless, attained through the transversal-number-4 route \
             (complete pairs graph on five vertices at the vertex-plus-edge cap), whose \
             system closes to the order-15 construction. `verify --m 4` records this as \
             the finding `five-cycle-candidate-passes`."
        );
    }
    println!("criterion 3: PASS");
}

#[test]
fn criterion_4_extremal_verification() {
    let (h, f) = extremal_construct();
    let report = extremal_verify(&h, &f).unwrap();
    assert_eq!(report.order, 15);
    assert_eq!(report.omega, 11);
    assert!(report.family_intersection_empty);
    assert!(report.max_cliques_intersection_empty);
    assert!(report.members_all_maximum);

    // The clique count and the exact-family claim must be *reported*;
    // here they land as findings (15 maximum cliques, not 10).
    let cert = szp::cert::run_extremal(None, false).unwrap();
    let count = cert
        .claims
        .iter()
        .find(|c| c.name == "maximum-clique-count")
        .unwrap();
    assert_eq!(count.computed, serde_json::json!(15));
    assert_eq!(count.status, Status::Finding);
    let exact = cert
        .claims
        .iter()
        .find(|c| c.name == "family-is-precisely-the-maximum-cliques")
        .unwrap();
    assert!(matches!(exact.status, Status::Pass | Status::Finding));
    println!(
        "criterion 4: PASS (order 15, clique number 11, empty intersections; \
         clique count 15 reported as FINDING)"
    );
}

#[test]
fn criterion_5_independent_oracle() {
    let above = search_configurations(7, 2).unwrap();
    assert!(above.is_empty(), "no clique configuration on seven vertices");
    let at = search_configurations(6, 2).unwrap();
    assert!(!at.is_empty(), "six vertices are attained");
    println!(
        "criterion 5: PASS (0 survivors at order 7, {} at order 6)",
        at.len()
    );
}

#[test]
fn criterion_6_first_stage_closed_forms() {
    for (m, expected) in [(2usize, 6usize), (3, 10), (4, 14)] {
        let bound = step1_bound(m).unwrap();
        assert_eq!(bound, expected);
        assert!(bound <= choose2(m + 2));
    }
    println!("criterion 6: PASS (6, 10, 14)");
}

#[test]
fn criterion_7_inequality_suites() {
    // Transversal chain around every edge of every graph on up to seven
    // vertices, one per isomorphism class.
    let mut chain_checks = 0usize;
    for dense in all_support_graphs(7) {
        let labels: Vec<String> = (0..dense.n()).map(|i| format!("v{i}")).collect();
        let g = LoopGraph::from_dense(&dense, &labels);
        for (a, b) in g.simple_edges() {
            let report = check_chain(&g, 7, &a, &b);
            assert!(
                report.all_ok(),
                "chain violated at edge ({a},{b}) of {}: {report:?}",
                g.to_edge_list()
            );
            chain_checks += 1;
        }
    }

    // Removing a zero-weight edge never shrinks the order bound, for
    // every graph with at least three edges and a zero-weight edge.
    let mut reductions = 0usize;
    for dense in all_support_graphs(7) {
        if dense.simple_edge_count() < 3 {
            continue;
        }
        let labels: Vec<String> = (0..dense.n()).map(|i| format!("v{i}")).collect();
        let g = LoopGraph::from_dense(&dense, &labels);
        for m in 2..=6usize {
            let ctx = WeightedContext::new(g.clone(), m);
            if ctx.min_weight() != Some(0) {
                continue;
            }
            let (_, steps) = reduce_zero_weights(&ctx).unwrap();
            for step in &steps {
                assert!(
                    step.bound_after >= step.bound_before,
                    "bound dropped removing {:?} ({} -> {}) in {} at m={m}",
                    step.edge,
                    step.bound_before,
                    step.bound_after,
                    g.to_edge_list()
                );
                reductions += 1;
            }
        }
    }

    // Both classical bounds hold on every critical graph up to
    // transversal number four.
    let mut critical_checks = 0usize;
    for tau in 1..=4usize {
        for g in enumerate_tau_critical(tau, 2 * tau) {
            assert!(
                erdos_gallai_check(&g).unwrap(),
                "vertex bound violated: {}",
                g.to_edge_list()
            );
            assert!(
                gyarfas_lehel_check(&g).unwrap(),
                "vertex-plus-edge bound violated: {}",
                g.to_edge_list()
            );
            critical_checks += 1;
        }
    }
    assert!(chain_checks > 10_000);
    assert!(reductions > 100);
    assert!(critical_checks >= 7);
    println!(
        "criterion 7: PASS ({chain_checks} chain checks, {reductions} reductions, \
         {critical_checks} critical graphs)"
    );
}

#[test]
fn criterion_8_uniqueness_at_desk_scale() {
    let cands = enumerate_case_candidates(4);
    let five_cycle = cands
        .iter()
        .find(|c| c.core == CoreClass::C5 && c.bound == 15)
        .expect("the five-cycle candidate");
    let real = forced_realization(five_cycle, 15).unwrap().remove(0);
    let (construction, _) = extremal_construct();
    if !are_isomorphic(&real.hypergraph, &construction) {
        println!("criterion 8: FAIL (the five-cycle closure is not the order-15 construction)");
        panic!(
            "the forced five-cycle system closes to {} triples with a five-member family, \
             while the order-15 construction has {} triples and ten members, so the two \
             hypergraphs cannot be isomorphic. The construction is instead the closure of \
             the complete-graph pair system on its five pair vertices (pairs graph with \
             transversal number four), as verified by `extremal --check-private-pairs`; \
             the five-cycle system is rejected by the triples rule (see criterion 3).",
            real.hypergraph.triple_count(),
            construction.triple_count()
        );
    }
    println!("criterion 8: PASS");
}
