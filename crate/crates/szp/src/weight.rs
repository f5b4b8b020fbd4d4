//! Edge weights from truncated transversals, the order bound they give,
//! inequality-chain reports, and the zero-weight reduction.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::LoopGraph;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightError {
    /// Weights are defined for non-loop edges only.
    LoopWeightUndefined { vertex: String },
    /// A negative weight: the context cannot come from a valid system.
    InfeasibleContext { edge: (String, String), weight: i64 },
    /// Removing a zero-weight edge shrank the bound; contradicts the
    /// reduction lemma, so the whole state is surfaced.
    MonotonicityFailure {
        edge: (String, String),
        bound_before: usize,
        bound_after: usize,
        graph_before: String,
    },
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::LoopWeightUndefined { vertex } => {
                write!(f, "weight of the loop at {vertex} is undefined")
            }
            WeightError::InfeasibleContext { edge, weight } => {
                write!(f, "edge {{{}, {}}} has negative weight {weight}", edge.0, edge.1)
            }
            WeightError::MonotonicityFailure {
                edge,
                bound_before,
                bound_after,
                graph_before,
            } => write!(
                f,
                "removing zero-weight edge {{{}, {}}} dropped the bound {bound_before} -> {bound_after}; graph was:\n{graph_before}",
                edge.0, edge.1
            ),
        }
    }
}

impl std::error::Error for WeightError {}

/// m minus the transversal number of the truncation at `{a, b}`.
pub fn edge_weight(g: &LoopGraph, m: usize, a: &str, b: &str) -> Result<i64, WeightError> {
    if a == b {
        return Err(WeightError::LoopWeightUndefined { vertex: a.to_owned() });
    }
    assert!(g.has_edge(a, b), "weight of a non-edge");
    let t = g.truncate(a, b).expect("checked edge");
    Ok(m as i64 - t.transversal_number() as i64)
}

/// A loop-free graph, a deficiency value, and the weight of every edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedContext {
    pub graph: LoopGraph,
    pub m: usize,
    pub weights: BTreeMap<(String, String), i64>,
}

impl WeightedContext {
    /// Compute all edge weights of a loop-free graph for the given m.
    #[must_use]
    pub fn new(graph: LoopGraph, m: usize) -> Self {
        assert_eq!(graph.loop_count(), 0, "weighted graphs are loop-free");
        let mut weights = BTreeMap::new();
        for (a, b) in graph.edges().clone() {
            let w = edge_weight(&graph, m, &a, &b).expect("loop-free graph");
            weights.insert((a, b), w);
        }
        WeightedContext { graph, m, weights }
    }

    #[must_use]
    pub fn min_weight(&self) -> Option<i64> {
        self.weights.values().copied().min()
    }

    fn first_negative(&self) -> Option<(&(String, String), i64)> {
        self.weights.iter().find(|(_, &w)| w < 0).map(|(e, &w)| (e, w))
    }
}

/// Sum of all edge weights.
#[must_use]
pub fn total_weight(ctx: &WeightedContext) -> i64 {
    ctx.weights.values().sum()
}

/// Number of non-isolated vertices plus the total weight: an upper bound
/// on the order of anything realizing this context.
pub fn order_bound(ctx: &WeightedContext) -> Result<usize, WeightError> {
    if let Some((edge, weight)) = ctx.first_negative() {
        return Err(WeightError::InfeasibleContext {
            edge: edge.clone(),
            weight,
        });
    }
    let support = ctx.graph.support().len();
    Ok(support + total_weight(ctx) as usize)
}

/// The two transversal comparisons around an edge, plus the cap check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainReport {
    pub tau: usize,
    pub tau_removed: usize,
    pub tau_truncated: usize,
    pub m: usize,
    /// tau - 1 <= tau_removed
    pub lower_ok: bool,
    /// tau_removed <= tau_truncated; can fail when a loop sits at an
    /// endpoint of the edge, holds for loop-free graphs
    pub middle_ok: bool,
    /// tau_truncated <= m
    pub upper_ok: bool,
}

impl ChainReport {
    #[must_use]
    pub fn all_ok(&self) -> bool {
        self.lower_ok && self.middle_ok && self.upper_ok
    }
}

pub fn check_chain(g: &LoopGraph, m: usize, a: &str, b: &str) -> ChainReport {
    assert!(a != b, "chain is defined for non-loop edges");
    assert!(g.has_edge(a, b), "chain of a non-edge");
    let tau = g.transversal_number();
    let tau_removed = g.remove_edge(a, b).expect("checked edge").transversal_number();
    let tau_truncated = g.truncate(a, b).expect("checked edge").transversal_number();
    ChainReport {
        tau,
        tau_removed,
        tau_truncated,
        m,
        lower_ok: tau.saturating_sub(1) <= tau_removed,
        middle_ok: tau_removed <= tau_truncated,
        upper_ok: tau_truncated <= m,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionCase {
    /// The edge is its own component.
    Isolated,
    /// Exactly one endpoint has another edge.
    Pendant,
    /// Both endpoints have other edges.
    Internal,
}

impl fmt::Display for ReductionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionCase::Isolated => "isolated",
            ReductionCase::Pendant => "pendant",
            ReductionCase::Internal => "internal",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep {
    pub edge: (String, String),
    pub case: ReductionCase,
    pub bound_before: usize,
    pub bound_after: usize,
}

/// Repeatedly remove the lexicographically least zero-weight edge while at
/// least three edges remain, recomputing weights from scratch each time and
/// checking that the order bound never decreases.
pub fn reduce_zero_weights(
    ctx: &WeightedContext,
) -> Result<(WeightedContext, Vec<ReductionStep>), WeightError> {
    if let Some((edge, weight)) = ctx.first_negative() {
        return Err(WeightError::InfeasibleContext {
            edge: edge.clone(),
            weight,
        });
    }
    let mut current = ctx.clone();
    let mut log = Vec::new();
    loop {
        if current.graph.edge_count() < 3 {
            break;
        }
        let Some(edge) = current
            .weights
            .iter()
            .find(|(_, &w)| w == 0)
            .map(|(e, _)| e.clone())
        else {
            break;
        };
        let (a, b) = (&edge.0, &edge.1);
        let deg_a = current.graph.degree(a);
        let deg_b = current.graph.degree(b);
        let case = match (deg_a > 1, deg_b > 1) {
            (false, false) => ReductionCase::Isolated,
            (true, true) => ReductionCase::Internal,
            _ => ReductionCase::Pendant,
        };
        let bound_before = order_bound(&current)?;
        let next_graph = current.graph.remove_edge(a, b).expect("zero edge exists");
        let next = WeightedContext::new(next_graph, current.m);
        let bound_after = order_bound(&next)?;
        if bound_after < bound_before {
            return Err(WeightError::MonotonicityFailure {
                edge: edge.clone(),
                bound_before,
                bound_after,
                graph_before: current.graph.to_edge_list(),
            });
        }
        log.push(ReductionStep {
            edge,
            case,
            bound_before,
            bound_after,
        });
        current = next;
    }
    Ok((current, log))
}

/// Graphviz text; weight-1 edges carry no label, isolated vertices appear
/// as bare nodes.
#[must_use]
pub fn to_dot(ctx: &WeightedContext) -> String {
    let mut out = String::from("graph {\n");
    for ((a, b), w) in &ctx.weights {
        if *w == 1 {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        } else {
            out.push_str(&format!("  \"{a}\" -- \"{b}\" [label=\"{w}\"];\n"));
        }
    }
    for v in ctx.graph.isolated_vertices() {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    out.push_str("}\n");
    out
}
