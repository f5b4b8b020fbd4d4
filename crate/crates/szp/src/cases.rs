//! The quantitative skeleton of the argument: first-stage closed-form
//! bounds, criticality bounds, exhaustive enumeration of small
//! transversal-critical graphs, and the deficiency-4 candidate list.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::canon::canonical_code;
use crate::graph::dense::{iter_bits, DenseGraph};
use crate::graph::LoopGraph;
use crate::weight::WeightedContext;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CaseError {
    OutOfRange { m: usize },
    /// The graph fed to a criticality bound is not transversal-critical.
    PreconditionFailed { reason: String },
    BoundViolation { witness: String, value: usize, limit: usize },
}

impl fmt::Display for CaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseError::OutOfRange { m } => write!(f, "deficiency {m} is below 2"),
            CaseError::PreconditionFailed { reason } => f.write_str(reason),
            CaseError::BoundViolation { witness, value, limit } => {
                write!(f, "bound violated: {value} > {limit} on\n{witness}")
            }
        }
    }
}

impl std::error::Error for CaseError {}

fn choose2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Larger of the two first-stage closed forms; both are capped by
/// C(m+2, 2), and the cap is asserted.
pub fn step1_bound(m: usize) -> Result<usize, CaseError> {
    if m < 2 {
        return Err(CaseError::OutOfRange { m });
    }
    let mut adjacent = 0i64;
    for x in 0..=(m as i64 + 1) {
        for y in 0..=x {
            let value = x * (m as i64 + 1 - x) + y * (m as i64 - y - 1);
            adjacent = adjacent.max(value);
        }
    }
    let disjoint = 2 * (m / 2) * (m - m / 2);
    let bound = (m + 2) + (adjacent as usize).max(disjoint);
    assert!(
        bound <= choose2(m + 2),
        "first-stage bound exceeded the closed cap"
    );
    Ok(bound)
}

/// Antichains (sets of pairwise-incomparable masks) of exactly `k`
/// elements drawn from `subsets`, as index-increasing selections.
fn antichains(subsets: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(subsets: &[u32], k: usize, from: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in from..subsets.len() {
            let cand = subsets[i];
            let comparable = current
                .iter()
                .any(|&c| (c & cand) == c || (c & cand) == cand);
            if !comparable {
                current.push(cand);
                rec(subsets, k, i + 1, current, out);
                current.pop();
            }
        }
    }
    rec(subsets, k, 0, &mut current, &mut out);
    out
}

/// All connected transversal-critical graphs with transversal number `s`
/// on at most `nmax` vertices, up to isomorphism.
///
/// Search frame: fix a minimum cover T of size s. Vertices outside T are
/// pairwise nonadjacent with neighbourhoods inside T, those neighbourhoods
/// have at least two elements (a degree-1 vertex forces a lone-edge
/// component), and no two are comparable under inclusion (for nonadjacent
/// u, v in a critical graph, N(u) never contains N(v)). Every critical
/// graph fits this frame for each of its minimum covers, so scanning all
/// inside-T edge sets against all antichains of T-subsets is exhaustive.
fn connected_tau_critical(s: usize, nmax: usize) -> Vec<DenseGraph> {
    if s == 1 {
        if nmax < 2 {
            return Vec::new();
        }
        return vec![DenseGraph::from_edges(2, &[(0, 1)])];
    }
    let subsets: Vec<u32> = (0u32..1 << s).filter(|m| m.count_ones() >= 2).collect();
    let t_pairs: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 0..=nmax.saturating_sub(s) {
        for chain in antichains(&subsets, k) {
            for internal in 0u32..1 << t_pairs.len() {
                let mut g = DenseGraph::new(s + k);
                for (bit, &(i, j)) in t_pairs.iter().enumerate() {
                    if internal >> bit & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
                for (x, &hood) in chain.iter().enumerate() {
                    for t in iter_bits(hood) {
                        g.add_edge(s + x, t);
                    }
                }
                if !g.is_connected() || g.transversal_number() != s || !g.is_tau_critical() {
                    continue;
                }
                if seen.insert(canonical_code(&g)) {
                    out.push(g);
                }
            }
        }
    }
    out.sort_by_key(canonical_code);
    out
}

/// All transversal-critical graphs with transversal number `t` on at most
/// `vmax` vertices, up to isomorphism: disjoint unions of connected
/// critical pieces whose transversal numbers sum to `t`.
#[must_use]
pub fn enumerate_tau_critical(t: usize, vmax: usize) -> Vec<LoopGraph> {
    assert!(t >= 1, "transversal number at least 1");
    assert!(
        vmax <= 2 * t,
        "critical graphs never exceed twice their transversal number"
    );
    let mut pieces: Vec<(usize, DenseGraph)> = Vec::new();
    for s in 1..=t {
        for g in connected_tau_critical(s, vmax.min(2 * s)) {
            pieces.push((s, g));
        }
    }
    let mut unions: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    fn rec(
        pieces: &[(usize, DenseGraph)],
        from: usize,
        t_left: usize,
        v_left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if t_left == 0 {
            out.push(current.clone());
            return;
        }
        for i in from..pieces.len() {
            let (s, ref g) = pieces[i];
            if s <= t_left && g.n() <= v_left {
                current.push(i);
                rec(pieces, i, t_left - s, v_left - g.n(), current, out);
                current.pop();
            }
        }
    }
    rec(&pieces, 0, t, vmax, &mut current, &mut unions);
    let mut graphs: Vec<LoopGraph> = unions
        .into_iter()
        .map(|idx| {
            let mut g = LoopGraph::new();
            for (which, &i) in idx.iter().enumerate() {
                let prefix = (b'a' + which as u8) as char;
                let piece = &pieces[i].1;
                for (u, v) in piece.all_edges() {
                    g.add_edge(&format!("{prefix}{u}"), &format!("{prefix}{v}"));
                }
            }
            g
        })
        .collect();
    graphs.sort_by_key(LoopGraph::canonical_code);
    graphs
}

fn require_critical(g: &LoopGraph) -> Result<(), CaseError> {
    if g.is_tau_critical() {
        Ok(())
    } else {
        Err(CaseError::PreconditionFailed {
            reason: "graph is not transversal-critical".to_owned(),
        })
    }
}

/// Order bound for critical graphs: at most twice the transversal number
/// of vertices.
pub fn erdos_gallai_check(g: &LoopGraph) -> Result<bool, CaseError> {
    require_critical(g)?;
    Ok(g.support().len() <= 2 * g.transversal_number())
}

/// Combined bound for critical graphs: vertices plus edges at most
/// C(tau+2, 2).
pub fn gyarfas_lehel_check(g: &LoopGraph) -> Result<bool, CaseError> {
    require_critical(g)?;
    let tau = g.transversal_number();
    Ok(g.vertex_count() + g.edge_count() <= choose2(tau + 2))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step2Entry {
    pub graph: LoopGraph,
    pub vertices: usize,
    pub edges: usize,
    pub value: usize,
    pub limit: usize,
}

impl Step2Entry {
    #[must_use]
    pub fn margin(&self) -> usize {
        self.limit - self.value
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step2Report {
    pub m: usize,
    /// Critical graphs at transversal number m+1, checked against 2(m+1).
    pub tau_above: Vec<Step2Entry>,
    /// Critical graphs at transversal number m, checked against C(m+2,2)
    /// on vertices plus edges.
    pub tau_equal: Vec<Step2Entry>,
}

/// Enumerate both critical families for the second stage and check every
/// member against its bound; `vmax` caps the enumeration orders (pass
/// 2(m+1) for the full range).
pub fn step2_verify(m: usize, vmax: usize) -> Result<Step2Report, CaseError> {
    if m < 2 {
        return Err(CaseError::OutOfRange { m });
    }
    let cap = choose2(m + 2);
    if 2 * (m + 1) > cap {
        return Err(CaseError::BoundViolation {
            witness: "arithmetic: 2(m+1) vs C(m+2,2)".to_owned(),
            value: 2 * (m + 1),
            limit: cap,
        });
    }
    let mut tau_above = Vec::new();
    for g in enumerate_tau_critical(m + 1, vmax.min(2 * (m + 1))) {
        let value = g.vertex_count();
        let limit = 2 * (m + 1);
        if value > limit {
            return Err(CaseError::BoundViolation {
                witness: g.to_edge_list(),
                value,
                limit,
            });
        }
        tau_above.push(Step2Entry {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            value,
            limit,
            graph: g,
        });
    }
    let mut tau_equal = Vec::new();
    for g in enumerate_tau_critical(m, vmax.min(2 * m)) {
        let value = g.vertex_count() + g.edge_count();
        if value > cap {
            return Err(CaseError::BoundViolation {
                witness: g.to_edge_list(),
                value,
                limit: cap,
            });
        }
        tau_equal.push(Step2Entry {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            value,
            limit: cap,
            graph: g,
        });
    }
    Ok(Step2Report {
        m,
        tau_above,
        tau_equal,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CoreClass {
    K4,
    C5,
    Triangle,
    Acyclic,
}

impl fmt::Display for CoreClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoreClass::K4 => "K4",
            CoreClass::C5 => "C5",
            CoreClass::Triangle => "TRIANGLE",
            CoreClass::Acyclic => "ACYCLIC",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseCandidate {
    pub graph: LoopGraph,
    pub m: usize,
    pub core: CoreClass,
    pub weights: BTreeMap<(String, String), i64>,
    pub bound: usize,
}

fn k4_pattern() -> LoopGraph {
    LoopGraph::from_pairs(&[
        ("1", "2"),
        ("1", "3"),
        ("1", "4"),
        ("2", "3"),
        ("2", "4"),
        ("3", "4"),
    ])
}

fn c5_pattern() -> LoopGraph {
    LoopGraph::from_pairs(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")])
}

fn k3_pattern() -> LoopGraph {
    LoopGraph::from_pairs(&[("1", "2"), ("2", "3"), ("1", "3")])
}

/// Strongest core structure a loop-free graph contains, checked in the
/// order K4, C5, triangle. Everything else falls through to ACYCLIC,
/// including the square-bearing candidates with none of the three cores.
#[must_use]
pub fn classify(g: &LoopGraph) -> CoreClass {
    if g.contains_subgraph(&k4_pattern()) {
        CoreClass::K4
    } else if g.contains_subgraph(&c5_pattern()) {
        CoreClass::C5
    } else if g.contains_subgraph(&k3_pattern()) {
        CoreClass::Triangle
    } else {
        CoreClass::Acyclic
    }
}

/// Every graph with transversal number 3 and all edge weights positive at
/// deficiency 4, up to isomorphism, classified by first match in the
/// order K4, C5, TRIANGLE, ACYCLIC.
///
/// Search frame: fix a minimum cover T of size 3. Outside vertices are
/// pairwise nonadjacent with nonempty neighbourhoods inside T, so they
/// fall into seven classes by neighbourhood. A cover vertex adjacent to
/// five or more outside vertices kills a weight (truncating one of those
/// edges leaves four loops, so the weight drops to zero or below), which
/// caps each cover vertex at four outside neighbours and the order at 15.
/// Scanning all class-count tuples against all inside-T edge sets is
/// therefore exhaustive for positive-weight candidates.
#[must_use]
pub fn enumerate_case_candidates(m: usize) -> Vec<CaseCandidate> {
    assert_eq!(m, 4, "the case split applies to deficiency 4 only");
    let hoods: [u32; 7] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
    let t_pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut seen = BTreeSet::new();
    let mut survivors: Vec<DenseGraph> = Vec::new();
    let mut counts = [0usize; 7];
    'odometer: loop {
        let s1 = counts[0] + counts[3] + counts[4] + counts[6];
        let s2 = counts[1] + counts[3] + counts[5] + counts[6];
        let s3 = counts[2] + counts[4] + counts[5] + counts[6];
        if s1 <= 4 && s2 <= 4 && s3 <= 4 {
            let outside: usize = counts.iter().sum();
            for internal in 0u32..8 {
                let mut g = DenseGraph::new(3 + outside);
                for (bit, &(i, j)) in t_pairs.iter().enumerate() {
                    if internal >> bit & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
                let mut next = 3;
                for (class, &count) in counts.iter().enumerate() {
                    for _ in 0..count {
                        for t in iter_bits(hoods[class]) {
                            g.add_edge(next, t);
                        }
                        next += 1;
                    }
                }
                if g.transversal_number() != 3 {
                    continue;
                }
                if !seen.insert(canonical_code(&g)) {
                    continue;
                }
                survivors.push(g);
            }
        }
        for d in 0..7 {
            counts[d] += 1;
            if counts[d] <= 4 {
                continue 'odometer;
            }
            counts[d] = 0;
        }
        break;
    }
    let mut out = Vec::new();
    for dense in survivors {
        let labels: Vec<String> = (0..dense.n()).map(|i| format!("g{i:02}")).collect();
        let graph = LoopGraph::from_dense(&dense, &labels);
        let ctx = WeightedContext::new(graph.clone(), m);
        if ctx.min_weight().is_none_or(|w| w < 1) {
            continue;
        }
        let bound = graph.support().len() + ctx.weights.values().sum::<i64>() as usize;
        out.push(CaseCandidate {
            core: classify(&graph),
            graph,
            m,
            weights: ctx.weights,
            bound,
        });
    }
    out.sort_by(|a, b| {
        (a.core, a.bound, a.graph.canonical_code())
            .cmp(&(b.core, b.bound, b.graph.canonical_code()))
    });
    out
}

/// Sorted bound multiset per core class name.
#[must_use]
pub fn bounds_by_class(candidates: &[CaseCandidate]) -> BTreeMap<String, Vec<usize>> {
    let mut out: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for c in candidates {
        out.entry(c.core.to_string()).or_default().push(c.bound);
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}
