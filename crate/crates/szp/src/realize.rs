//! Realizing weight-extremal configurations as vertex systems, testing
//! them with the triples rule, and cross-checking the unique order-15
//! construction together with an exhaustive small-order oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cases::CaseCandidate;
use crate::hypergraph::{from_clique_family, CliqueFamily, Hypergraph3};
use crate::pairs::PairSystem;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RealizeError {
    /// The requested order exceeds the candidate's order bound, so no
    /// system on that many vertices exists.
    Infeasible { target: usize, bound: usize },
    /// Orders strictly below the bound leave the fresh-vertex counts
    /// under-determined; only the extremal order is enumerated.
    BelowBound { target: usize, bound: usize },
    /// The family lattice for the oracle search is too large to scan.
    SearchTooLarge { subsets: usize, limit: usize },
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeError::Infeasible { target, bound } => {
                write!(f, "order {target} exceeds the bound {bound}")
            }
            RealizeError::BelowBound { target, bound } => {
                write!(
                    f,
                    "order {target} is below the bound {bound}; only the extremal order is realized"
                )
            }
            RealizeError::SearchTooLarge { subsets, limit } => {
                write!(f, "{subsets} candidate cliques exceed the search limit {limit}")
            }
        }
    }
}

impl std::error::Error for RealizeError {}

/// A pair system together with the hypergraph it forces.
///
/// `hypergraph` is the closure: every triple of the ground set avoiding
/// some complement M_i is an edge, and nothing else is. Each family
/// member N_i = ground ∖ M_i is then a k-clique, where k = |ground| − m.
/// Whether some larger set is also forced into a clique is exactly what
/// [`triples_test`] decides, so constructing a `Realization` never
/// asserts that the members are maximum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    pub system: PairSystem,
    pub hypergraph: Hypergraph3,
    pub family: CliqueFamily,
    pub k: usize,
}

impl Realization {
    /// Close a pair system under the forcing rule.
    #[must_use]
    pub fn from_system(system: PairSystem) -> Realization {
        let ell = system.complements.len();
        assert!(ell <= 64, "complement masks are kept in a machine word");
        assert!(
            system.ground.len() > system.m,
            "the ground set must be larger than the complement size"
        );
        let vertices: Vec<String> = system.ground.iter().cloned().collect();
        let masks = membership_masks(&vertices, &system.complements);
        let full: u64 = if ell == 64 { u64::MAX } else { (1 << ell) - 1 };

        let mut hypergraph = Hypergraph3::new();
        for v in &vertices {
            hypergraph.add_vertex(v);
        }
        let n = vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                let mij = masks[i] | masks[j];
                for t in j + 1..n {
                    if mij | masks[t] != full {
                        hypergraph.add_triple(&vertices[i], &vertices[j], &vertices[t]);
                    }
                }
            }
        }

        let members: Vec<BTreeSet<String>> = system
            .complements
            .iter()
            .map(|m| system.ground.difference(m).cloned().collect())
            .collect();
        let family = CliqueFamily {
            ground: system.ground.clone(),
            members,
        };
        let k = system.ground.len() - system.m;
        Realization {
            system,
            hypergraph,
            family,
            k,
        }
    }

    /// JSON object combining the system, the forced triple list, and the
    /// clique family.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("system".into(), self.system.to_json());
        obj.insert(
            "triples".into(),
            serde_json::Value::String(self.hypergraph.to_triple_list()),
        );
        obj.insert("family".into(), self.family.to_json());
        obj.insert("k".into(), serde_json::Value::from(self.k));
        serde_json::Value::Object(obj)
    }
}

/// For each vertex, the bitmask of complements containing it.
fn membership_masks(vertices: &[String], complements: &[BTreeSet<String>]) -> Vec<u64> {
    vertices
        .iter()
        .map(|v| {
            let mut mask = 0u64;
            for (i, m) in complements.iter().enumerate() {
                if m.contains(v) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect()
}

/// Fresh vertex labels for the j-th pair (1-based): `j`, `j'`, `j''`, …
fn fresh_labels(index: usize, count: usize) -> Vec<String> {
    (0..count)
        .map(|c| format!("{}{}", index, "'".repeat(c)))
        .collect()
}

/// All vertex systems a candidate admits at its extremal order.
///
/// At `target_n` equal to the order bound, counting pins the shape down:
/// each complement M_j is a minimum transversal of the truncation at p_j
/// together with exactly w(p_j) fresh vertices, and the fresh parts are
/// pairwise disjoint. The only freedom is the choice of minimum
/// transversal per edge, so the result enumerates their cartesian
/// product; a single entry means the system is fully forced. Any choice
/// already satisfies the disjointness law: a pair distinct from the
/// truncated one keeps at least one endpoint, and a kept endpoint of a
/// vanished edge is a loop the transversal must contain.
pub fn forced_realization(
    cand: &CaseCandidate,
    target_n: usize,
) -> Result<Vec<Realization>, RealizeError> {
    if target_n > cand.bound {
        return Err(RealizeError::Infeasible {
            target: target_n,
            bound: cand.bound,
        });
    }
    if target_n < cand.bound {
        return Err(RealizeError::BelowBound {
            target: target_n,
            bound: cand.bound,
        });
    }
    assert!(
        cand.graph.isolated_vertices().is_empty(),
        "candidate graphs carry no isolated vertices"
    );

    let support = cand.graph.support();
    let pairs = cand.graph.simple_edges();
    let m = cand.m;

    let mut ground: BTreeSet<String> = support.clone();
    let mut transversal_choices: Vec<Vec<BTreeSet<String>>> = Vec::new();
    let mut fresh_parts: Vec<BTreeSet<String>> = Vec::new();
    for (j, (a, b)) in pairs.iter().enumerate() {
        let truncated = cand.graph.truncate(a, b).expect("pairs are edges");
        let tau = truncated.transversal_number();
        let weight = cand.weights[&(a.clone(), b.clone())];
        assert!(weight >= 1, "candidates have positive weights");
        assert_eq!(m as i64 - tau as i64, weight, "stored weight matches the truncation");

        let (dense, labels) = truncated.to_dense();
        let choices: Vec<BTreeSet<String>> = dense
            .all_min_transversals()
            .into_iter()
            .map(|mask| {
                crate::graph::dense::iter_bits(mask)
                    .map(|i| labels[i].clone())
                    .collect::<BTreeSet<String>>()
            })
            .collect();
        assert!(!choices.is_empty());
        transversal_choices.push(choices);

        let fresh: BTreeSet<String> = fresh_labels(j + 1, weight as usize).into_iter().collect();
        for z in &fresh {
            assert!(!support.contains(z), "fresh labels stay off the support");
            ground.insert(z.clone());
        }
        fresh_parts.push(fresh);
    }
    assert_eq!(ground.len(), target_n, "support plus total weight");

    let mut out = Vec::new();
    let mut pick = vec![0usize; pairs.len()];
    loop {
        let complements: Vec<BTreeSet<String>> = (0..pairs.len())
            .map(|j| {
                transversal_choices[j][pick[j]]
                    .union(&fresh_parts[j])
                    .cloned()
                    .collect()
            })
            .collect();
        for (i, (a, b)) in pairs.iter().enumerate() {
            for (j, mj) in complements.iter().enumerate() {
                let disjoint = !mj.contains(a) && !mj.contains(b);
                assert_eq!(disjoint, i == j, "transversal choices always obey the law");
            }
        }
        let system = PairSystem {
            ground: ground.clone(),
            m,
            pairs: pairs.clone(),
            complements,
        };
        out.push(Realization::from_system(system));

        let mut j = pairs.len();
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            pick[j] += 1;
            if pick[j] < transversal_choices[j].len() {
                break;
            }
            pick[j] = 0;
        }
    }
}

/// Outcome of the triples rule on a realization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Reject { witness: BTreeSet<String> },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriplesReport {
    pub k: usize,
    pub closure_triples: usize,
    /// First removal set S of size m−1 leaving four pairwise disjoint
    /// complements, if one exists; such a set already rejects, since a
    /// triple can meet at most three disjoint sets.
    pub shortcut: Option<BTreeSet<String>>,
    pub verdict: Verdict,
}

/// Search for a forced clique one larger than the family members.
///
/// A triple avoiding some M_i lies inside the clique N_i and is forced.
/// If every triple of some (k+1)-set is forced, the set is a clique
/// exceeding k and the realization is rejected, with that set as the
/// witness. The scan is exhaustive over all (m−1)-element removal sets
/// in ascending order, so the witness is deterministic; the disjointness
/// shortcut is recorded separately and never substitutes for the scan.
#[must_use]
pub fn triples_test(real: &Realization) -> TriplesReport {
    let system = &real.system;
    let ell = system.complements.len();
    assert!(ell <= 64);
    let vertices: Vec<String> = system.ground.iter().cloned().collect();
    let n = vertices.len();
    let masks = membership_masks(&vertices, &system.complements);
    let full: u64 = if ell == 64 { u64::MAX } else { (1 << ell) - 1 };

    // Triples meeting every complement; only these can stop a set from
    // being all-forced.
    let mut blockers: Vec<[usize; 3]> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mij = masks[i] | masks[j];
            for t in j + 1..n {
                if mij | masks[t] == full {
                    blockers.push([i, j, t]);
                }
            }
        }
    }

    let s_size = system.m.saturating_sub(1);
    assert!(s_size <= n);
    let removals = combinations(n, s_size);

    let mut verdict = Verdict::Pass;
    for s in &removals {
        let hit_all = blockers
            .iter()
            .all(|b| b.iter().any(|i| s.binary_search(i).is_ok()));
        if hit_all {
            let inside: BTreeSet<usize> = s.iter().copied().collect();
            let witness: BTreeSet<String> = (0..n)
                .filter(|i| !inside.contains(i))
                .map(|i| vertices[i].clone())
                .collect();
            assert_eq!(witness.len(), real.k + 1);
            verdict = Verdict::Reject { witness };
            break;
        }
    }

    let mut shortcut = None;
    'scan: for s in &removals {
        let inside: BTreeSet<usize> = s.iter().copied().collect();
        let residuals: Vec<BTreeSet<&String>> = system
            .complements
            .iter()
            .map(|m| {
                m.iter()
                    .filter(|v| {
                        let idx = vertices.binary_search(v).expect("complement in ground");
                        !inside.contains(&idx)
                    })
                    .collect()
            })
            .collect();
        if has_four_disjoint(&residuals) {
            shortcut = Some(s.iter().map(|&i| vertices[i].clone()).collect());
            break 'scan;
        }
    }
    if shortcut.is_some() {
        assert!(
            matches!(verdict, Verdict::Reject { .. }),
            "the disjointness shortcut implies a rejection"
        );
    }

    TriplesReport {
        k: real.k,
        closure_triples: real.hypergraph.triple_count(),
        shortcut,
        verdict,
    }
}

/// Does the list contain four pairwise disjoint sets?
fn has_four_disjoint(sets: &[BTreeSet<&String>]) -> bool {
    let ell = sets.len();
    if ell < 4 {
        return false;
    }
    let disjoint = |a: usize, b: usize| sets[a].intersection(&sets[b]).next().is_none();
    for a in 0..ell {
        for b in a + 1..ell {
            if !disjoint(a, b) {
                continue;
            }
            for c in b + 1..ell {
                if !(disjoint(a, c) && disjoint(b, c)) {
                    continue;
                }
                for d in c + 1..ell {
                    if disjoint(a, d) && disjoint(b, d) && disjoint(c, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// All k-element index subsets of 0..n in ascending order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        if k == 0 {
            return out;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The order-15 construction: ten 11-cliques over X ∪ Y, |X| = 10,
/// |Y| = 5, where N_i omits the i-th x-vertex and contains one pair of
/// Y-vertices.
///
/// The first five members take the cyclic pairs {y_i, y_{i+1}} and the
/// last five the diagonal pairs {y_i, y_{i+2}}, so the ten members carry
/// the ten distinct pairs of Y and every pair stays private to its
/// member. Reusing the five cyclic pairs twice instead merges the pair
/// structure and forces a 12-clique (see the tests), losing every
/// property verified below.
#[must_use]
pub fn extremal_construct() -> (Hypergraph3, CliqueFamily) {
    let x: Vec<String> = (1..=10).map(|i| format!("x{i:02}")).collect();
    let y: Vec<String> = (1..=5).map(|i| format!("y{i}")).collect();
    let mut members = Vec::new();
    for i in 0..10 {
        let pair = if i < 5 {
            [y[i].clone(), y[(i + 1) % 5].clone()]
        } else {
            [y[i - 5].clone(), y[(i - 3) % 5].clone()]
        };
        let mut n: BTreeSet<String> = x.iter().cloned().collect();
        n.remove(&x[i]);
        n.extend(pair);
        members.push(n);
    }
    let family = CliqueFamily::from_members(members);
    let ground: BTreeSet<String> = x.into_iter().chain(y).collect();
    let hypergraph = from_clique_family(&ground, &family);
    (hypergraph, family)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalReport {
    pub order: usize,
    pub omega: usize,
    pub family_size: usize,
    pub member_sizes: Vec<usize>,
    pub max_clique_count: usize,
    /// Every family member is a maximum clique.
    pub members_all_maximum: bool,
    /// The maximum cliques are precisely the family members.
    pub family_is_precisely_max: bool,
    pub family_intersection_empty: bool,
    pub max_cliques_intersection_empty: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtremalError {
    VerificationFailure { claim: String },
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::VerificationFailure { claim } => {
                write!(f, "verification failed: {claim}")
            }
        }
    }
}

impl std::error::Error for ExtremalError {}

/// Independent checks of the order-15 construction, each by exhaustive
/// search.
///
/// The load-bearing claims (order, clique number, members being cliques,
/// empty intersection) fail hard. Whether the family members are exactly
/// the maximum cliques is returned as data: the construction has five
/// maximum cliques beyond the family, so callers report that claim
/// rather than assume it.
pub fn extremal_verify(
    h: &Hypergraph3,
    f: &CliqueFamily,
) -> Result<ExtremalReport, ExtremalError> {
    let order = h.vertex_count();
    if order != 15 {
        return Err(ExtremalError::VerificationFailure {
            claim: format!("order is {order}, not 15"),
        });
    }
    let omega = h.clique_number();
    if omega != 11 {
        return Err(ExtremalError::VerificationFailure {
            claim: format!("clique number is {omega}, not 11"),
        });
    }
    for member in &f.members {
        if !h.is_clique(member) {
            return Err(ExtremalError::VerificationFailure {
                claim: "a family member is not a clique".into(),
            });
        }
    }
    let max_cliques = h
        .maximum_cliques(1_000_000)
        .expect("well under the clique cap");
    let member_set: BTreeSet<&BTreeSet<String>> = f.members.iter().collect();
    let max_set: BTreeSet<&BTreeSet<String>> = max_cliques.members.iter().collect();
    let members_all_maximum = member_set.is_subset(&max_set);
    let family_is_precisely_max = member_set == max_set;
    let family_intersection_empty = f.intersection().is_empty();
    if !family_intersection_empty {
        return Err(ExtremalError::VerificationFailure {
            claim: "the family has a common vertex".into(),
        });
    }
    let max_cliques_intersection_empty = max_cliques.intersection().is_empty();

    Ok(ExtremalReport {
        order,
        omega,
        family_size: f.ell(),
        member_sizes: f.members.iter().map(BTreeSet::len).collect(),
        max_clique_count: max_cliques.ell(),
        members_all_maximum,
        family_is_precisely_max,
        family_intersection_empty,
        max_cliques_intersection_empty,
    })
}

/// One survivor of the exhaustive configuration search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleSurvivor {
    pub hypergraph: Hypergraph3,
    pub family: CliqueFamily,
}

const ORACLE_SUBSET_LIMIT: usize = 25;

/// Exhaustively search all families of k-subsets of an n-set with empty
/// intersection, k = n − m, keeping those whose generated hypergraph has
/// clique number exactly k and whose maximum cliques share no vertex.
/// Survivors are reported up to isomorphism, keyed by the hypergraph.
pub fn search_configurations(
    n: usize,
    m: usize,
) -> Result<Vec<OracleSurvivor>, RealizeError> {
    assert!(n > m, "the clique size k = n - m must be positive");
    let k = n - m;
    assert!(k >= 3, "cliques below three vertices force nothing");
    let k_subsets = combinations(n, k);
    if k_subsets.len() > ORACLE_SUBSET_LIMIT {
        return Err(RealizeError::SearchTooLarge {
            subsets: k_subsets.len(),
            limit: ORACLE_SUBSET_LIMIT,
        });
    }

    // Index all triples of the n-set; each k-subset and (k+1)-subset is a
    // bitmask over that list.
    let triple_list = combinations(n, 3);
    let triple_index: BTreeMap<[usize; 3], usize> = triple_list
        .iter()
        .enumerate()
        .map(|(i, t)| ([t[0], t[1], t[2]], i))
        .collect();
    let triple_mask = |set: &[usize]| -> u64 {
        let mut mask = 0u64;
        for c in combinations(set.len(), 3) {
            let key = [set[c[0]], set[c[1]], set[c[2]]];
            mask |= 1 << triple_index[&key];
        }
        mask
    };
    let member_masks: Vec<u64> = k_subsets.iter().map(|s| triple_mask(s)).collect();
    let member_vertices: Vec<u32> = k_subsets
        .iter()
        .map(|s| s.iter().fold(0u32, |acc, &v| acc | (1 << v)))
        .collect();
    let bigger: Vec<u64> = combinations(n, k + 1)
        .iter()
        .map(|s| triple_mask(s))
        .collect();
    let vertex_members: Vec<u32> = (0..n)
        .map(|v| {
            let mut mask = 0u32;
            for (i, vm) in member_vertices.iter().enumerate() {
                if vm & (1 << v) != 0 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();

    let count = k_subsets.len();
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut survivors: Vec<OracleSurvivor> = Vec::new();
    for family in 1u32..(1 << count) {
        if vertex_members.iter().any(|&vm| family & !vm == 0) {
            continue; // some vertex lies in every member
        }
        let mut space = 0u64;
        let mut bits = family;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            space |= member_masks[i];
        }
        if bigger.iter().any(|&b| space & b == b) {
            continue; // a clique exceeds k
        }
        let mut common = (1u32 << n) - 1;
        for (i, &mm) in member_masks.iter().enumerate() {
            if space & mm == mm {
                common &= member_vertices[i];
            }
        }
        if common != 0 {
            continue; // the maximum cliques share a vertex
        }

        let mut h = Hypergraph3::new();
        for l in &labels {
            h.add_vertex(l);
        }
        for (idx, t) in triple_list.iter().enumerate() {
            if space & (1 << idx) != 0 {
                h.add_triple(&labels[t[0]], &labels[t[1]], &labels[t[2]]);
            }
        }
        if survivors
            .iter()
            .any(|s| crate::hypergraph::are_isomorphic(&s.hypergraph, &h))
        {
            continue;
        }
        let members: Vec<BTreeSet<String>> = (0..count)
            .filter(|i| family & (1 << i) != 0)
            .map(|i| k_subsets[i].iter().map(|&v| labels[v].clone()).collect())
            .collect();
        survivors.push(OracleSurvivor {
            hypergraph: h,
            family: CliqueFamily::from_members(members),
        });
    }
    Ok(survivors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::{classify, CoreClass};
    use crate::graph::LoopGraph;
    use crate::hypergraph::are_isomorphic;
    use crate::pairs::{build_system, irredundant_subfamily, private_pairs};
    use crate::weight::edge_weight;

    fn candidate(graph: LoopGraph, m: usize) -> CaseCandidate {
        let mut weights = BTreeMap::new();
        let mut total = 0i64;
        for (a, b) in graph.simple_edges() {
            let w = edge_weight(&graph, m, &a, &b).unwrap();
            total += w;
            weights.insert((a, b), w);
        }
        let bound = graph.support().len() + usize::try_from(total).unwrap();
        CaseCandidate {
            core: classify(&graph),
            graph,
            m,
            weights,
            bound,
        }
    }

    fn k4() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("g00", "g01"),
            ("g00", "g02"),
            ("g00", "g03"),
            ("g01", "g02"),
            ("g01", "g03"),
            ("g02", "g03"),
        ])
    }

    fn c5() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("y1", "y2"),
            ("y2", "y3"),
            ("y3", "y4"),
            ("y4", "y5"),
            ("y1", "y5"),
        ])
    }

    fn net() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("c1", "c2"),
            ("c1", "c3"),
            ("c2", "c3"),
            ("c1", "e1"),
            ("c2", "e2"),
            ("c3", "e3"),
        ])
    }

    fn k4_minus_with_pendant() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
            ("d", "e"),
        ])
    }

    fn k4_with_pendant() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("a", "b"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("c", "d"),
            ("c", "e"),
            ("d", "e"),
        ])
    }

    fn triple_star() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("c1", "l11"),
            ("c1", "l12"),
            ("c2", "l21"),
            ("c2", "l22"),
            ("c3", "l31"),
            ("c3", "l32"),
        ])
    }

    #[test]
    fn order_sixteen_system_is_unique_and_matches_by_hand() {
        let cand = candidate(k4(), 4);
        assert_eq!(cand.bound, 16);
        let reals = forced_realization(&cand, 16).unwrap();
        assert_eq!(reals.len(), 1, "every truncation has one minimum transversal");
        let real = &reals[0];
        assert_eq!(real.system.ground.len(), 16);
        assert_eq!(real.k, 12);

        let support = cand.graph.support();
        for (j, (a, b)) in real.system.pairs.iter().enumerate() {
            let mj = &real.system.complements[j];
            assert_eq!(mj.len(), 4);
            let support_part: BTreeSet<String> = mj.intersection(&support).cloned().collect();
            let expected: BTreeSet<String> = support
                .iter()
                .filter(|v| *v != a && *v != b)
                .cloned()
                .collect();
            assert_eq!(support_part, expected, "complement keeps the other two vertices");
            let fresh: BTreeSet<String> =
                [format!("{}", j + 1), format!("{}'", j + 1)].into_iter().collect();
            let fresh_part: BTreeSet<String> = mj.difference(&support).cloned().collect();
            assert_eq!(fresh_part, fresh);
        }

        // The family regenerates its own system: each member has a unique
        // private pair with no alternatives.
        let pp = private_pairs(&real.family).unwrap();
        for (j, p) in pp.iter().enumerate() {
            assert_eq!(p.alternatives, 0);
            assert_eq!(
                (p.pair.0.clone(), p.pair.1.clone()),
                real.system.pairs[j].clone()
            );
        }
        let rebuilt = build_system(&real.system.ground, &real.family, &pp).unwrap();
        assert_eq!(rebuilt, real.system);
    }

    #[test]
    fn order_sixteen_is_rejected_with_a_thirteen_vertex_witness() {
        let cand = candidate(k4(), 4);
        let real = forced_realization(&cand, 16).unwrap().remove(0);
        // 560 triples minus the 4 support triples and the 12 pair-plus-own-
        // fresh triples that meet every complement.
        assert_eq!(real.hypergraph.triple_count(), 544);
        let report = triples_test(&real);
        assert_eq!(report.closure_triples, 544);
        let support = cand.graph.support();
        match &report.verdict {
            Verdict::Reject { witness } => {
                assert_eq!(witness.len(), 13);
                let kept: Vec<&String> = witness.intersection(&support).collect();
                assert_eq!(kept, vec!["g03"], "first removal set is the least three");
            }
            Verdict::Pass => panic!("a thirteen-clique is forced"),
        }
        let shortcut: BTreeSet<String> =
            ["g00", "g01", "g02"].map(String::from).into_iter().collect();
        assert_eq!(report.shortcut, Some(shortcut));
    }

    #[test]
    fn five_cycle_at_fifteen_is_forced_and_rejected() {
        let cand = candidate(c5(), 4);
        assert_eq!(cand.bound, 15);
        assert_eq!(cand.core, CoreClass::C5);
        let reals = forced_realization(&cand, 15).unwrap();
        assert_eq!(reals.len(), 1);
        let real = &reals[0];

        // Truncating {y_j, y_{j+1}} loops the two outer survivors, so the
        // complement keeps exactly the two vertices not adjacent to the
        // pair's gap: {y_{j+2}, y_{j+4}}.
        let y = |i: usize| format!("y{}", (i - 1) % 5 + 1);
        for (j, (a, b)) in real.system.pairs.iter().enumerate() {
            let idx = (1..=5)
                .find(|&i| {
                    let (p, q) = (y(i), y(i + 1));
                    (&p, &q) == (a, b) || (&q, &p) == (a, b)
                })
                .expect("each pair is a cycle edge");
            let expected: BTreeSet<String> = [
                y(idx + 2),
                y(idx + 4),
                format!("{}", j + 1),
                format!("{}'", j + 1),
            ]
            .into_iter()
            .collect();
            assert_eq!(real.system.complements[j], expected);
        }

        assert_eq!(real.hypergraph.triple_count(), 440);
        let report = triples_test(&real);
        match &report.verdict {
            Verdict::Reject { witness } => {
                assert_eq!(witness.len(), 12);
                let kept: Vec<&str> = witness
                    .iter()
                    .filter(|v| v.starts_with('y'))
                    .map(String::as_str)
                    .collect();
                assert_eq!(kept, vec!["y3", "y5"], "two nonadjacent cycle vertices stay");
            }
            Verdict::Pass => panic!("a twelve-clique is forced"),
        }
        // Removing {y1, y2, y4} leaves the complements of the other four
        // pairs pairwise disjoint, so even the quick disjointness check
        // rejects this system.
        let s: BTreeSet<String> = ["y1", "y2", "y4"].map(String::from).into_iter().collect();
        assert_eq!(report.shortcut, Some(s));

        // The closure is not the order-15 construction: it has 440 forced
        // triples against 435, and only five cliques in its family.
        let (extremal, _) = extremal_construct();
        assert!(!are_isomorphic(&real.hypergraph, &extremal));
    }

    #[test]
    fn remaining_bound_fifteen_candidates_are_rejected() {
        for graph in [net(), k4_minus_with_pendant(), k4_with_pendant(), triple_star()] {
            let cand = candidate(graph, 4);
            assert_eq!(cand.bound, 15);
            let reals = forced_realization(&cand, 15).unwrap();
            for real in &reals {
                match triples_test(real).verdict {
                    Verdict::Reject { witness } => assert_eq!(witness.len(), 12),
                    Verdict::Pass => panic!("system on 15 vertices slipped through"),
                }
            }
        }
    }

    #[test]
    fn net_and_star_witnesses_drop_the_centers() {
        for (graph, centers) in [
            (net(), ["c1", "c2", "c3"]),
            (triple_star(), ["c1", "c2", "c3"]),
        ] {
            let cand = candidate(graph, 4);
            let reals = forced_realization(&cand, 15).unwrap();
            assert_eq!(reals.len(), 1);
            let report = triples_test(&reals[0]);
            let Verdict::Reject { witness } = &report.verdict else {
                panic!("rejection expected");
            };
            for c in centers {
                assert!(!witness.contains(c));
            }
            assert_eq!(witness.len(), 12);
        }
    }

    #[test]
    fn off_bound_targets_error() {
        let cand = candidate(c5(), 4);
        assert_eq!(
            forced_realization(&cand, 16),
            Err(RealizeError::Infeasible { target: 16, bound: 15 })
        );
        assert_eq!(
            forced_realization(&cand, 14),
            Err(RealizeError::BelowBound { target: 14, bound: 15 })
        );
    }

    #[test]
    fn empty_complement_rejects_immediately() {
        let ground: BTreeSet<String> =
            ["a", "b", "c", "d", "e"].map(String::from).into_iter().collect();
        let system = PairSystem {
            ground,
            m: 2,
            pairs: vec![
                ("a".into(), "b".into()),
                ("a".into(), "c".into()),
            ],
            complements: vec![
                BTreeSet::new(),
                ["b".into(), "d".into()].into_iter().collect(),
            ],
        };
        let real = Realization::from_system(system);
        assert_eq!(real.hypergraph.triple_count(), 10, "every triple is forced");
        match triples_test(&real).verdict {
            Verdict::Reject { witness } => assert_eq!(witness.len(), real.k + 1),
            Verdict::Pass => panic!("an empty complement forces everything"),
        }
    }

    #[test]
    fn construction_shape_and_count() {
        let (h, f) = extremal_construct();
        assert_eq!(h.vertex_count(), 15);
        assert_eq!(f.ell(), 10);
        for (i, member) in f.members.iter().enumerate() {
            assert_eq!(member.len(), 11);
            if i < 10 {
                assert!(!member.contains(&format!("x{:02}", i + 1)));
            }
        }
        assert!(f.intersection().is_empty());
        assert_eq!(h.triple_count(), 435);
        assert_eq!(h.clique_number(), 11);
    }

    #[test]
    fn construction_verifies_with_five_extra_maximum_cliques() {
        let (h, f) = extremal_construct();
        let report = extremal_verify(&h, &f).unwrap();
        assert_eq!(report.order, 15);
        assert_eq!(report.omega, 11);
        assert_eq!(report.family_size, 10);
        assert!(report.members_all_maximum);
        assert_eq!(report.max_clique_count, 15);
        assert!(!report.family_is_precisely_max);
        assert!(report.family_intersection_empty);
        assert!(report.max_cliques_intersection_empty);
        // The five extras are the full x-side plus one y-vertex each.
        let maxes = h.maximum_cliques(1_000_000).unwrap();
        let member_set: BTreeSet<_> = f.members.iter().cloned().collect();
        let extras: Vec<_> = maxes
            .members
            .iter()
            .filter(|m| !member_set.contains(*m))
            .collect();
        assert_eq!(extras.len(), 5);
        for extra in extras {
            let xs = extra.iter().filter(|v| v.starts_with('x')).count();
            assert_eq!((xs, extra.len()), (10, 11));
        }
    }

    #[test]
    fn repeating_the_cyclic_pairs_forces_a_twelve_clique() {
        let x: Vec<String> = (1..=10).map(|i| format!("x{i:02}")).collect();
        let y: Vec<String> = (1..=5).map(|i| format!("y{i}")).collect();
        let mut members = Vec::new();
        for i in 0..10 {
            let pair = [y[i % 5].clone(), y[(i + 1) % 5].clone()];
            let mut n: BTreeSet<String> = x.iter().cloned().collect();
            n.remove(&x[i]);
            n.extend(pair);
            members.push(n);
        }
        let family = CliqueFamily::from_members(members);
        let ground: BTreeSet<String> = x.into_iter().chain(y).collect();
        let h = from_clique_family(&ground, &family);
        assert_eq!(h.clique_number(), 12);
    }

    #[test]
    fn construction_system_passes_the_triples_test() {
        let (h, f) = extremal_construct();
        let kept = irredundant_subfamily(&f).unwrap();
        assert_eq!(kept.ell(), 10, "no member is redundant");
        let pp = private_pairs(&kept).unwrap();
        assert!(pp.iter().all(|p| p.alternatives == 0));
        let system = build_system(&kept.ground, &kept, &pp).unwrap();
        assert_eq!(system.m, 4);
        let real = Realization::from_system(system);
        assert_eq!(real.k, 11);
        assert_eq!(real.hypergraph, h, "the closure is the construction itself");
        let report = triples_test(&real);
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.shortcut.is_none());
    }

    #[test]
    fn widening_a_complement_never_forces_more() {
        let cand = candidate(c5(), 4);
        let real = forced_realization(&cand, 15).unwrap().remove(0);
        let before = real.hypergraph.triple_count();
        let mut system = real.system.clone();
        let extra = system.complements[1].iter().next().unwrap().clone();
        system.complements[0].insert(extra);
        let widened = Realization::from_system(system);
        assert!(widened.hypergraph.triple_count() <= before);
        for t in widened.hypergraph.triples() {
            assert!(real.hypergraph.triples().contains(t));
        }
    }

    #[test]
    fn oracle_confirms_the_two_pair_bound() {
        let above = search_configurations(7, 2).unwrap();
        assert!(above.is_empty(), "no configuration beats six vertices");
        let at = search_configurations(6, 2).unwrap();
        assert!(!at.is_empty(), "six vertices are attained");
        for s in &at {
            assert_eq!(s.hypergraph.clique_number(), 4);
            assert!(s.family.intersection().is_empty());
            let maxes = s.hypergraph.maximum_cliques(1_000_000).unwrap();
            assert!(maxes.intersection().is_empty());
        }
    }

    #[test]
    fn oracle_below_the_bound_finds_twelve_classes() {
        // With two fewer vertices than members require, the members are
        // bare triples; the survivors are the isomorphism classes of
        // triple sets on five vertices with no common vertex and no
        // four-clique. Computed once by this search, then pinned.
        let survivors = search_configurations(5, 2).unwrap();
        assert_eq!(survivors.len(), 12);
        for s in &survivors {
            assert_eq!(s.hypergraph.triple_count(), s.family.ell());
            assert_eq!(s.hypergraph.clique_number(), 3);
        }
    }

    #[test]
    fn oracle_guard_trips_on_wide_searches() {
        assert_eq!(
            search_configurations(30, 2),
            Err(RealizeError::SearchTooLarge { subsets: 435, limit: 25 })
        );
    }

    #[test]
    fn realization_serializes_with_all_parts() {
        let cand = candidate(c5(), 4);
        let real = forced_realization(&cand, 15).unwrap().remove(0);
        let json = real.to_json();
        assert_eq!(json["k"], 11);
        assert!(json["system"]["pairs"].is_array());
        assert!(json["triples"].as_str().unwrap().lines().count() >= 440);
        assert_eq!(json["family"].as_array().unwrap().len(), 5);
    }
}
