//! Private pairs of an irredundant clique family and the intersecting
//! (2,m)-system they generate.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::LoopGraph;
use crate::hypergraph::CliqueFamily;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairError {
    /// The input family already has a common vertex.
    NotEmptyIntersection,
    /// Irredundant reduction left fewer than three members.
    DegenerateFamily { kept: usize },
    /// Member `index` (0-based) has no pair avoiding all other members.
    NoPrivatePair { index: usize },
    /// The complements do not share a single cardinality.
    NonUniformFamily { sizes: Vec<usize> },
    /// The system law fails: pair `i` misses complement `j` with `i != j`,
    /// or meets its own complement.
    LawViolation { i: usize, j: usize },
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::NotEmptyIntersection => {
                write!(f, "family intersection is nonempty; nothing to reduce")
            }
            PairError::DegenerateFamily { kept } => {
                write!(f, "irredundant subfamily has only {kept} members; need at least 3")
            }
            PairError::NoPrivatePair { index } => {
                write!(f, "member {index} has no private pair")
            }
            PairError::NonUniformFamily { sizes } => {
                write!(f, "complement sizes differ: {sizes:?}")
            }
            PairError::LawViolation { i, j } => {
                write!(f, "pair {i} versus complement {j} breaks the disjointness law")
            }
        }
    }
}

impl std::error::Error for PairError {}

/// Lexicographically least private pair of one member, with the number of
/// other valid choices recorded for uniqueness audits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrivatePair {
    pub pair: (String, String),
    pub alternatives: usize,
}

/// Intersecting (2,m)-system: pairs p_i and complements M_i with
/// p_i disjoint from M_j exactly when i = j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSystem {
    pub ground: BTreeSet<String>,
    pub m: usize,
    pub pairs: Vec<(String, String)>,
    pub complements: Vec<BTreeSet<String>>,
}

/// Greedy removal in index order; a member goes when the rest still have
/// empty intersection. The result is audited: dropping any kept member
/// must leave a common vertex.
pub fn irredundant_subfamily(family: &CliqueFamily) -> Result<CliqueFamily, PairError> {
    assert!(family.ell() >= 2, "need at least two members");
    if !family.intersection().is_empty() {
        return Err(PairError::NotEmptyIntersection);
    }
    let mut kept: Vec<BTreeSet<String>> = family.members.clone();
    let mut i = 0;
    while i < kept.len() {
        let mut rest = kept.clone();
        rest.remove(i);
        if intersection_of(&rest).is_empty() {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    for i in 0..kept.len() {
        let mut rest = kept.clone();
        rest.remove(i);
        assert!(
            !intersection_of(&rest).is_empty(),
            "greedy reduction left a redundant member"
        );
    }
    if kept.len() < 3 {
        return Err(PairError::DegenerateFamily { kept: kept.len() });
    }
    Ok(CliqueFamily {
        ground: family.ground.clone(),
        members: kept,
    })
}

fn intersection_of(members: &[BTreeSet<String>]) -> BTreeSet<String> {
    let mut it = members.iter();
    let Some(first) = it.next() else {
        return BTreeSet::new();
    };
    let mut acc = first.clone();
    for m in it {
        acc = acc.intersection(m).cloned().collect();
    }
    acc
}

/// For each member, the lexicographically least 2-subset contained in no
/// other member.
pub fn private_pairs(family: &CliqueFamily) -> Result<Vec<PrivatePair>, PairError> {
    let mut out = Vec::new();
    for (i, member) in family.members.iter().enumerate() {
        let v: Vec<&String> = member.iter().collect();
        let mut chosen: Option<(String, String)> = None;
        let mut valid = 0usize;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                let elsewhere = family.members.iter().enumerate().any(|(j, other)| {
                    j != i && other.contains(v[a]) && other.contains(v[b])
                });
                if !elsewhere {
                    valid += 1;
                    if chosen.is_none() {
                        chosen = Some((v[a].clone(), v[b].clone()));
                    }
                }
            }
        }
        match chosen {
            Some(pair) => out.push(PrivatePair {
                pair,
                alternatives: valid - 1,
            }),
            None => return Err(PairError::NoPrivatePair { index: i }),
        }
    }
    Ok(out)
}

/// The complements M_i = V minus N_i, in family order.
#[must_use]
pub fn complements_of(ground: &BTreeSet<String>, family: &CliqueFamily) -> Vec<BTreeSet<String>> {
    family
        .members
        .iter()
        .map(|n| ground.difference(n).cloned().collect())
        .collect()
}

/// Assemble and validate the full system from a family and its private
/// pairs. The disjointness law and the truncation bound are enforced, not
/// assumed.
pub fn build_system(
    ground: &BTreeSet<String>,
    family: &CliqueFamily,
    pairs: &[PrivatePair],
) -> Result<PairSystem, PairError> {
    assert_eq!(pairs.len(), family.ell(), "one pair per member");
    let union: BTreeSet<String> = family.members.iter().flatten().cloned().collect();
    assert_eq!(
        &union, ground,
        "members must cover the ground set exactly"
    );
    let complements = complements_of(ground, family);
    let sizes: Vec<usize> = complements.iter().map(BTreeSet::len).collect();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(PairError::NonUniformFamily { sizes });
    }
    let m = sizes.first().copied().unwrap_or(0);
    let pair_sets: Vec<BTreeSet<String>> = pairs
        .iter()
        .map(|p| BTreeSet::from([p.pair.0.clone(), p.pair.1.clone()]))
        .collect();
    for (i, p) in pair_sets.iter().enumerate() {
        for (j, mj) in complements.iter().enumerate() {
            let disjoint = p.is_disjoint(mj);
            if disjoint != (i == j) {
                return Err(PairError::LawViolation { i, j });
            }
        }
    }
    let system = PairSystem {
        ground: ground.clone(),
        m,
        pairs: pairs.iter().map(|p| p.pair.clone()).collect(),
        complements,
    };
    let g = pairs_graph(&system);
    for (a, b) in &system.pairs {
        let truncated = g.truncate(a, b).expect("pair is an edge of its own graph");
        assert!(
            truncated.transversal_number() <= m,
            "truncation at a private pair exceeded the complement size"
        );
    }
    Ok(system)
}

/// The graph of the private pairs over the full ground set; complement-only
/// vertices stay as isolated vertices.
#[must_use]
pub fn pairs_graph(system: &PairSystem) -> LoopGraph {
    let mut g = LoopGraph::new();
    for v in &system.ground {
        g.add_vertex(v);
    }
    for (a, b) in &system.pairs {
        assert_ne!(a, b, "pairs are 2-sets");
        g.add_edge(a, b);
    }
    g
}

impl PairSystem {
    /// JSON object with keys "m", "pairs", "complements", "ground".
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .pairs
            .iter()
            .map(|(a, b)| serde_json::json!([a, b]))
            .collect();
        let complements: Vec<serde_json::Value> = self
            .complements
            .iter()
            .map(|m| serde_json::Value::Array(m.iter().map(|v| v.as_str().into()).collect()))
            .collect();
        let ground: Vec<serde_json::Value> =
            self.ground.iter().map(|v| v.as_str().into()).collect();
        serde_json::json!({
            "m": self.m,
            "pairs": pairs,
            "complements": complements,
            "ground": ground,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<PairSystem, String> {
        let obj = value.as_object().ok_or("expected a JSON object")?;
        let m = obj
            .get("m")
            .and_then(serde_json::Value::as_u64)
            .ok_or("missing integer key \"m\"")? as usize;
        let mut pairs = Vec::new();
        for p in obj
            .get("pairs")
            .and_then(serde_json::Value::as_array)
            .ok_or("missing array key \"pairs\"")?
        {
            let pair = p.as_array().filter(|a| a.len() == 2).ok_or("pair must be a 2-array")?;
            pairs.push((
                pair[0].as_str().ok_or("pair tokens must be strings")?.to_owned(),
                pair[1].as_str().ok_or("pair tokens must be strings")?.to_owned(),
            ));
        }
        let mut complements = Vec::new();
        for c in obj
            .get("complements")
            .and_then(serde_json::Value::as_array)
            .ok_or("missing array key \"complements\"")?
        {
            let arr = c.as_array().ok_or("complement must be an array")?;
            let mut set = BTreeSet::new();
            for tok in arr {
                set.insert(tok.as_str().ok_or("complement tokens must be strings")?.to_owned());
            }
            complements.push(set);
        }
        let mut ground = BTreeSet::new();
        for tok in obj
            .get("ground")
            .and_then(serde_json::Value::as_array)
            .ok_or("missing array key \"ground\"")?
        {
            ground.insert(tok.as_str().ok_or("ground tokens must be strings")?.to_owned());
        }
        Ok(PairSystem {
            ground,
            m,
            pairs,
            complements,
        })
    }
}
