//! 3-uniform hypergraphs: the clique predicate, exact clique number,
//! the family of maximum cliques, and construction from a clique family.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::dense::{iter_bits, masks_of_weight};
use crate::graph::ParseError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HypergraphError {
    /// The clique family would exceed the configured cap.
    TooManyCliques { cap: usize },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::TooManyCliques { cap } => {
                write!(f, "more than {cap} maximum cliques; raise the cap to enumerate them")
            }
        }
    }
}

impl std::error::Error for HypergraphError {}

pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// 3-uniform hypergraph over string labels. Triples are stored sorted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Hypergraph3 {
    vertices: BTreeSet<String>,
    triples: BTreeSet<[String; 3]>,
}

impl Hypergraph3 {
    #[must_use]
    pub fn new() -> Self {
        Hypergraph3::default()
    }

    pub fn add_vertex(&mut self, v: &str) {
        self.vertices.insert(v.to_owned());
    }

    /// Insert the triple `{a, b, c}`; the three labels must be distinct.
    pub fn add_triple(&mut self, a: &str, b: &str, c: &str) {
        assert!(a != b && b != c && a != c, "triples have three distinct vertices");
        let mut t = [a.to_owned(), b.to_owned(), c.to_owned()];
        t.sort();
        self.vertices.insert(t[0].clone());
        self.vertices.insert(t[1].clone());
        self.vertices.insert(t[2].clone());
        self.triples.insert(t);
    }

    #[must_use]
    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn triples(&self) -> &BTreeSet<[String; 3]> {
        &self.triples
    }

    #[must_use]
    pub fn triple_count(&self) -> usize {
        self.triples.len()
    }

    #[must_use]
    pub fn has_triple(&self, a: &str, b: &str, c: &str) -> bool {
        let mut t = [a.to_owned(), b.to_owned(), c.to_owned()];
        t.sort();
        self.triples.contains(&t)
    }

    /// True iff every 3-subset of `set` is a triple; sets of size at most 2
    /// qualify vacuously.
    #[must_use]
    pub fn is_clique(&self, set: &BTreeSet<String>) -> bool {
        assert!(
            set.is_subset(&self.vertices),
            "clique candidates must use existing vertices"
        );
        let v: Vec<&String> = set.iter().collect();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                for k in j + 1..v.len() {
                    if !self.triples.contains(&[v[i].clone(), v[j].clone(), v[k].clone()]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn to_dense(&self) -> (DenseHyper, Vec<String>) {
        let labels: Vec<String> = self.vertices.iter().cloned().collect();
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut d = DenseHyper::new(labels.len());
        for t in &self.triples {
            d.add_triple(
                index[t[0].as_str()],
                index[t[1].as_str()],
                index[t[2].as_str()],
            );
        }
        (d, labels)
    }

    /// Exact maximum cardinality of a clique.
    #[must_use]
    pub fn clique_number(&self) -> usize {
        self.to_dense().0.clique_number()
    }

    /// Every clique of maximum cardinality, sorted by vertex labels.
    /// Aborts with an error once more than `cap` cliques accumulate.
    pub fn maximum_cliques(&self, cap: usize) -> Result<CliqueFamily, HypergraphError> {
        let (d, labels) = self.to_dense();
        let masks = d.maximum_cliques(cap)?;
        let mut members: Vec<BTreeSet<String>> = masks
            .into_iter()
            .map(|m| iter_bits(m).map(|i| labels[i].clone()).collect())
            .collect();
        members.sort();
        Ok(CliqueFamily {
            ground: self.vertices.clone(),
            members,
        })
    }

    /// Triple-list text: one triple per line as three tokens, isolated
    /// vertices as `v <token>`, `#` comments.
    #[must_use]
    pub fn to_triple_list(&self) -> String {
        let mut out = String::new();
        for t in &self.triples {
            out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        let covered: BTreeSet<String> = self
            .triples
            .iter()
            .flat_map(|t| t.iter().cloned())
            .collect();
        for v in self.vertices.difference(&covered) {
            out.push_str(&format!("v {v}\n"));
        }
        out
    }

    pub fn parse_triple_list(text: &str) -> Result<Hypergraph3, ParseError> {
        let mut h = Hypergraph3::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", tok] => h.add_vertex(tok),
                [a, b, c] => {
                    if a == b || b == c || a == c {
                        return Err(ParseError {
                            line: i + 1,
                            message: "triple with repeated vertex".to_owned(),
                        });
                    }
                    h.add_triple(a, b, c);
                }
                _ => {
                    return Err(ParseError {
                        line: i + 1,
                        message: format!("expected three tokens, got {:?}", tokens),
                    })
                }
            }
        }
        Ok(h)
    }
}

/// Ordered family of vertex subsets over a common ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueFamily {
    pub ground: BTreeSet<String>,
    pub members: Vec<BTreeSet<String>>,
}

impl CliqueFamily {
    /// Build from explicit member lists; the ground set is their union.
    #[must_use]
    pub fn from_members(members: Vec<BTreeSet<String>>) -> Self {
        let ground = members.iter().flatten().cloned().collect();
        CliqueFamily { ground, members }
    }

    #[must_use]
    pub fn ell(&self) -> usize {
        self.members.len()
    }

    /// Intersection of all members; requires at least one member.
    #[must_use]
    pub fn intersection(&self) -> BTreeSet<String> {
        assert!(!self.members.is_empty(), "intersection of an empty family");
        let mut it = self.members.iter();
        let mut acc = it.next().unwrap().clone();
        for m in it {
            acc = acc.intersection(m).cloned().collect();
        }
        acc
    }

    #[must_use]
    pub fn is_valid(&self) -> bool {
        !self.members.is_empty()
            && self.members.iter().all(|m| m.is_subset(&self.ground))
            && {
                let distinct: BTreeSet<&BTreeSet<String>> = self.members.iter().collect();
                distinct.len() == self.members.len()
            }
    }

    /// JSON array of arrays of tokens, members in family order.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.members
                .iter()
                .map(|m| {
                    serde_json::Value::Array(
                        m.iter()
                            .map(|v| serde_json::Value::String(v.clone()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    /// Parse the array-of-arrays form; the ground set is the union of the
    /// members (isolated ground vertices are not representable here).
    pub fn from_json(value: &serde_json::Value) -> Result<CliqueFamily, String> {
        let outer = value.as_array().ok_or("expected a JSON array")?;
        let mut members = Vec::new();
        for entry in outer {
            let inner = entry.as_array().ok_or("expected an array of arrays")?;
            let mut member = BTreeSet::new();
            for tok in inner {
                member.insert(
                    tok.as_str()
                        .ok_or("expected string vertex tokens")?
                        .to_owned(),
                );
            }
            members.push(member);
        }
        Ok(CliqueFamily::from_members(members))
    }
}

/// family_intersection: set intersection of all members of `family`.
#[must_use]
pub fn family_intersection(family: &CliqueFamily) -> BTreeSet<String> {
    family.intersection()
}

/// Hypergraph whose triples are exactly those contained in some member,
/// over the given ground set.
#[must_use]
pub fn from_clique_family(ground: &BTreeSet<String>, family: &CliqueFamily) -> Hypergraph3 {
    for m in &family.members {
        assert!(m.is_subset(ground), "family member outside the ground set");
    }
    let mut h = Hypergraph3::new();
    for v in ground {
        h.add_vertex(v);
    }
    for m in &family.members {
        let v: Vec<&String> = m.iter().collect();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                for k in j + 1..v.len() {
                    h.add_triple(v[i], v[j], v[k]);
                }
            }
        }
    }
    h
}

/// Exact isomorphism test by backtracking over vertex images, pruned by
/// triple degrees and incremental triple checks.
#[must_use]
pub fn are_isomorphic(a: &Hypergraph3, b: &Hypergraph3) -> bool {
    if a.vertex_count() != b.vertex_count() || a.triple_count() != b.triple_count() {
        return false;
    }
    let (da, _) = a.to_dense();
    let (db, _) = b.to_dense();
    let mut deg_a = da.tri_degree.clone();
    let mut deg_b = db.tri_degree.clone();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    // Map high-degree vertices first; the incremental pair-link checks
    // eliminate most branches immediately.
    let mut order: Vec<usize> = (0..da.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(da.tri_degree[v]));
    let mut image = vec![usize::MAX; da.n];
    extend_iso(&da, &db, &order, 0, &mut image, 0)
}

fn extend_iso(
    a: &DenseHyper,
    b: &DenseHyper,
    order: &[usize],
    at: usize,
    image: &mut Vec<usize>,
    used: u32,
) -> bool {
    if at == order.len() {
        return true;
    }
    let p = order[at];
    'cand: for c in 0..b.n {
        if used >> c & 1 == 1 || a.tri_degree[p] != b.tri_degree[c] {
            continue;
        }
        // Triples through p and two already-mapped vertices must map to
        // triples, and non-triples to non-triples.
        for ia in 0..at {
            for ja in 0..ia {
                let (q, r) = (order[ia], order[ja]);
                let in_a = a.link(p, q) >> r & 1 == 1;
                let in_b = b.link(c, image[q]) >> image[r] & 1 == 1;
                if in_a != in_b {
                    continue 'cand;
                }
            }
        }
        image[p] = c;
        if extend_iso(a, b, order, at + 1, image, used | 1 << c) {
            return true;
        }
        image[p] = usize::MAX;
    }
    false
}

/// Index-based core: `link(i, j)` is the bitmask of third vertices.
struct DenseHyper {
    n: usize,
    link_rows: Vec<u32>,
    tri_degree: Vec<usize>,
}

impl DenseHyper {
    fn new(n: usize) -> Self {
        assert!(n <= 32, "dense hypergraph limited to 32 vertices");
        DenseHyper {
            n,
            link_rows: vec![0; n * n],
            tri_degree: vec![0; n],
        }
    }

    fn add_triple(&mut self, a: usize, b: usize, c: usize) {
        for (i, j, k) in [(a, b, c), (a, c, b), (b, c, a)] {
            self.link_rows[i * self.n + j] |= 1 << k;
            self.link_rows[j * self.n + i] |= 1 << k;
        }
        self.tri_degree[a] += 1;
        self.tri_degree[b] += 1;
        self.tri_degree[c] += 1;
    }

    fn link(&self, i: usize, j: usize) -> u32 {
        self.link_rows[i * self.n + j]
    }

    fn mask_is_clique(&self, mask: u32) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let j = others.trailing_zeros() as usize;
                others &= others - 1;
                let needed = mask & !(1 << i) & !(1 << j);
                if needed & !self.link(i, j) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Descending size scan; a vertex inside a clique of size s lies in at
    /// least C(s-1, 2) triples, which screens the candidate pool.
    fn cliques_of_max_size(&self, cap: Option<usize>) -> Result<(usize, Vec<u32>), HypergraphError> {
        for s in (3..=self.n).rev() {
            let need = (s - 1) * (s - 2) / 2;
            let allowed: Vec<usize> = (0..self.n)
                .filter(|&v| self.tri_degree[v] >= need)
                .collect();
            if allowed.len() < s {
                continue;
            }
            let mut found = Vec::new();
            for compact in masks_of_weight(allowed.len(), s) {
                let mask = iter_bits(compact).fold(0u32, |m, b| m | 1 << allowed[b]);
                if self.mask_is_clique(mask) {
                    found.push(mask);
                    if let Some(cap) = cap {
                        if found.len() > cap {
                            return Err(HypergraphError::TooManyCliques { cap });
                        }
                    }
                }
            }
            if !found.is_empty() {
                return Ok((s, found));
            }
        }
        // Vacuous cliques only.
        let omega = self.n.min(2);
        let mut found = Vec::new();
        for mask in masks_of_weight(self.n, omega) {
            found.push(mask);
            if let Some(cap) = cap {
                if found.len() > cap {
                    return Err(HypergraphError::TooManyCliques { cap });
                }
            }
        }
        Ok((omega, found))
    }

    fn clique_number(&self) -> usize {
        self.cliques_of_max_size(None).expect("uncapped").0
    }

    fn maximum_cliques(&self, cap: usize) -> Result<Vec<u32>, HypergraphError> {
        Ok(self.cliques_of_max_size(Some(cap))?.1)
    }
}
