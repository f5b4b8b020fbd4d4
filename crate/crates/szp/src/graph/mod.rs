//! Labelled graphs with loops and the exact operations the bound machinery
//! needs: transversal numbers, edge removal, truncation, support,
//! criticality, canonical codes, subgraph containment.

pub mod canon;
pub mod dense;
pub mod enumerate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::canon::{canonical_code, CanonicalCode};
use crate::graph::dense::{iter_bits, DenseGraph};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    MissingEdge { u: String, v: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::MissingEdge { u, v } => write!(f, "no edge {{{u}, {v}}} in the graph"),
        }
    }
}

impl std::error::Error for GraphError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Finite graph over opaque string labels; an edge `{v, v}` is a loop at `v`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LoopGraph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
}

fn norm(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

impl LoopGraph {
    #[must_use]
    pub fn new() -> Self {
        LoopGraph::default()
    }

    /// Build from simple string pairs; a repeated token makes a loop.
    #[must_use]
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Self {
        let mut g = LoopGraph::new();
        for &(u, v) in pairs {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: &str) {
        self.vertices.insert(v.to_owned());
    }

    /// Insert the edge `{u, v}` (a loop when `u == v`), adding endpoints as
    /// needed.
    pub fn add_edge(&mut self, u: &str, v: &str) {
        self.vertices.insert(u.to_owned());
        self.vertices.insert(v.to_owned());
        self.edges.insert(norm(u, v));
    }

    #[must_use]
    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// All edges, loops included, in sorted order.
    #[must_use]
    pub fn edges(&self) -> &BTreeSet<(String, String)> {
        &self.edges
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn simple_edges(&self) -> Vec<(String, String)> {
        self.edges.iter().filter(|(u, v)| u != v).cloned().collect()
    }

    #[must_use]
    pub fn simple_edge_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u != v).count()
    }

    #[must_use]
    pub fn loop_vertices(&self) -> Vec<String> {
        self.edges
            .iter()
            .filter(|(u, v)| u == v)
            .map(|(u, _)| u.clone())
            .collect()
    }

    #[must_use]
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    #[must_use]
    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    #[must_use]
    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains(&norm(u, v))
    }

    #[must_use]
    pub fn has_loop(&self, v: &str) -> bool {
        self.has_edge(v, v)
    }

    /// Neighbours distinct from `v`; loops do not contribute.
    #[must_use]
    pub fn neighbors(&self, v: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for (a, b) in &self.edges {
            if a == v && b != v {
                out.insert(b.clone());
            } else if b == v && a != v {
                out.insert(a.clone());
            }
        }
        out
    }

    /// Number of distinct neighbours; loops do not count.
    #[must_use]
    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).len()
    }

    /// Union of all edge endpoints (a loop at `v` contributes `v`).
    #[must_use]
    pub fn support(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for (u, v) in &self.edges {
            out.insert(u.clone());
            out.insert(v.clone());
        }
        out
    }

    #[must_use]
    pub fn isolated_vertices(&self) -> BTreeSet<String> {
        let support = self.support();
        self.vertices.difference(&support).cloned().collect()
    }

    /// Same vertices, edges minus `{u, v}`; vertices made isolated stay.
    pub fn remove_edge(&self, u: &str, v: &str) -> Result<LoopGraph, GraphError> {
        let key = norm(u, v);
        if !self.edges.contains(&key) {
            return Err(GraphError::MissingEdge {
                u: key.0,
                v: key.1,
            });
        }
        let mut g = self.clone();
        g.edges.remove(&key);
        Ok(g)
    }

    /// Truncation: delete both endpoints of the non-loop edge `{a, b}`;
    /// every other edge keeps its surviving endpoints, an edge reduced to a
    /// single endpoint `c` becomes the loop `{c, c}`, and an edge inside
    /// `{a, b}` vanishes. Duplicates collapse under set semantics.
    pub fn truncate(&self, a: &str, b: &str) -> Result<LoopGraph, GraphError> {
        assert!(a != b, "truncation is defined for non-loop edges");
        let key = norm(a, b);
        if !self.edges.contains(&key) {
            return Err(GraphError::MissingEdge {
                u: key.0,
                v: key.1,
            });
        }
        let mut g = LoopGraph::new();
        for v in &self.vertices {
            if v != a && v != b {
                g.add_vertex(v);
            }
        }
        for (u, v) in &self.edges {
            let u_gone = u == a || u == b;
            let v_gone = v == a || v == b;
            match (u_gone, v_gone) {
                (false, false) => g.add_edge(u, v),
                (false, true) => g.add_edge(u, u),
                (true, false) => g.add_edge(v, v),
                (true, true) => {}
            }
        }
        Ok(g)
    }

    /// Map to the dense solver representation plus the label table
    /// (index -> label, sorted order).
    #[must_use]
    pub fn to_dense(&self) -> (DenseGraph, Vec<String>) {
        let labels: Vec<String> = self.vertices.iter().cloned().collect();
        assert!(
            labels.len() <= dense::MAX_VERTICES,
            "graph too large for the dense solver"
        );
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut g = DenseGraph::new(labels.len());
        for (u, v) in &self.edges {
            g.add_edge(index[u.as_str()], index[v.as_str()]);
        }
        (g, labels)
    }

    /// Rebuild a labelled graph from the dense form and a label table.
    #[must_use]
    pub fn from_dense(g: &DenseGraph, labels: &[String]) -> LoopGraph {
        assert_eq!(g.n(), labels.len());
        let mut out = LoopGraph::new();
        for l in labels {
            out.add_vertex(l);
        }
        for (u, v) in g.all_edges() {
            out.add_edge(&labels[u], &labels[v]);
        }
        out
    }

    /// Exact minimum size of a vertex set meeting every edge; a loop is met
    /// only by its own vertex.
    #[must_use]
    pub fn transversal_number(&self) -> usize {
        self.to_dense().0.transversal_number()
    }

    /// Every minimum transversal as a sorted list of sorted label sets.
    #[must_use]
    pub fn all_min_transversals(&self) -> Vec<BTreeSet<String>> {
        let (g, labels) = self.to_dense();
        g.all_min_transversals()
            .into_iter()
            .map(|mask| iter_bits(mask).map(|i| labels[i].clone()).collect())
            .collect()
    }

    /// No isolated vertex, and the removal of every edge decreases the
    /// transversal number.
    #[must_use]
    pub fn is_tau_critical(&self) -> bool {
        self.to_dense().0.is_tau_critical()
    }

    #[must_use]
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(&self.to_dense().0)
    }

    /// True iff some (not necessarily induced) subgraph of `self` is
    /// isomorphic to the loop-free `pattern`.
    #[must_use]
    pub fn contains_subgraph(&self, pattern: &LoopGraph) -> bool {
        assert_eq!(pattern.loop_count(), 0, "pattern must be loop-free");
        let (pd, _) = pattern.to_dense();
        let (gd, _) = self.to_dense();
        if pd.n() > gd.n() || pd.simple_edge_count() > gd.simple_edge_count() {
            return false;
        }
        // Pattern vertices in descending degree order fail fastest.
        let mut order: Vec<usize> = (0..pd.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pd.degree(v)));
        let mut image = vec![usize::MAX; pd.n()];
        embed(&pd, &gd, &order, 0, &mut image, 0)
    }

    /// True iff the graph contains any cycle; a loop counts as a cycle.
    #[must_use]
    pub fn has_cycle(&self) -> bool {
        if self.loop_count() > 0 {
            return true;
        }
        let (g, _) = self.to_dense();
        // A forest has strictly fewer edges than vertices in every
        // component; count per component via DFS.
        let mut seen: u32 = 0;
        for start in 0..g.n() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut stack = vec![(start, usize::MAX)];
            let mut component = 0u32;
            let mut edges = 0usize;
            while let Some((v, _)) = stack.pop() {
                if component >> v & 1 == 1 {
                    continue;
                }
                component |= 1 << v;
                edges += g.degree(v);
                for u in iter_bits(g.adjacency(v)) {
                    if component >> u & 1 == 0 {
                        stack.push((u, v));
                    }
                }
            }
            seen |= component;
            if edges / 2 >= component.count_ones() as usize {
                return true;
            }
        }
        false
    }

    /// Edge-list text: `u v` per edge, a loop written as the token twice,
    /// isolated vertices as `v <token>`, `#` comments. The literal label
    /// `v` is reserved: the line `v v` reads back as a loop at `v`.
    #[must_use]
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        for v in self.isolated_vertices() {
            out.push_str(&format!("v {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<LoopGraph, ParseError> {
        let mut g = LoopGraph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", tok] if *tok != "v" => g.add_vertex(tok),
                [u, v] => g.add_edge(u, v),
                _ => {
                    return Err(ParseError {
                        line: i + 1,
                        message: format!("expected two tokens, got {:?}", tokens),
                    })
                }
            }
        }
        Ok(g)
    }
}

fn embed(
    pattern: &DenseGraph,
    host: &DenseGraph,
    order: &[usize],
    at: usize,
    image: &mut Vec<usize>,
    used: u32,
) -> bool {
    if at == order.len() {
        return true;
    }
    let p = order[at];
    for candidate in 0..host.n() {
        if used >> candidate & 1 == 1 || host.degree(candidate) < pattern.degree(p) {
            continue;
        }
        let ok = iter_bits(pattern.adjacency(p)).all(|q| {
            image[q] == usize::MAX || host.has_edge(candidate, image[q])
        });
        if ok {
            image[p] = candidate;
            if embed(pattern, host, order, at + 1, image, used | 1 << candidate) {
                return true;
            }
            image[p] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> LoopGraph {
        LoopGraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
    }

    fn k4() -> LoopGraph {
        LoopGraph::from_pairs(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ])
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(c5().transversal_number(), 3);
        let mut edgeless = LoopGraph::new();
        for v in ["p", "q", "r", "s"] {
            edgeless.add_vertex(v);
        }
        assert_eq!(edgeless.transversal_number(), 0);
        let mut g = LoopGraph::from_pairs(&[("u", "w")]);
        g.add_edge("w", "w");
        assert_eq!(g.transversal_number(), 1);
    }

    #[test]
    fn remove_edge_keeps_vertices() {
        let g = k4();
        let h = g.remove_edge("a", "b").unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.simple_edge_count(), 5);
        assert_eq!(g.transversal_number(), 3);
        assert_eq!(h.transversal_number(), 2);
        let single = LoopGraph::from_pairs(&[("u", "w")]);
        let bare = single.remove_edge("u", "w").unwrap();
        assert_eq!(bare.vertex_count(), 2);
        assert_eq!(bare.edge_count(), 0);
        assert!(matches!(
            single.remove_edge("u", "x"),
            Err(GraphError::MissingEdge { .. })
        ));
        // C5 minus an edge is P5.
        let p5 = c5().remove_edge("a", "b").unwrap();
        assert_eq!(p5.transversal_number(), 2);
    }

    #[test]
    fn truncation_examples() {
        // C5 cut at {a, b}: path c-d-e with loops at c and e.
        let t = c5().truncate("a", "b").unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert!(t.has_loop("c") && t.has_loop("e"));
        assert!(t.has_edge("c", "d") && t.has_edge("d", "e"));
        assert_eq!(t.transversal_number(), 2);
        // K3 collapses to a single looped vertex.
        let k3 = LoopGraph::from_pairs(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let t = k3.truncate("a", "b").unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert!(t.has_loop("c"));
        assert_eq!(t.transversal_number(), 1);
        // Disjoint edges are untouched.
        let m3 = LoopGraph::from_pairs(&[("a", "b"), ("c", "d"), ("e", "f")]);
        let t = m3.truncate("a", "b").unwrap();
        assert_eq!(t.simple_edge_count(), 2);
        assert_eq!(t.loop_count(), 0);
        assert_eq!(t.transversal_number(), 2);
        assert!(m3.truncate("a", "c").is_err());
    }

    #[test]
    fn support_and_isolated() {
        assert_eq!(c5().support().len(), 5);
        let mut g = k4();
        g.add_vertex("x");
        g.add_vertex("y");
        assert_eq!(g.support().len(), 4);
        assert_eq!(g.isolated_vertices().len(), 2);
        let mut empty = LoopGraph::new();
        empty.add_vertex("z");
        assert!(empty.support().is_empty());
    }

    #[test]
    fn criticality_examples() {
        assert!(k4().is_tau_critical());
        assert!(!LoopGraph::from_pairs(&[("a", "b"), ("b", "c")]).is_tau_critical());
        let m3 = LoopGraph::from_pairs(&[("a", "b"), ("c", "d"), ("e", "f")]);
        assert!(m3.is_tau_critical());
    }

    #[test]
    fn subgraph_containment() {
        let k3 = LoopGraph::from_pairs(&[("1", "2"), ("2", "3"), ("1", "3")]);
        assert!(k4().contains_subgraph(&k3));
        assert!(!c5().contains_subgraph(&k4()));
        let k2_c3 = LoopGraph::from_pairs(&[("u", "w"), ("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(!k2_c3.contains_subgraph(&c5()));
        assert!(k2_c3.contains_subgraph(&k3));
    }

    #[test]
    fn cycles() {
        assert!(c5().has_cycle());
        assert!(!LoopGraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d")]).has_cycle());
        let mut looped = LoopGraph::new();
        looped.add_edge("a", "a");
        assert!(looped.has_cycle());
        // Two disjoint paths: still a forest.
        assert!(!LoopGraph::from_pairs(&[("a", "b"), ("c", "d")]).has_cycle());
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = c5();
        g.add_vertex("lonely");
        g.add_edge("b", "b");
        let text = g.to_edge_list();
        let back = LoopGraph::parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
        let commented = format!("# weights come later\n{text}\n");
        assert_eq!(LoopGraph::parse_edge_list(&commented).unwrap(), g);
        assert!(LoopGraph::parse_edge_list("a b c").is_err());
    }

    #[test]
    fn canonical_codes_respect_labels_only() {
        let other = LoopGraph::from_pairs(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")]);
        assert_eq!(c5().canonical_code(), other.canonical_code());
        assert_ne!(c5().canonical_code(), k4().canonical_code());
    }

    #[test]
    fn truncation_support_shrinks() {
        let g = k4();
        let t = g.truncate("a", "b").unwrap();
        assert!(t.support().is_subset(&g.support()));
        assert!(!t.support().contains("a") && !t.support().contains("b"));
        let r = g.remove_edge("a", "b").unwrap();
        assert!(r.support().is_subset(&g.support()));
    }
}
