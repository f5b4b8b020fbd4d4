//! Dense bitset graphs on up to 32 vertices.
//!
//! Vertices are the indices `0..n`. Simple edges live in per-vertex adjacency
//! masks; loops get a mask of their own. Every exact solver behind the
//! labelled interface (transversal number, criticality, canonical forms,
//! enumeration) runs on this representation.

pub const MAX_VERTICES: usize = 32;

/// Iterate the set bit positions of a mask, ascending.
pub fn iter_bits(mask: u32) -> impl Iterator<Item = usize> {
    std::iter::successors(
        if mask == 0 { None } else { Some(mask) },
        |&m| {
            let next = m & (m - 1);
            if next == 0 {
                None
            } else {
                Some(next)
            }
        },
    )
    .map(|m| m.trailing_zeros() as usize)
}

/// All masks over `width` bits with exactly `count` bits set, ascending
/// (Gosper's hack).
pub fn masks_of_weight(width: usize, count: usize) -> Vec<u32> {
    assert!(width <= MAX_VERTICES);
    if count > width {
        return Vec::new();
    }
    if count == 0 {
        return vec![0];
    }
    let limit: u64 = 1u64 << width;
    let mut out = Vec::new();
    let mut sub: u64 = (1u64 << count) - 1;
    while sub < limit {
        out.push(sub as u32);
        let low = sub & sub.wrapping_neg();
        let ripple = sub + low;
        sub = ripple | (((sub ^ ripple) >> 2) / low);
    }
    out
}

/// Graph with loops on vertex indices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DenseGraph {
    n: usize,
    adj: Vec<u32>,
    loops: u32,
}

impl DenseGraph {
    #[must_use]
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "dense graphs support at most {MAX_VERTICES} vertices"
        );
        DenseGraph {
            n,
            adj: vec![0; n],
            loops: 0,
        }
    }

    /// Build from an edge list; a pair `(v, v)` adds a loop at `v`.
    #[must_use]
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = DenseGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n);
        if u == v {
            self.loops |= 1 << u;
        } else {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub fn add_loop(&mut self, v: usize) {
        assert!(v < self.n);
        self.loops |= 1 << v;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops &= !(1 << u);
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[must_use]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.has_loop(u)
        } else {
            self.adj[u] >> v & 1 == 1
        }
    }

    #[must_use]
    pub fn has_loop(&self, v: usize) -> bool {
        self.loops >> v & 1 == 1
    }

    /// Neighbour mask of `v` (never contains `v` itself).
    #[must_use]
    pub fn adjacency(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[must_use]
    pub fn loops(&self) -> u32 {
        self.loops
    }

    /// Number of neighbours distinct from `v`; loops do not count.
    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Simple edges as pairs `(u, v)` with `u < v`, lexicographic.
    #[must_use]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in iter_bits(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Loops and simple edges together, loops encoded as `(v, v)`.
    #[must_use]
    pub fn all_edges(&self) -> Vec<(usize, usize)> {
        let mut out = self.edges();
        out.extend(iter_bits(self.loops).map(|v| (v, v)));
        out.sort_unstable();
        out
    }

    #[must_use]
    pub fn simple_edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    #[must_use]
    pub fn loop_count(&self) -> usize {
        self.loops.count_ones() as usize
    }

    /// Mask of vertices incident to at least one edge or loop.
    #[must_use]
    pub fn support_mask(&self) -> u32 {
        let mut s = self.loops;
        for v in 0..self.n {
            if self.adj[v] != 0 {
                s |= 1 << v;
            }
        }
        s
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Induced subgraph on the masked vertices, relabelled compactly to
    /// `0..popcount` preserving index order.
    #[must_use]
    pub fn induced(&self, mask: u32) -> DenseGraph {
        let kept: Vec<usize> = iter_bits(mask).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = DenseGraph::new(kept.len());
        for (i, &v) in kept.iter().enumerate() {
            if self.has_loop(v) {
                g.add_loop(i);
            }
            for u in iter_bits(self.adj[v] & mask) {
                if u > v {
                    g.add_edge(i, pos[u]);
                }
            }
        }
        g
    }

    /// Relabel by `perm` (old index -> new index; must be a permutation).
    #[must_use]
    pub fn permuted(&self, perm: &[usize]) -> DenseGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = DenseGraph::new(self.n);
        for v in iter_bits(self.loops) {
            g.add_loop(perm[v]);
        }
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Exact transversal number: minimum number of vertices meeting every
    /// edge, where a loop is met only by its own vertex.
    #[must_use]
    pub fn transversal_number(&self) -> usize {
        // Loops force their vertices into any transversal; the rest is a
        // minimum vertex cover instance on the surviving simple edges.
        let forced = self.loops;
        let mut adj: Vec<u32> = self.adj.iter().map(|&a| a & !forced).collect();
        for v in iter_bits(forced) {
            adj[v] = 0;
        }
        let mut best = adj.iter().filter(|&&a| a != 0).count();
        Self::cover_search(adj, 0, &mut best);
        forced.count_ones() as usize + best
    }

    /// Branch and bound minimum vertex cover on a loop-free adjacency table.
    fn cover_search(mut adj: Vec<u32>, mut current: usize, best: &mut usize) {
        loop {
            if current >= *best {
                return;
            }
            // Pendant reduction: an edge at a degree-1 vertex is covered
            // optimally by the other endpoint.
            let mut reduced = false;
            for v in 0..adj.len() {
                if adj[v].count_ones() == 1 {
                    let u = adj[v].trailing_zeros() as usize;
                    Self::delete_vertex(&mut adj, u);
                    current += 1;
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                break;
            }
        }
        if current >= *best {
            return;
        }
        let Some(v) = (0..adj.len())
            .filter(|&v| adj[v] != 0)
            .max_by_key(|&v| adj[v].count_ones())
        else {
            *best = current;
            return;
        };
        // Any matching lower-bounds the cover.
        if current + Self::greedy_matching(&adj) >= *best {
            return;
        }
        let mut with_v = adj.clone();
        Self::delete_vertex(&mut with_v, v);
        Self::cover_search(with_v, current + 1, best);
        // v stays outside, so its whole neighbourhood goes in.
        let nb: Vec<usize> = iter_bits(adj[v]).collect();
        let mut without_v = adj;
        for &u in &nb {
            Self::delete_vertex(&mut without_v, u);
        }
        Self::cover_search(without_v, current + nb.len(), best);
    }

    fn delete_vertex(adj: &mut [u32], v: usize) {
        for u in iter_bits(adj[v]) {
            adj[u] &= !(1 << v);
        }
        adj[v] = 0;
    }

    fn greedy_matching(adj: &[u32]) -> usize {
        let mut used: u32 = 0;
        let mut size = 0;
        for u in 0..adj.len() {
            if used >> u & 1 == 1 {
                continue;
            }
            let free = adj[u] & !used;
            if free != 0 {
                let v = free.trailing_zeros() as usize;
                used |= (1 << u) | (1 << v);
                size += 1;
            }
        }
        size
    }

    /// Every minimum transversal, as vertex masks, ascending.
    #[must_use]
    pub fn all_min_transversals(&self) -> Vec<u32> {
        let t = self.transversal_number();
        let forced = self.loops;
        let free_picks = t - forced.count_ones() as usize;
        // Only non-forced support vertices can appear in a minimum
        // transversal: anything else could be dropped.
        let cand: Vec<usize> = iter_bits(self.support_mask() & !forced).collect();
        let edges = self.edges();
        let mut out = Vec::new();
        for sub in masks_of_weight(cand.len(), free_picks) {
            let mut mask = forced;
            for i in iter_bits(sub) {
                mask |= 1 << cand[i];
            }
            if edges
                .iter()
                .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            {
                out.push(mask);
            }
        }
        out
    }

    /// No isolated vertices, and removing any edge (loops included) lowers
    /// the transversal number.
    #[must_use]
    pub fn is_tau_critical(&self) -> bool {
        if self.support_mask().count_ones() as usize != self.n {
            return false;
        }
        let t = self.transversal_number();
        for (u, v) in self.all_edges() {
            let mut g = self.clone();
            g.remove_edge(u, v);
            if g.transversal_number() >= t {
                return false;
            }
        }
        true
    }
}
