//! Canonical forms for loop graphs.
//!
//! Equitable colour refinement plus individualisation backtracking, taking
//! the lexicographically least leaf code. Isolated vertices carry no
//! structure, so they are counted and factored out before the search. Cells
//! of pairwise true twins are collapsed to a single branch: exchanging two
//! twins is an automorphism, so exploring more than one member of such a
//! cell can never improve the minimum.

use crate::graph::dense::{iter_bits, DenseGraph};

/// Total-order-comparable value identifying a loop graph up to isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u64>);

impl CanonicalCode {
    #[must_use]
    pub fn as_words(&self) -> &[u64] {
        &self.0
    }
}

#[must_use]
pub fn canonical_code(g: &DenseGraph) -> CanonicalCode {
    let support = g.support_mask();
    let core = g.induced(support);
    let mut words = vec![g.n() as u64, core.n() as u64];
    if core.n() > 0 {
        let mut best: Option<Vec<u64>> = None;
        let colours = vec![0usize; core.n()];
        search(&core, colours, &mut best);
        words.extend(best.expect("non-empty graph has at least one leaf"));
    }
    CanonicalCode(words)
}

/// Convenience wrapper: isomorphism including loops and isolated vertices.
#[must_use]
pub fn isomorphic(a: &DenseGraph, b: &DenseGraph) -> bool {
    canonical_code(a) == canonical_code(b)
}

fn search(g: &DenseGraph, mut colours: Vec<usize>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut colours);
    let n = g.n();
    let class_count = colours.iter().max().map_or(0, |&c| c + 1);
    if class_count == n {
        let code = leaf_code(g, &colours);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    // First non-singleton cell, by colour rank.
    let cell_colour = (0..class_count)
        .find(|&c| colours.iter().filter(|&&x| x == c).count() > 1)
        .expect("non-discrete colouring has a non-singleton cell");
    let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == cell_colour).collect();
    let branch: &[usize] = if all_true_twins(g, &cell) {
        &cell[..1]
    } else {
        &cell
    };
    for &u in branch {
        let mut next = colours.clone();
        next[u] = class_count; // fresh colour; refinement re-ranks
        search(g, next, best);
    }
}

/// Split colour classes by (colour, loop, multiset of neighbour colours)
/// until stable.
fn refine(g: &DenseGraph, colours: &mut Vec<usize>) {
    let n = g.n();
    loop {
        let before = colours.iter().max().map_or(0, |&c| c + 1);
        let sigs: Vec<(usize, bool, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = iter_bits(g.adjacency(v)).map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], g.has_loop(v), nb)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut c = 0;
        let mut next = vec![0usize; n];
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                c += 1;
            }
            next[order[i]] = c;
        }
        *colours = next;
        if c + 1 == before {
            return;
        }
    }
}

fn all_true_twins(g: &DenseGraph, cell: &[usize]) -> bool {
    cell.iter().all(|&u| {
        let v = cell[0];
        g.has_loop(u) == g.has_loop(v)
            && g.adjacency(u) & !(1 << v) == g.adjacency(v) & !(1 << u)
    })
}

fn leaf_code(g: &DenseGraph, colours: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut loops_new: u64 = 0;
    for v in iter_bits(g.loops()) {
        loops_new |= 1 << colours[v];
    }
    let mut inverse = vec![0usize; n];
    for v in 0..n {
        inverse[colours[v]] = v;
    }
    let mut code = Vec::with_capacity(n + 1);
    code.push(loops_new);
    for i in 0..n {
        let mut row: u64 = 0;
        for u in iter_bits(g.adjacency(inverse[i])) {
            row |= 1 << colours[u];
        }
        code.push(row);
    }
    code
}
