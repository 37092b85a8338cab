//! Branch-and-bound clique search with greedy-coloring bounds.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};

/// Clique number together with the lexicographically least maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let all: Vec<usize> = (0..g.n()).collect();
    let c = max_clique_within(g, &all);
    (c.len(), c)
}

/// Lexicographically least maximum clique among the vertices of `set`.
pub fn max_clique_within(g: &Graph, set: &[usize]) -> VertexSet {
    let mut cand = FixedBitSet::with_capacity(g.n());
    for &v in set {
        cand.insert(v);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, cand, &mut best);
    best
}

// Cliques are explored in lexicographic order of their sorted vertex lists and
// `best` only changes on a strict improvement, so the first maximum clique met
// is the lexicographically least one.
fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    while let Some(v) = cand.ones().next() {
        if current.len() + color_bound(g, &cand) <= best.len() {
            return;
        }
        let mut next = cand.clone();
        next.intersect_with(g.neighbor_set(v));
        current.push(v);
        expand(g, current, next, best);
        current.pop();
        cand.set(v, false);
    }
}

/// Number of colors a greedy sequential coloring uses on `cand`.
fn color_bound(g: &Graph, cand: &FixedBitSet) -> usize {
    let mut left = cand.clone();
    let mut colors = 0;
    while let Some(_) = left.ones().next() {
        colors += 1;
        let mut avail = left.clone();
        while let Some(v) = avail.ones().next() {
            left.set(v, false);
            avail.set(v, false);
            avail.difference_with(g.neighbor_set(v));
        }
    }
    colors
}

/// All cliques of exactly `size` vertices, each sorted, in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.insert_range(..);
    let mut current = Vec::new();
    collect(g, &mut current, cand, size, &mut out);
    out
}

fn collect(g: &Graph, current: &mut Vec<usize>, mut cand: FixedBitSet, size: usize, out: &mut Vec<VertexSet>) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    while let Some(v) = cand.ones().next() {
        if current.len() + color_bound(g, &cand) < size {
            return;
        }
        let mut next = cand.clone();
        next.intersect_with(g.neighbor_set(v));
        current.push(v);
        collect(g, current, next, size, out);
        current.pop();
        cand.set(v, false);
    }
}

/// A maximum independent set (lexicographically least among maximum ones).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let all: Vec<usize> = (0..g.n()).collect();
    maximum_independent_set_within(g, &all)
}

/// A maximum independent set of the subgraph induced by `set`.
pub fn maximum_independent_set_within(g: &Graph, set: &[usize]) -> VertexSet {
    let (sub, map) = g.induced_subgraph(set).expect("set is valid");
    let co = sub.complement();
    let all: Vec<usize> = (0..co.n()).collect();
    let mut s: Vec<usize> = max_clique_within(&co, &all).into_iter().map(|v| map[v]).collect();
    s.sort_unstable();
    s
}
