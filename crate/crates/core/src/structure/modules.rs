//! Homogeneous sets: twin classes, module closure and the maximal-module partition.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};

/// Maximal homogeneous cliques, which are exactly the classes of true twins
/// (`N[u] = N[v]`). Every vertex lies in exactly one class; classes are sorted
/// and listed by their smallest vertex.
pub fn maximal_homogeneous_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let closed: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbor_set(v).clone();
            s.insert(v);
            s
        })
        .collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![v];
        class_of[v] = id;
        for &w in g.neighbors(v) {
            if w > v && class_of[w] == usize::MAX && closed[w] == closed[v] {
                class_of[w] = id;
                class.push(w);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Smallest module of `g` containing `seed`.
pub fn module_closure(g: &Graph, seed: &[usize]) -> VertexSet {
    let n = g.n();
    let mut inside = FixedBitSet::with_capacity(n);
    for &v in seed {
        inside.insert(v);
    }
    loop {
        let mut grew = false;
        for x in 0..n {
            if inside[x] {
                continue;
            }
            let nbrs = g.neighbor_set(x);
            let hits = inside.intersection_count(nbrs);
            if hits > 0 && hits < inside.count_ones(..) {
                inside.insert(x);
                grew = true;
            }
        }
        if !grew {
            return inside.ones().collect();
        }
    }
}

/// True iff `g` has at least three vertices and no module other than the
/// empty set, singletons and the whole vertex set.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && (0..n).all(|u| (u + 1..n).all(|v| module_closure(g, &[u, v]).len() == n))
}

/// Partition of `V(g)` into maximal proper modules, defined when both `g` and
/// its complement are connected. Parts are sorted and listed by smallest vertex.
pub fn maximal_module_partition(g: &Graph) -> Option<Vec<VertexSet>> {
    let n = g.n();
    if n < 2 || !g.is_connected() || !g.complement().is_connected() {
        return None;
    }
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<VertexSet> = Vec::new();
    for u in 0..n {
        if part_of[u] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![u];
        part_of[u] = id;
        for v in u + 1..n {
            if part_of[v] == usize::MAX && module_closure(g, &[u, v]).len() < n {
                part_of[v] = id;
                part.push(v);
            }
        }
        parts.push(part);
    }
    Some(parts)
}
