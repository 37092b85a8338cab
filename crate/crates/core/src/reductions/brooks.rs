use std::collections::VecDeque;

use crate::coloring::{smallest_free_color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colors a graph with at most `Δ` colors when `Δ ≥ 3` and no component is
/// complete on `Δ + 1` vertices.
pub fn brooks_color(g: &Graph) -> Result<Coloring> {
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Error::Precondition(format!("Brooks coloring needs Delta >= 3, found {delta}")));
    }
    let mut colors = vec![0; g.n()];
    for comp in g.components() {
        if comp.len() == delta + 1 && g.is_clique(&comp) {
            return Err(Error::Precondition(format!("component {comp:?} is complete on Delta + 1 vertices")));
        }
        let (h, map) = g.induced_subgraph(&comp)?;
        let local = color_connected(&h, delta)?;
        for (i, &v) in map.iter().enumerate() {
            colors[v] = local[i];
        }
    }
    Ok(Coloring { colors, palette: delta as u32 })
}

fn color_connected(h: &Graph, delta: usize) -> Result<Vec<u32>> {
    let n = h.n();
    let min_v = (0..n).min_by_key(|&v| (h.degree(v), v)).expect("component is nonempty");
    if h.degree(min_v) < delta {
        return Ok(rooted(h, min_v, &[]));
    }
    if let Some(x) = (0..n).find(|&x| !h.without(&[x]).0.is_connected()) {
        return Ok(split_at(h, x));
    }
    for v in 0..n {
        let nb = h.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !h.has_edge(u, w) && h.without(&[u, w]).0.is_connected() {
                    return Ok(rooted(h, v, &[u, w]));
                }
            }
        }
    }
    Err(Error::InternalInconsistency("regular 2-connected component without a Brooks triple".into()))
}

/// Gives the vertices of `same` color 1, then colors the rest farthest-first
/// from `root` so every vertex but `root` still has an uncolored neighbor.
fn rooted(h: &Graph, root: usize, same: &[usize]) -> Vec<u32> {
    let n = h.n();
    let mut colors = vec![0u32; n];
    for &s in same {
        colors[s] = 1;
    }
    let mut dist = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in h.neighbors(u) {
            if dist[w] == usize::MAX && !same.contains(&w) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    for &v in order.iter().rev() {
        colors[v] = smallest_free_color(h, v, &colors);
    }
    colors
}

/// Colors each piece hanging off a cut vertex separately, then permutes
/// colors so the pieces agree on the cut vertex.
fn split_at(h: &Graph, x: usize) -> Vec<u32> {
    let mut colors = vec![0u32; h.n()];
    let (rest, map) = h.without(&[x]);
    for comp in rest.components() {
        let mut piece: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
        piece.push(x);
        piece.sort_unstable();
        let (sub, sub_map) = h.induced_subgraph(&piece).expect("valid piece");
        let root = sub_map.iter().position(|&v| v == x).expect("cut vertex in piece");
        let local = rooted(&sub, root, &[]);
        let cx = local[root];
        for (i, &v) in sub_map.iter().enumerate() {
            colors[v] = match local[i] {
                c if c == cx => 1,
                1 => cx,
                c => c,
            };
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn petersen_three_colors() {
        let c = brooks_color(&petersen()).unwrap();
        assert!(verify_coloring(&petersen(), &c));
        assert!(c.max_color() <= 3);
    }

    #[test]
    fn join_of_c5_and_k4() {
        let g = Graph::cycle(5).join(&Graph::complete(4));
        let c = brooks_color(&g).unwrap();
        assert!(verify_coloring(&g, &c) && c.palette == 8);
    }

    #[test]
    fn diamond() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = brooks_color(&g).unwrap();
        assert!(verify_coloring(&g, &c) && c.palette == 3);
    }

    #[test]
    fn regular_with_cut_vertex() {
        // two K4-minus-an-edge pieces, each closed by a degree-3 vertex, joined by a bridge
        let side = |o: usize| {
            vec![(o, o + 1), (o, o + 2), (o, o + 3), (o + 1, o + 2), (o + 1, o + 3), (o + 2, o + 4), (o + 3, o + 4)]
        };
        let mut edges = side(0);
        edges.extend(side(5));
        edges.push((4, 9));
        let g = Graph::new(10, &edges).unwrap();
        assert_eq!((g.min_degree(), g.max_degree()), (3, 3));
        let c = brooks_color(&g).unwrap();
        assert!(verify_coloring(&g, &c));
    }

    #[test]
    fn rejects_complete_components() {
        assert!(brooks_color(&Graph::complete(5)).is_err());
        assert!(brooks_color(&Graph::cycle(7)).is_err());
    }

    #[test]
    fn random_regular_like_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(5..16);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if g.max_degree() < 3 || g.components().iter().any(|c| c.len() == g.max_degree() + 1 && g.is_clique(c)) {
                continue;
            }
            let c = brooks_color(&g).unwrap();
            assert!(verify_coloring(&g, &c));
        }
    }
}
