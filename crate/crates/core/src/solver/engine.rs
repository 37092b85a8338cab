use crate::coloring::{smallest_free_color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest number of neighbors any vertex has earlier in `order`, which must
/// be a permutation of the vertices.
pub fn back_degree_profile(g: &Graph, order: &[usize]) -> Result<usize> {
    let mut seen = vec![false; g.n()];
    for &v in order {
        if v >= g.n() || seen[v] {
            return Err(Error::Precondition("order is not a permutation of the vertices".into()));
        }
        seen[v] = true;
    }
    if order.len() != g.n() {
        return Err(Error::Precondition("order is not a permutation of the vertices".into()));
    }
    Ok(max_back_degree(g, order))
}

/// Back-degree of a sequence of distinct vertices, counting only neighbors in the sequence.
pub fn max_back_degree(g: &Graph, seq: &[usize]) -> usize {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = i;
    }
    seq.iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| pos[w] < i).count())
        .max()
        .unwrap_or(0)
}

/// Smallest-last order of `vertices` as a coloring sequence (every vertex has
/// at most `degeneracy` neighbors before it), together with that degeneracy.
pub fn degeneracy_order(g: &Graph, vertices: &[usize]) -> (Vec<usize>, usize) {
    let mut inside = vec![false; g.n()];
    vertices.iter().for_each(|&v| inside[v] = true);
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| if inside[v] { g.neighbors(v).iter().filter(|&&w| inside[w]).count() } else { 0 })
        .collect();
    let mut removal = Vec::with_capacity(vertices.len());
    let mut degeneracy = 0;
    for _ in 0..vertices.len() {
        let v = vertices
            .iter()
            .copied()
            .filter(|&v| inside[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex is left");
        degeneracy = degeneracy.max(deg[v]);
        inside[v] = false;
        for &w in g.neighbors(v) {
            if inside[w] {
                deg[w] -= 1;
            }
        }
        removal.push(v);
    }
    removal.reverse();
    (removal, degeneracy)
}

/// Gives set `j` the color `k - j` and colors the remaining vertices greedily
/// with `1..=k-t` along `order` (a smallest-last order when `None`). The
/// back-degree of the order must be at most `k - t - 1`.
pub fn color_with_independent_sets(g: &Graph, sets: &[VertexSet], k: u32, order: Option<&[usize]>) -> Result<Coloring> {
    let t = sets.len() as u32;
    if t > k {
        return Err(Error::Precondition(format!("{t} reserved colors exceed the palette {k}")));
    }
    let mut reserved = vec![false; g.n()];
    for s in sets {
        if !g.is_independent(s) {
            return Err(Error::Precondition(format!("set {s:?} is not independent")));
        }
        for &v in s {
            if v >= g.n() || reserved[v] {
                return Err(Error::Precondition("sets are not disjoint".into()));
            }
            reserved[v] = true;
        }
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !reserved[v]).collect();
    let seq = match order {
        Some(o) => {
            let mut s = o.to_vec();
            s.sort_unstable();
            if s != rest {
                return Err(Error::Precondition("order does not list exactly the uncovered vertices".into()));
            }
            o.to_vec()
        }
        None => degeneracy_order(g, &rest).0,
    };
    let bound = (k - t) as usize;
    let back = max_back_degree(g, &seq);
    if !seq.is_empty() && back + 1 > bound {
        return Err(Error::Precondition(format!(
            "degeneracy check failed: back-degree {back} exceeds {}",
            bound.saturating_sub(1)
        )));
    }
    let mut colors = vec![0u32; g.n()];
    for (j, s) in sets.iter().enumerate() {
        for &v in s {
            colors[v] = k - j as u32;
        }
    }
    for &v in &seq {
        colors[v] = smallest_free_color(g, v, &colors);
        debug_assert!(colors[v] <= k - t);
    }
    Ok(Coloring { colors, palette: k })
}
