use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Vertex coloring with colors `1..=palette`; color `0` marks an uncolored vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub palette: u32,
}

impl Coloring {
    pub fn uncolored(n: usize, palette: u32) -> Self {
        Self { colors: vec![0; n], palette }
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// True iff every vertex is colored within the palette and no edge is monochromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.n()
        && c.colors.iter().all(|&x| x >= 1 && x <= c.palette)
        && g.edges().into_iter().all(|(u, v)| c.colors[u] != c.colors[v])
}

/// Smallest positive color not used on an already colored neighbor of `v`.
pub fn smallest_free_color(g: &Graph, v: usize, colors: &[u32]) -> u32 {
    let mut used = vec![false; g.degree(v) + 2];
    for &w in g.neighbors(v) {
        let c = colors[w] as usize;
        if c != 0 && c < used.len() {
            used[c] = true;
        }
    }
    (1..used.len()).find(|&c| !used[c]).expect("degree + 1 colors always suffice") as u32
}

/// Colors `order` in sequence, each vertex with its smallest free color.
pub fn greedy_along(g: &Graph, order: &[usize], colors: &mut [u32]) {
    for &v in order {
        colors[v] = smallest_free_color(g, v, colors);
    }
}
