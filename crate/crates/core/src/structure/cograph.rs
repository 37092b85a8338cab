//! Cograph recognition by recursive union/join decomposition.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{find_induced_within, Pattern};

/// Union/join decomposition tree whose leaves are host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CographCertificate {
    Tree(Cotree),
    /// Induced P4 in path order.
    P4([usize; 4]),
}

impl CographCertificate {
    pub fn tree(&self) -> Option<&Cotree> {
        match self {
            CographCertificate::Tree(t) => Some(t),
            CographCertificate::P4(_) => None,
        }
    }
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// Clique number of the graph the tree describes.
    pub fn omega(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) => ch.iter().map(Cotree::omega).max().unwrap_or(0),
            Cotree::Join(ch) => ch.iter().map(Cotree::omega).sum(),
        }
    }

    /// True iff the tree's leaves are exactly `set` (each once) and evaluating
    /// the tree reproduces the adjacency of `g` on `set`.
    pub fn describes(&self, g: &Graph, set: &[usize]) -> bool {
        let mut leaves = Vec::new();
        self.collect_leaves(&mut leaves);
        let mut sorted_leaves = leaves.clone();
        sorted_leaves.sort_unstable();
        sorted_leaves.dedup();
        let mut target = set.to_vec();
        target.sort_unstable();
        sorted_leaves.len() == leaves.len() && sorted_leaves == target && self.edges_agree(g)
    }

    fn edges_agree(&self, g: &Graph) -> bool {
        let (ch, joined) = match self {
            Cotree::Leaf(v) => return *v < g.n(),
            Cotree::Union(ch) => (ch, false),
            Cotree::Join(ch) => (ch, true),
        };
        if !ch.iter().all(|c| c.edges_agree(g)) {
            return false;
        }
        let parts: Vec<VertexSet> = ch.iter().map(Cotree::leaves).collect();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        if g.has_edge(u, v) != joined {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Writes colors `offset+1 ..= offset+omega` onto the leaves and returns the width used.
    pub fn color_into(&self, offset: u32, colors: &mut [u32]) -> u32 {
        match self {
            Cotree::Leaf(v) => {
                colors[*v] = offset + 1;
                1
            }
            Cotree::Union(ch) => ch.iter().map(|c| c.color_into(offset, colors)).max().unwrap_or(0),
            Cotree::Join(ch) => {
                let mut width = 0;
                for c in ch {
                    width += c.color_into(offset + width, colors);
                }
                width
            }
        }
    }
}

/// Decomposes the whole graph.
pub fn is_cograph(s: &Graph) -> CographCertificate {
    let all: Vec<usize> = (0..s.n()).collect();
    cotree_within(s, &all)
}

/// Decomposes the subgraph induced by `set`; leaves and witnesses use host indices.
pub fn cotree_within(g: &Graph, set: &[usize]) -> CographCertificate {
    match build(g, set) {
        Some(t) => CographCertificate::Tree(t),
        None => {
            let mut allowed = vec![false; g.n()];
            set.iter().for_each(|&v| allowed[v] = true);
            let w = find_induced_within(g, Pattern::P4, Some(&allowed))
                .expect("a connected, co-connected graph on two or more vertices contains an induced P4");
            CographCertificate::P4([w.vertices[0], w.vertices[1], w.vertices[2], w.vertices[3]])
        }
    }
}

fn build(g: &Graph, set: &[usize]) -> Option<Cotree> {
    match set {
        [] => Some(Cotree::Union(Vec::new())),
        [v] => Some(Cotree::Leaf(*v)),
        _ => {
            let comps = g.components_within(set);
            if comps.len() > 1 {
                return comps.iter().map(|c| build(g, c)).collect::<Option<_>>().map(Cotree::Union);
            }
            let co = co_components(g, set);
            if co.len() > 1 {
                return co.iter().map(|c| build(g, c)).collect::<Option<_>>().map(Cotree::Join);
            }
            None
        }
    }
}

/// Components of the complement of `g[set]`, each sorted, listed by smallest vertex.
fn co_components(g: &Graph, set: &[usize]) -> Vec<VertexSet> {
    let mut left: Vec<usize> = set.to_vec();
    left.sort_unstable();
    let mut out = Vec::new();
    while let Some(start) = left.first().copied() {
        left.retain(|&v| v != start);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let (reach, keep): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&w| !g.has_edge(u, w));
            left = keep;
            comp.extend(&reach);
            stack.extend(reach);
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Colors a cograph with exactly `omega(s)` colors along its decomposition tree.
pub fn cograph_optimal_coloring(s: &Graph, cert: &CographCertificate) -> Result<Coloring> {
    let all: Vec<usize> = (0..s.n()).collect();
    let tree = cert
        .tree()
        .ok_or_else(|| Error::InvalidCertificate("P4 witness given where a cotree is required".into()))?;
    if !tree.describes(s, &all) {
        return Err(Error::InvalidCertificate("cotree does not reproduce the graph".into()));
    }
    let mut colors = vec![0; s.n()];
    let palette = tree.color_into(0, &mut colors);
    Ok(Coloring { colors, palette })
}
