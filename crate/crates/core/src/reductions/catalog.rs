//! The two d1-choosable configurations and list-coloring extension over them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::cliques_of_size;

/// Four-vertex graphs that contain two disjoint non-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourVertexSide {
    C4,
    P4,
    TwoK2,
    CoPaw,
    K2PlusTwoK1,
    FourK1,
}

impl FourVertexSide {
    pub const ALL: [FourVertexSide; 6] = [
        FourVertexSide::C4,
        FourVertexSide::P4,
        FourVertexSide::TwoK2,
        FourVertexSide::CoPaw,
        FourVertexSide::K2PlusTwoK1,
        FourVertexSide::FourK1,
    ];

    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            FourVertexSide::C4 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            FourVertexSide::P4 => &[(0, 1), (1, 2), (2, 3)],
            FourVertexSide::TwoK2 => &[(0, 1), (2, 3)],
            FourVertexSide::CoPaw => &[(0, 1), (1, 2)],
            FourVertexSide::K2PlusTwoK1 => &[(0, 1)],
            FourVertexSide::FourK1 => &[],
        };
        Graph::new(4, edges).expect("valid edges")
    }

    /// Identifies a four-vertex graph with two disjoint non-edges.
    pub fn identify(h: &Graph) -> Option<Self> {
        if h.n() != 4 || !has_two_disjoint_nonedges(h, &[0, 1, 2, 3]) {
            return None;
        }
        let degs = h.degree_sequence();
        Some(match (h.edge_count(), degs.as_slice()) {
            (4, _) => FourVertexSide::C4,
            (3, [2, 2, 1, 1]) => FourVertexSide::P4,
            (2, [1, 1, 1, 1]) => FourVertexSide::TwoK2,
            (2, _) => FourVertexSide::CoPaw,
            (1, _) => FourVertexSide::K2PlusTwoK1,
            (0, _) => FourVertexSide::FourK1,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogShape {
    /// K3 joined with three disjoint edges.
    K3Join3K2,
    /// K4 joined with a four-vertex graph having two disjoint non-edges.
    K4Join(FourVertexSide),
}

impl CatalogShape {
    pub fn all() -> Vec<CatalogShape> {
        let mut out = vec![CatalogShape::K3Join3K2];
        out.extend(FourVertexSide::ALL.map(CatalogShape::K4Join));
        out
    }

    pub fn graph(self) -> Graph {
        match self {
            CatalogShape::K3Join3K2 => {
                Graph::complete(3).join(&Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).expect("valid edges"))
            }
            CatalogShape::K4Join(side) => Graph::complete(4).join(&side.graph()),
        }
    }

    /// Recognizes a graph as one of the catalog shapes.
    pub fn identify(h: &Graph) -> Option<Self> {
        match h.n() {
            9 => {
                let universal: Vec<usize> = (0..9).filter(|&v| h.degree(v) == 8).collect();
                let rest: Vec<usize> = (0..9).filter(|&v| h.degree(v) != 8).collect();
                let matching = rest.len() == 6
                    && rest.iter().all(|&v| rest.iter().filter(|&&w| h.has_edge(v, w)).count() == 1);
                (universal.len() == 3 && matching).then_some(CatalogShape::K3Join3K2)
            }
            8 => {
                let all: Vec<usize> = (0..8).collect();
                for core in cliques_of_size(h, 4) {
                    let side: Vec<usize> = all.iter().copied().filter(|v| !core.contains(v)).collect();
                    if h.is_complete_to(&core, &side) {
                        let (sub, _) = h.induced_subgraph(&side).ok()?;
                        if let Some(s) = FourVertexSide::identify(&sub) {
                            return Some(CatalogShape::K4Join(s));
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }
}

impl fmt::Display for CatalogShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogShape::K3Join3K2 => write!(f, "K3+3K2"),
            CatalogShape::K4Join(s) => write!(f, "K4+{s:?}"),
        }
    }
}

/// An induced copy of a catalog shape: `core` is the clique side, `side` the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogWitness {
    pub shape: CatalogShape,
    pub core: VertexSet,
    pub side: VertexSet,
}

impl CatalogWitness {
    pub fn vertices(&self) -> VertexSet {
        crate::graph::sorted(self.core.iter().chain(&self.side).copied())
    }
}

fn has_two_disjoint_nonedges(g: &Graph, s: &[usize]) -> bool {
    let [a, b, c, d] = [s[0], s[1], s[2], s[3]];
    let non = |x: usize, y: usize| !g.has_edge(x, y);
    (non(a, b) && non(c, d)) || (non(a, c) && non(b, d)) || (non(a, d) && non(b, c))
}

fn common_neighbors(g: &Graph, core: &[usize]) -> Vec<usize> {
    let mut set = g.neighbor_set(core[0]).clone();
    for &v in &core[1..] {
        set.intersect_with(g.neighbor_set(v));
    }
    set.ones().collect()
}

/// Finds an induced K3 ∨ 3K2, or failing that an induced K4 ∨ H with H on four
/// vertices containing two disjoint non-edges. Exhaustive.
pub fn find_d1_catalog(g: &Graph) -> Option<CatalogWitness> {
    for core in cliques_of_size(g, 3) {
        let w = common_neighbors(g, &core);
        if w.len() < 6 {
            continue;
        }
        if let Some(side) = induced_matching(g, &w, 3) {
            return Some(CatalogWitness { shape: CatalogShape::K3Join3K2, core, side });
        }
    }
    for core in cliques_of_size(g, 4) {
        let w = common_neighbors(g, &core);
        if w.len() < 4 {
            continue;
        }
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                for (j, &c) in w.iter().enumerate() {
                    if c == a || c == b {
                        continue;
                    }
                    for &d in &w[j + 1..] {
                        if d == a || d == b || g.has_edge(c, d) {
                            continue;
                        }
                        let side = crate::graph::sorted([a, b, c, d]);
                        let (sub, _) = g.induced_subgraph(&side).expect("valid vertices");
                        let s = FourVertexSide::identify(&sub).expect("two disjoint non-edges present");
                        return Some(CatalogWitness { shape: CatalogShape::K4Join(s), core, side });
                    }
                }
            }
        }
    }
    None
}

/// `size` edges inside `w` with no edges between distinct chosen edges.
fn induced_matching(g: &Graph, w: &[usize], size: usize) -> Option<VertexSet> {
    let edges: Vec<(usize, usize)> = w
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| w[i + 1..].iter().filter(move |&&v| g.has_edge(u, v)).map(move |&v| (u, v)))
        .collect();
    fn go(g: &Graph, edges: &[(usize, usize)], from: usize, size: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == 2 * size {
            return true;
        }
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            if chosen.iter().any(|&x| x == u || x == v || g.has_edge(x, u) || g.has_edge(x, v)) {
                continue;
            }
            chosen.extend([u, v]);
            if go(g, edges, i + 1, size, chosen) {
                return true;
            }
            chosen.truncate(chosen.len() - 2);
        }
        false
    }
    let mut chosen = Vec::new();
    go(g, &edges, 0, size, &mut chosen).then(|| crate::graph::sorted(chosen))
}

/// Allowed colors per vertex of a small graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

/// Colors `h` from its lists by exhaustive backtracking. `h` must be a catalog
/// shape and every list must have at least `d_h(v) - 1` colors.
pub fn extend_list_coloring(h: &Graph, l: &ListAssignment) -> Result<Vec<u32>> {
    if CatalogShape::identify(h).is_none() {
        return Err(Error::Precondition("list extension is only defined on catalog shapes".into()));
    }
    if l.lists.len() != h.n() {
        return Err(Error::Precondition("one list per vertex is required".into()));
    }
    for v in 0..h.n() {
        let mut list = l.lists[v].clone();
        list.sort_unstable();
        list.dedup();
        if list.len() + 1 < h.degree(v) {
            return Err(Error::Precondition(format!(
                "vertex {v} has {} colors but degree {}",
                list.len(),
                h.degree(v)
            )));
        }
    }
    let mut colors = vec![0u32; h.n()];
    if list_color(h, &l.lists, &mut colors) {
        Ok(colors)
    } else {
        Err(Error::InternalInconsistency("catalog shape could not be colored from its lists".into()))
    }
}

/// Backtracking list coloring, most constrained vertex first.
pub fn list_color(h: &Graph, lists: &[Vec<u32>], colors: &mut [u32]) -> bool {
    let options = |v: usize, colors: &[u32]| -> Vec<u32> {
        let mut out: Vec<u32> = lists[v]
            .iter()
            .copied()
            .filter(|&c| h.neighbors(v).iter().all(|&w| colors[w] != c))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let next = (0..h.n()).filter(|&v| colors[v] == 0).min_by_key(|&v| (options(v, colors).len(), v));
    let Some(v) = next else { return true };
    for c in options(v, colors) {
        colors[v] = c;
        if list_color(h, lists, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_recognized() {
        for s in CatalogShape::all() {
            assert_eq!(CatalogShape::identify(&s.graph()), Some(s));
        }
        assert_eq!(CatalogShape::identify(&Graph::complete(2)), None);
    }

    #[test]
    fn whole_graph_witnesses() {
        let g = CatalogShape::K3Join3K2.graph();
        let w = find_d1_catalog(&g).unwrap();
        assert_eq!(w.shape, CatalogShape::K3Join3K2);
        assert_eq!(w.vertices(), (0..9).collect::<Vec<_>>());
        let g = CatalogShape::K4Join(FourVertexSide::C4).graph();
        let w = find_d1_catalog(&g).unwrap();
        assert_eq!(w.vertices(), (0..8).collect::<Vec<_>>());
        assert!(find_d1_catalog(&Graph::cycle(5)).is_none());
        assert!(find_d1_catalog(&Graph::complete(8)).is_none());
    }

    #[test]
    fn shape_guard() {
        let l = ListAssignment { lists: vec![vec![1], vec![1, 2]] };
        assert!(matches!(extend_list_coloring(&Graph::complete(2), &l), Err(Error::Precondition(_))));
    }

    #[test]
    fn minimum_lists_extend() {
        let h = CatalogShape::K3Join3K2.graph();
        let lists = (0..9).map(|v| if v < 3 { (1..=7).collect() } else { (1..=3).collect() }).collect();
        let c = extend_list_coloring(&h, &ListAssignment { lists }).unwrap();
        assert!(h.edges().iter().all(|&(u, v)| c[u] != c[v]));

        let h = CatalogShape::K4Join(FourVertexSide::C4).graph();
        let lists = (0..8).map(|v| if v < 4 { (1..=6).collect() } else { (1..=5).collect() }).collect();
        let c = extend_list_coloring(&h, &ListAssignment { lists }).unwrap();
        assert!(h.edges().iter().all(|&(u, v)| c[u] != c[v]));
    }

    #[test]
    fn short_lists_are_rejected() {
        let h = CatalogShape::K4Join(FourVertexSide::FourK1).graph();
        let lists = vec![vec![1, 2]; 8];
        assert!(matches!(extend_list_coloring(&h, &ListAssignment { lists }), Err(Error::Precondition(_))));
    }
}
