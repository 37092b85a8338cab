//! Simple undirected graphs over dense vertex indices.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted, duplicate-free list of vertex indices.
pub type VertexSet = Vec<usize>;

/// A finite simple graph on vertices `0..n`.
///
/// Adjacency is kept twice: as bitset rows for O(1) membership tests and as
/// sorted neighbor lists for iteration. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    pub fn complete(n: usize) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, row) in adj.iter_mut().enumerate() {
            row.insert_range(..);
            row.set(u, false);
        }
        Self::from_rows(adj)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    fn from_rows(adj: Vec<FixedBitSet>) -> Self {
        let nbrs: Vec<Vec<usize>> = adj.iter().map(|r| r.ones().collect()).collect();
        let g = Self { adj, nbrs, labels: None };
        debug_assert!(g.is_simple());
        g
    }

    fn is_simple(&self) -> bool {
        (0..self.n()).all(|u| !self.adj[u].contains(u) && self.nbrs[u].iter().all(|&v| self.adj[v].contains(u)))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Sorted open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Open neighborhood of `v` as a bitset over `0..n`.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.nbrs[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// True when every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_anticomplete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Vertices outside `set` with at least one neighbor in it.
    pub fn open_neighborhood(&self, set: &[usize]) -> VertexSet {
        let mut mask = FixedBitSet::with_capacity(self.n());
        for &v in set {
            mask.union_with(&self.adj[v]);
        }
        for &v in set {
            mask.set(v, false);
        }
        mask.ones().collect()
    }

    /// Every vertex outside `set` with a neighbor in `set` is complete to it.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        self.open_neighborhood(set)
            .into_iter()
            .all(|w| set.iter().all(|&v| self.has_edge(v, w)))
    }

    /// Induced subgraph on `set` (any order, no duplicates). Returns the
    /// subgraph and the map from new indices to old ones; new vertex `i`
    /// corresponds to `set[i]`.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in set.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::Precondition(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let k = set.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for (i, &v) in set.iter().enumerate() {
            for &w in &self.nbrs[v] {
                if pos[w] != usize::MAX {
                    adj[i].insert(pos[w]);
                }
            }
        }
        let mut g = Self::from_rows(adj);
        if let Some(l) = &self.labels {
            g.labels = Some(set.iter().map(|&v| l[v].clone()).collect());
        }
        Ok((g, set.to_vec()))
    }

    /// Induced subgraph on all vertices except `removed`.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut mask = FixedBitSet::with_capacity(self.n());
        for &v in removed {
            mask.insert(v);
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !mask.contains(v)).collect();
        self.induced_subgraph(&keep).expect("kept vertices are valid")
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, row) in adj.iter_mut().enumerate() {
            row.insert_range(..);
            row.difference_with(&self.adj[u]);
            row.set(u, false);
        }
        Self::from_rows(adj)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.n(), &edges).expect("union edges are valid")
    }

    /// `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        for u in 0..off {
            edges.extend((0..other.n()).map(|v| (u, v + off)));
        }
        Graph::new(off + other.n(), &edges).expect("join edges are valid")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of the subgraph induced by `set`, in original indices.
    pub fn components_within(&self, set: &[usize]) -> Vec<VertexSet> {
        let (sub, map) = self.induced_subgraph(set).expect("set is valid");
        sub.components()
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| map[v]).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `root`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.nbrs[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Degree fingerprint used by trace documents: `hist[d]` vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_degree() + 1];
        for v in 0..self.n() {
            hist[self.degree(v)] += 1;
        }
        hist
    }
}

/// Plain serializable edge-list form of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        Self { n: g.n(), edges: g.edges() }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;
    fn try_from(e: EdgeList) -> Result<Self> {
        Graph::new(e.n, &e.edges)
    }
}

/// Sorted copy of a vertex collection.
pub fn sorted(set: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut v: Vec<usize> = set.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}
