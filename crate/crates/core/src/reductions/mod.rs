//! Reduction rules with their extension procedures, the hitting independent
//! set, a constructive Brooks coloring and the reduction to maximum degree nine.

mod brooks;
mod catalog;

pub use brooks::brooks_color;
pub use catalog::{
    extend_list_coloring, find_d1_catalog, list_color, CatalogShape, CatalogWitness, FourVertexSide, ListAssignment,
};

pub use crate::trace::ReductionStep;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{clique_number, cliques_of_size, maximum_independent_set_within};
use crate::structure::maximal_homogeneous_cliques;
use crate::trace::{ColoringSource, ReductionTrace, Terminal};

/// First vertex of degree at most `k - 1`.
pub fn find_low_degree(g: &Graph, k: usize) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) < k)
}

/// Two disjoint homogeneous cliques `A`, `B` with no edges between them,
/// `N(A) ⊆ N(B)` and `|A| ≤ |B|`, drawn from the true-twin classes.
pub fn find_copycat(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let classes = maximal_homogeneous_cliques(g);
    let nbhd: Vec<VertexSet> = classes.iter().map(|c| g.open_neighborhood(c)).collect();
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            if i == j || a.len() > b.len() || g.has_edge(a[0], b[0]) {
                continue;
            }
            if nbhd[i].iter().all(|v| nbhd[j].binary_search(v).is_ok()) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Colors `A` with the smallest `|A|` colors used on `B`, keeping `partial`
/// elsewhere. `partial` is indexed by the vertices of `g`; `A` is ignored in it.
pub fn copycat_extend(g: &Graph, a: &[usize], b: &[usize], partial: &Coloring) -> Result<Coloring> {
    let bad = |m: &str| Err(Error::Precondition(format!("copycat extension: {m}")));
    if a.is_empty() || a.len() > b.len() {
        return bad("need 0 < |A| <= |B|");
    }
    if a.iter().any(|v| b.contains(v)) {
        return bad("A and B overlap");
    }
    if !g.is_clique(a) || !g.is_clique(b) {
        return bad("A and B must be cliques");
    }
    if !g.is_anticomplete_to(a, b) {
        return bad("A and B must be anticomplete");
    }
    let nb = g.open_neighborhood(b);
    if !g.open_neighborhood(a).iter().all(|v| nb.binary_search(v).is_ok()) {
        return bad("N(A) is not contained in N(B)");
    }
    let mut donor: Vec<u32> = b.iter().map(|&v| partial.colors[v]).collect();
    if donor.contains(&0) {
        return bad("B is not fully colored");
    }
    donor.sort_unstable();
    donor.dedup();
    if donor.len() < a.len() {
        return bad("B carries fewer distinct colors than |A|");
    }
    let mut out = partial.clone();
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    for (&v, &c) in a_sorted.iter().zip(&donor) {
        out.colors[v] = c;
    }
    Ok(out)
}

/// Independent set from the hitting search, flagged when it is also maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub vertices: VertexSet,
    pub is_maximum: bool,
}

const HITTING_NODE_CAP: usize = 200_000;

/// A maximum independent set meeting every clique of size `Δ - 1`. When no
/// maximum independent set qualifies within the search budget, a maximal
/// independent set meeting all those cliques is returned instead.
pub fn hitting_mis(g: &Graph) -> Result<HittingSet> {
    let delta = g.max_degree();
    let (omega, clique) = clique_number(g);
    if delta == 0 || omega > delta - 1 {
        return Err(Error::Precondition(format!(
            "hitting set needs omega <= Delta - 1, found omega {omega} with clique {clique:?} and Delta {delta}"
        )));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let alpha = maximum_independent_set_within(g, &all).len();
    let cliques = if omega == delta - 1 { cliques_of_size(g, delta - 1) } else { Vec::new() };
    if cliques.is_empty() {
        return Ok(HittingSet { vertices: maximum_independent_set_within(g, &all), is_maximum: true });
    }
    let mut search = Hitting { g, cliques: &cliques, alpha, nodes: 0, fallback: None };
    let mut chosen = Vec::new();
    let mut banned = vec![false; g.n()];
    if let Some(set) = search.run(&mut chosen, &mut banned) {
        return Ok(HittingSet { vertices: set, is_maximum: true });
    }
    match search.fallback {
        Some(set) => Ok(HittingSet { vertices: set, is_maximum: false }),
        None => Err(Error::InternalInconsistency(format!(
            "no independent set meets every clique of size {}",
            delta - 1
        ))),
    }
}

struct Hitting<'a> {
    g: &'a Graph,
    cliques: &'a [VertexSet],
    alpha: usize,
    nodes: usize,
    fallback: Option<VertexSet>,
}

impl Hitting<'_> {
    fn eligible(&self, chosen: &[usize], banned: &[bool], v: usize) -> bool {
        !banned[v] && !chosen.contains(&v) && chosen.iter().all(|&u| !self.g.has_edge(u, v))
    }

    fn run(&mut self, chosen: &mut Vec<usize>, banned: &mut [bool]) -> Option<VertexSet> {
        self.nodes += 1;
        let free: Vec<usize> = (0..self.g.n()).filter(|&v| self.eligible(chosen, banned, v)).collect();
        let unhit = self.cliques.iter().filter(|q| !q.iter().any(|v| chosen.contains(v)));
        let mut best: Option<Vec<usize>> = None;
        for q in unhit {
            let options: Vec<usize> = q.iter().copied().filter(|&v| self.eligible(chosen, banned, v)).collect();
            if best.as_ref().is_none_or(|b| options.len() < b.len()) {
                best = Some(options);
            }
        }
        let Some(options) = best else {
            let mut set = chosen.clone();
            set.extend(maximum_independent_set_within(self.g, &free));
            set.sort_unstable();
            if set.len() == self.alpha {
                return Some(set);
            }
            if self.fallback.is_none() {
                self.fallback = Some(set);
            }
            return None;
        };
        if self.nodes > HITTING_NODE_CAP {
            return None;
        }
        if chosen.len() + maximum_independent_set_within(self.g, &free).len() < self.alpha && self.fallback.is_some() {
            return None;
        }
        let mut newly_banned = Vec::new();
        for v in options {
            chosen.push(v);
            let found = self.run(chosen, banned);
            chosen.pop();
            if found.is_some() {
                newly_banned.iter().for_each(|&u: &usize| banned[u] = false);
                return found;
            }
            banned[v] = true;
            newly_banned.push(v);
        }
        newly_banned.iter().for_each(|&u| banned[u] = false);
        None
    }
}

/// Colors a graph with `Δ ≥ 10` and `ω ≤ Δ - 1` using `Δ - 1` colors by peeling
/// hitting independent sets; `color8` handles the graphs that reach `Δ = 9`.
/// Trace vertices are indices of `g`.
pub fn delta_reduce<F>(g: &Graph, color8: F) -> Result<ReductionTrace>
where
    F: Fn(&Graph) -> Result<ReductionTrace>,
{
    let delta = g.max_degree();
    if delta < 10 {
        return Err(Error::DeltaTooSmall { delta, required: 10 });
    }
    let (omega, clique) = clique_number(g);
    if omega > delta - 1 {
        return Err(Error::CliqueTooLarge { omega, bound: delta - 1, clique });
    }
    let mut steps = Vec::new();
    let mut current = g.clone();
    let mut to_host: Vec<usize> = (0..g.n()).collect();
    let mut level_delta = delta;
    let terminal = loop {
        let hit = hitting_mis(&current)?;
        let host = |s: &[usize], map: &[usize]| crate::graph::sorted(s.iter().map(|&v| map[v]));
        steps.push(ReductionStep::DeltaReduce {
            independent_set: host(&hit.vertices, &to_host),
            color: (level_delta - 1) as u32,
        });
        let (rest, map) = current.without(&hit.vertices);
        let rest_to_host: Vec<usize> = map.iter().map(|&v| to_host[v]).collect();
        let d = rest.max_degree();
        if d + 3 <= level_delta {
            break Terminal::Greedy { order: rest_to_host.clone() };
        }
        if d + 2 == level_delta {
            let c = brooks_color(&rest)?;
            let colors = rest_to_host.iter().zip(&c.colors).map(|(&h, &col)| (h, col)).collect();
            break Terminal::Explicit { source: ColoringSource::Brooks, colors };
        }
        if d + 1 != level_delta {
            return Err(Error::InternalInconsistency("removing an independent set did not lower Delta".into()));
        }
        if d == 9 {
            let sub = color8(&rest)?.remap(&rest_to_host);
            steps.extend(sub.steps);
            break sub.terminal;
        }
        current = rest;
        to_host = rest_to_host;
        level_delta = d;
    };
    Ok(ReductionTrace { vertices: (0..g.n()).collect(), palette: (delta - 1) as u32, steps, terminal })
}
