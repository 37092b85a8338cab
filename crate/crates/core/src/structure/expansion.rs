//! Matching a host graph against a template as a P4-free expansion.

use serde::{Deserialize, Serialize};

use super::cograph::{cotree_within, CographCertificate};
use super::modules::maximal_module_partition;
use super::template::{NodeRole, Relation, Template, TemplateId};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Bag `i` holds the host vertices expanding template node `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BagPartition {
    pub template: TemplateId,
    pub bags: Vec<VertexSet>,
}

impl BagPartition {
    /// Template node of every host vertex.
    pub fn node_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                out[v] = i;
            }
        }
        out
    }

    /// Rewrites vertex indices through `map` (old index → new index).
    pub fn remap(&self, map: &[usize]) -> BagPartition {
        BagPartition {
            template: self.template,
            bags: self
                .bags
                .iter()
                .map(|b| crate::graph::sorted(b.iter().map(|&v| map[v])))
                .collect(),
        }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.bags.iter().map(Vec::len).collect()
    }
}

fn violation(msg: String) -> Error {
    Error::InvalidCertificate(msg)
}

/// Independent constraint checker for a claimed expansion of `template`.
pub fn check_partition(g: &Graph, template: &Template, part: &BagPartition) -> Result<()> {
    let k = template.len();
    if part.template != template.id {
        return Err(violation(format!("partition is for {}, template is {}", part.template, template.id)));
    }
    if part.bags.len() != k {
        return Err(violation(format!("expected {k} bags, found {}", part.bags.len())));
    }
    let mut seen = vec![false; g.n()];
    for (i, bag) in part.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(violation(format!("bag {} is empty", template.id.bag_name(i))));
        }
        for &v in bag {
            if v >= g.n() || seen[v] {
                return Err(violation(format!("vertex {v} is out of range or repeated")));
            }
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(violation(format!("vertex {v} lies in no bag")));
    }
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&part.bags[i], &part.bags[j]);
            let ok = match template.relation(i, j) {
                Relation::Complete => g.is_complete_to(a, b),
                Relation::Anticomplete => g.is_anticomplete_to(a, b),
                Relation::Free => true,
            };
            if !ok {
                return Err(violation(format!(
                    "bags {} and {} break a {:?} relation",
                    template.id.bag_name(i),
                    template.id.bag_name(j),
                    template.relation(i, j)
                )));
            }
        }
    }
    for (i, bag) in part.bags.iter().enumerate() {
        let name = template.id.bag_name(i);
        match template.roles[i] {
            NodeRole::MustBeClique if !g.is_clique(bag) => {
                return Err(violation(format!("bag {name} is not a clique")));
            }
            _ => {
                if let CographCertificate::P4(w) = cotree_within(g, bag) {
                    return Err(violation(format!("bag {name} induces a P4 on {w:?}")));
                }
            }
        }
        if template.roles[i] == NodeRole::PendantA7 {
            for comp in g.components_within(bag) {
                if !g.is_homogeneous(&comp) {
                    return Err(violation(format!("component {comp:?} of {name} is not homogeneous")));
                }
            }
        }
    }
    Ok(())
}

/// True when every reducible bag (and every pendant component) is a clique.
pub fn is_starred(g: &Graph, template: &Template, part: &BagPartition) -> bool {
    part.bags.iter().enumerate().all(|(i, bag)| match template.roles[i] {
        NodeRole::HubA6 => true,
        NodeRole::PendantA7 => g.components_within(bag).iter().all(|c| g.is_clique(c)),
        NodeRole::MustBeClique | NodeRole::MayBeCograph => g.is_clique(bag),
    })
}

/// Finds the lexicographically least bag partition expressing `g` as a P4-free
/// expansion of `template`, or `None` when there is none.
pub fn match_expansion(g: &Graph, template: &Template) -> Option<BagPartition> {
    if g.n() < template.len() {
        return None;
    }
    let found = if template.is_prime() { match_by_modules(g, template) } else { match_by_search(g, template) };
    found.filter(|p| check_partition(g, template, p).is_ok())
}

/// For a prime template the bags of any expansion are exactly the maximal
/// modules, so only the quotient needs to be matched.
fn match_by_modules(g: &Graph, template: &Template) -> Option<BagPartition> {
    let parts = maximal_module_partition(g)?;
    let k = template.len();
    if parts.len() != k {
        return None;
    }
    let quotient = |i: usize, j: usize| g.has_edge(parts[i][0], parts[j][0]);
    let mut best: Option<Vec<VertexSet>> = None;
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    isomorphisms(&quotient, &template.graph, 0, &mut image, &mut used, &mut |image| {
        let mut bags = vec![Vec::new(); k];
        for (i, &node) in image.iter().enumerate() {
            bags[node].clone_from(&parts[i]);
        }
        if best.as_ref().is_none_or(|b| bags < *b) {
            best = Some(bags);
        }
    });
    best.map(|bags| BagPartition { template: template.id, bags })
}

fn isomorphisms(
    quotient: &dyn Fn(usize, usize) -> bool,
    target: &Graph,
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut dyn FnMut(&[usize]),
) {
    let k = image.len();
    if i == k {
        found(image);
        return;
    }
    for node in 0..k {
        if used[node] || (0..i).any(|j| quotient(i, j) != target.has_edge(node, image[j])) {
            continue;
        }
        used[node] = true;
        image[i] = node;
        isomorphisms(quotient, target, i + 1, image, used, found);
        used[node] = false;
    }
}

const SOLUTION_CAP: usize = 4096;

/// Backtracking assignment of vertices to template nodes with forward checking.
fn match_by_search(g: &Graph, template: &Template) -> Option<BagPartition> {
    let k = template.len();
    assert!(k <= 32, "templates have at most 32 nodes");
    let full: u32 = if k == 32 { u32::MAX } else { (1 << k) - 1 };
    // allowed[l][adjacent] = labels a vertex may take given a vertex labelled l
    let mut allowed = vec![[0u32; 2]; k];
    for (l, row) in allowed.iter_mut().enumerate() {
        for m in 0..k {
            let bit = 1 << m;
            let rel = if l == m { Relation::Free } else { template.relation(l, m) };
            match rel {
                Relation::Complete => row[1] |= bit,
                Relation::Anticomplete => row[0] |= bit,
                Relation::Free => {
                    row[0] |= bit;
                    row[1] |= bit;
                }
            }
        }
    }
    let mut search = Search {
        g,
        template,
        allowed,
        full,
        label: vec![usize::MAX; g.n()],
        best: None,
        solutions: 0,
    };
    search.run(vec![full; g.n()]);
    search.best.map(|bags| BagPartition { template: template.id, bags })
}

struct Search<'a> {
    g: &'a Graph,
    template: &'a Template,
    allowed: Vec<[u32; 2]>,
    full: u32,
    label: Vec<usize>,
    best: Option<Vec<VertexSet>>,
    solutions: usize,
}

impl Search<'_> {
    fn run(&mut self, domains: Vec<u32>) {
        if self.solutions >= SOLUTION_CAP {
            return;
        }
        let n = self.g.n();
        let next = (0..n)
            .filter(|&v| self.label[v] == usize::MAX)
            .min_by_key(|&v| (domains[v].count_ones(), v));
        let Some(v) = next else {
            self.record();
            return;
        };
        let mut options = domains[v];
        while options != 0 {
            let l = options.trailing_zeros() as usize;
            options &= options - 1;
            self.label[v] = l;
            if let Some(d) = self.propagate(&domains, v, l) {
                self.run(d);
            }
            self.label[v] = usize::MAX;
        }
    }

    fn propagate(&self, domains: &[u32], v: usize, l: usize) -> Option<Vec<u32>> {
        let mut d = domains.to_vec();
        d[v] = 1 << l;
        let mut cover = 0u32;
        for w in 0..self.g.n() {
            if self.label[w] != usize::MAX {
                cover |= 1 << self.label[w];
                continue;
            }
            d[w] &= self.allowed[l][self.g.has_edge(v, w) as usize];
            if d[w] == 0 {
                return None;
            }
            cover |= d[w];
        }
        (cover == self.full).then_some(d)
    }

    fn record(&mut self) {
        let k = self.template.len();
        let mut bags = vec![Vec::new(); k];
        for (v, &l) in self.label.iter().enumerate() {
            bags[l].push(v);
        }
        let part = BagPartition { template: self.template.id, bags };
        if check_partition(self.g, self.template, &part).is_ok() {
            self.solutions += 1;
            if self.best.as_ref().is_none_or(|b| part.bags < *b) {
                self.best = Some(part.bags);
            }
        }
    }
}

/// Builds the expansion of `template` with the given bag graphs; for the
/// pendant bag, `hub_links[c]` lists the hub vertices (bag-local indices)
/// joined to pendant component `c`. Returns the host and its ground-truth bags.
pub fn expand(template: &Template, bag_graphs: &[Graph], hub_links: &[Vec<usize>]) -> (Graph, BagPartition) {
    let k = template.len();
    assert_eq!(bag_graphs.len(), k);
    let mut offset = vec![0; k + 1];
    for i in 0..k {
        offset[i + 1] = offset[i] + bag_graphs[i].n();
    }
    let bags: Vec<VertexSet> = (0..k).map(|i| (offset[i]..offset[i + 1]).collect()).collect();
    let mut edges = Vec::new();
    for (i, bg) in bag_graphs.iter().enumerate() {
        edges.extend(bg.edges().into_iter().map(|(u, v)| (u + offset[i], v + offset[i])));
    }
    for i in 0..k {
        for j in i + 1..k {
            if template.relation(i, j) == Relation::Complete {
                for &u in &bags[i] {
                    for &v in &bags[j] {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    if let Some(p) = template.pendant() {
        let hub = template.roles.iter().position(|&r| r == NodeRole::HubA6).expect("pendant needs a hub");
        let comps = bag_graphs[p].components();
        assert_eq!(comps.len(), hub_links.len(), "one hub link list per pendant component");
        for (comp, links) in comps.iter().zip(hub_links) {
            for &c in comp {
                for &h in links {
                    edges.push((c + offset[p], h + offset[hub]));
                }
            }
        }
    }
    let g = Graph::new(offset[k], &edges).expect("expansion edges are valid");
    (g, BagPartition { template: template.id, bags })
}
