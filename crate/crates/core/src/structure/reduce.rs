//! Shrinking every reducible bag of an expansion to one of its maximum cliques,
//! and lifting colorings back.

use serde::{Deserialize, Serialize};

use super::cograph::{cotree_within, CographCertificate, Cotree};
use super::expansion::BagPartition;
use super::template::{NodeRole, Template};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::max_clique_within;

/// A reducible vertex group (a bag, or a pendant component) with its
/// decomposition tree and the maximum clique kept in the reduced graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftUnit {
    pub vertices: VertexSet,
    pub cotree: Cotree,
    pub kept: VertexSet,
}

#[derive(Clone, Debug)]
pub struct CliqueReduction {
    pub star: Graph,
    /// Host index of every reduced-graph vertex.
    pub star_to_host: Vec<usize>,
    pub star_bags: BagPartition,
    pub units: Vec<LiftUnit>,
}

impl CliqueReduction {
    pub fn is_identity(&self) -> bool {
        self.units.iter().all(|u| u.kept.len() == u.vertices.len())
    }
}

/// Replaces every reducible bag by its lexicographically least maximum clique.
/// The hub bag of the pendant template is kept whole; pendant components are
/// reduced one by one.
pub fn clique_reduce(g: &Graph, template: &Template, bags: &BagPartition) -> Result<CliqueReduction> {
    let mut groups: Vec<VertexSet> = Vec::new();
    let mut kept_whole: Vec<usize> = Vec::new();
    for (i, bag) in bags.bags.iter().enumerate() {
        match template.roles[i] {
            NodeRole::HubA6 => kept_whole.extend(bag),
            NodeRole::PendantA7 => groups.extend(g.components_within(bag)),
            NodeRole::MustBeClique | NodeRole::MayBeCograph => groups.push(bag.clone()),
        }
    }
    let mut units = Vec::with_capacity(groups.len());
    let mut keep = kept_whole;
    for vertices in groups {
        let cotree = match cotree_within(g, &vertices) {
            CographCertificate::Tree(t) => t,
            CographCertificate::P4(w) => return Err(Error::NotCograph(w)),
        };
        let kept = max_clique_within(g, &vertices);
        keep.extend(&kept);
        units.push(LiftUnit { vertices, cotree, kept });
    }
    keep.sort_unstable();
    let (star, star_to_host) = g.induced_subgraph(&keep)?;
    let mut host_to_star = vec![usize::MAX; g.n()];
    for (s, &h) in star_to_host.iter().enumerate() {
        host_to_star[h] = s;
    }
    let star_bags = BagPartition {
        template: bags.template,
        bags: bags
            .bags
            .iter()
            .map(|b| crate::graph::sorted(b.iter().filter(|&&v| host_to_star[v] != usize::MAX).map(|&v| host_to_star[v])))
            .collect(),
    };
    Ok(CliqueReduction { star, star_to_host, star_bags, units })
}

/// Extends a coloring of the reduced graph to the host: every unit is colored
/// optimally along its cotree using the colors found on its kept clique.
pub fn lift_coloring(g: &Graph, red: &CliqueReduction, star_coloring: &Coloring) -> Result<Coloring> {
    if star_coloring.colors.len() != red.star.n() {
        return Err(Error::Precondition("coloring does not match the reduced graph".into()));
    }
    let mut colors = vec![0; g.n()];
    for (s, &h) in red.star_to_host.iter().enumerate() {
        colors[h] = star_coloring.colors[s];
    }
    let mut host_to_star = vec![usize::MAX; g.n()];
    for (s, &h) in red.star_to_host.iter().enumerate() {
        host_to_star[h] = s;
    }
    for unit in &red.units {
        lift_unit(unit, &host_to_star, &star_coloring.colors, &mut colors)?;
    }
    Ok(Coloring { colors, palette: star_coloring.palette })
}

/// Colors one unit in `colors` (host-indexed) from the colors its kept clique
/// carries in `star_colors`.
pub fn lift_unit(unit: &LiftUnit, host_to_star: &[usize], star_colors: &[u32], colors: &mut [u32]) -> Result<()> {
    let mut available: Vec<u32> = unit.kept.iter().map(|&v| star_colors[host_to_star[v]]).collect();
    available.sort_unstable();
    available.dedup();
    let need = unit.cotree.omega();
    if available.len() < need {
        return Err(Error::InvalidCertificate(format!(
            "kept clique carries {} colors but the unit needs {need}",
            available.len()
        )));
    }
    let mut local = vec![0u32; colors.len()];
    unit.cotree.color_into(0, &mut local);
    for &v in &unit.vertices {
        colors[v] = available[local[v] as usize - 1];
    }
    Ok(())
}
