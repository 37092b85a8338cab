//! Reduction traces and their independent replay.
//!
//! All vertex indices in a trace refer to the graph handed to the solver. A
//! trace colors `vertices`: the terminal colors whatever its steps left over,
//! then the steps are undone last to first, each extending the coloring.

use serde::{Deserialize, Serialize};

use crate::coloring::{smallest_free_color, verify_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{sorted, Graph, VertexSet};
use crate::reductions::{copycat_extend, extend_list_coloring, ListAssignment};
use crate::solver::color_with_independent_sets;
use crate::structure::{Cotree, LiftUnit, TemplateId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ReductionStep {
    /// A vertex with fewer than `palette` neighbors; it takes its smallest free color.
    LowDegree { vertex: usize, palette: u32 },
    /// A homogeneous clique recolored from a donor clique.
    Copycat { removed: VertexSet, donor: VertexSet },
    /// An induced catalog shape, list-colored from `1..=palette`.
    D1Extend { witness: VertexSet, palette: u32 },
    /// A clique bag of the pendant template recolored from a maximum clique of the hub.
    CliqueCopy { removed: VertexSet, donor_clique: VertexSet },
    /// Pendant clique components, greedily colored within `palette`.
    A7Peel { components: Vec<VertexSet>, palette: u32 },
    /// An independent set given one fresh color.
    DeltaReduce { independent_set: VertexSet, color: u32 },
}

impl ReductionStep {
    pub fn kind(&self) -> &'static str {
        match self {
            ReductionStep::LowDegree { .. } => "LowDegree",
            ReductionStep::Copycat { .. } => "Copycat",
            ReductionStep::D1Extend { .. } => "D1Extend",
            ReductionStep::CliqueCopy { .. } => "CliqueCopy",
            ReductionStep::A7Peel { .. } => "A7Peel",
            ReductionStep::DeltaReduce { .. } => "DeltaReduce",
        }
    }

    pub fn removed(&self) -> VertexSet {
        match self {
            ReductionStep::LowDegree { vertex, .. } => vec![*vertex],
            ReductionStep::Copycat { removed, .. } | ReductionStep::CliqueCopy { removed, .. } => removed.clone(),
            ReductionStep::D1Extend { witness, .. } => witness.clone(),
            ReductionStep::A7Peel { components, .. } => sorted(components.iter().flatten().copied()),
            ReductionStep::DeltaReduce { independent_set, .. } => independent_set.clone(),
        }
    }

    pub fn remap(&self, m: &[usize]) -> ReductionStep {
        let set = |s: &VertexSet| sorted(s.iter().map(|&v| m[v]));
        match self {
            ReductionStep::LowDegree { vertex, palette } => ReductionStep::LowDegree { vertex: m[*vertex], palette: *palette },
            ReductionStep::Copycat { removed, donor } => ReductionStep::Copycat { removed: set(removed), donor: set(donor) },
            ReductionStep::D1Extend { witness, palette } => {
                ReductionStep::D1Extend { witness: set(witness), palette: *palette }
            }
            ReductionStep::CliqueCopy { removed, donor_clique } => {
                ReductionStep::CliqueCopy { removed: set(removed), donor_clique: set(donor_clique) }
            }
            ReductionStep::A7Peel { components, palette } => {
                ReductionStep::A7Peel { components: components.iter().map(set).collect(), palette: *palette }
            }
            ReductionStep::DeltaReduce { independent_set, color } => {
                ReductionStep::DeltaReduce { independent_set: set(independent_set), color: *color }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source")]
pub enum ColoringSource {
    Brooks,
    Oracle { reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderSource {
    /// The bag order listed for the case.
    Listed,
    /// A smallest-last order computed because the listed one failed the check.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Terminal {
    Empty,
    /// Smallest free color along `order`.
    Greedy { order: Vec<usize> },
    /// Colors given outright.
    Explicit { source: ColoringSource, colors: Vec<(usize, u32)> },
    /// Set `j` takes color `palette - j`, then `order` is colored greedily.
    CaseStrategy {
        template: TemplateId,
        branch: String,
        sets: Vec<VertexSet>,
        order: Vec<usize>,
        palette: u32,
        order_source: OrderSource,
    },
    /// Independent traces for the connected components.
    Components { parts: Vec<ReductionTrace> },
    /// Color the kept vertices, then lift every unit from its kept clique.
    CliqueLift { units: Vec<LiftUnit>, star: Box<ReductionTrace> },
}

impl Terminal {
    pub fn name(&self) -> &'static str {
        match self {
            Terminal::Empty => "Empty",
            Terminal::Greedy { .. } => "Greedy",
            Terminal::Explicit { source: ColoringSource::Brooks, .. } => "Brooks",
            Terminal::Explicit { .. } => "Oracle",
            Terminal::CaseStrategy { .. } => "CaseStrategy",
            Terminal::Components { .. } => "Components",
            Terminal::CliqueLift { .. } => "CliqueLift",
        }
    }

    pub fn remap(&self, m: &[usize]) -> Terminal {
        let set = |s: &VertexSet| sorted(s.iter().map(|&v| m[v]));
        let seq = |s: &[usize]| s.iter().map(|&v| m[v]).collect::<Vec<_>>();
        match self {
            Terminal::Empty => Terminal::Empty,
            Terminal::Greedy { order } => Terminal::Greedy { order: seq(order) },
            Terminal::Explicit { source, colors } => Terminal::Explicit {
                source: source.clone(),
                colors: colors.iter().map(|&(v, c)| (m[v], c)).collect(),
            },
            Terminal::CaseStrategy { template, branch, sets, order, palette, order_source } => Terminal::CaseStrategy {
                template: *template,
                branch: branch.clone(),
                sets: sets.iter().map(set).collect(),
                order: seq(order),
                palette: *palette,
                order_source: *order_source,
            },
            Terminal::Components { parts } => Terminal::Components { parts: parts.iter().map(|p| p.remap(m)).collect() },
            Terminal::CliqueLift { units, star } => Terminal::CliqueLift {
                units: units
                    .iter()
                    .map(|u| LiftUnit { vertices: set(&u.vertices), cotree: remap_cotree(&u.cotree, m), kept: set(&u.kept) })
                    .collect(),
                star: Box::new(star.remap(m)),
            },
        }
    }
}

fn remap_cotree(t: &Cotree, m: &[usize]) -> Cotree {
    match t {
        Cotree::Leaf(v) => Cotree::Leaf(m[*v]),
        Cotree::Union(ch) => Cotree::Union(ch.iter().map(|c| remap_cotree(c, m)).collect()),
        Cotree::Join(ch) => Cotree::Join(ch.iter().map(|c| remap_cotree(c, m)).collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub vertices: VertexSet,
    pub palette: u32,
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
}

impl ReductionTrace {
    /// Rewrites every vertex index through `map` (old index → new index).
    pub fn remap(&self, map: &[usize]) -> ReductionTrace {
        ReductionTrace {
            vertices: sorted(self.vertices.iter().map(|&v| map[v])),
            palette: self.palette,
            steps: self.steps.iter().map(|s| s.remap(map)).collect(),
            terminal: self.terminal.remap(map),
        }
    }

    /// Vertices left for the terminal once all steps have removed theirs.
    pub fn remaining(&self) -> VertexSet {
        let mut gone = std::collections::BTreeSet::new();
        for s in &self.steps {
            gone.extend(s.removed());
        }
        self.vertices.iter().copied().filter(|v| !gone.contains(v)).collect()
    }

    /// Counts of step kinds and terminal names across the whole trace, nested parts included.
    pub fn summary(&self) -> std::collections::BTreeMap<&'static str, usize> {
        let mut out = std::collections::BTreeMap::new();
        self.tally(&mut out);
        out
    }

    fn tally(&self, out: &mut std::collections::BTreeMap<&'static str, usize>) {
        for s in &self.steps {
            *out.entry(s.kind()).or_default() += 1;
        }
        *out.entry(self.terminal.name()).or_default() += 1;
        match &self.terminal {
            Terminal::Components { parts } => parts.iter().for_each(|p| p.tally(out)),
            Terminal::CliqueLift { star, .. } => star.tally(out),
            _ => {}
        }
    }
}

fn broken(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(format!("trace replay: {}", msg.into()))
}

/// Re-executes a trace on `g` and returns the verified coloring it encodes.
pub fn replay(g: &Graph, trace: &ReductionTrace) -> Result<Coloring> {
    let all: Vec<usize> = (0..g.n()).collect();
    if trace.vertices != all {
        return Err(broken("top-level trace must cover every vertex"));
    }
    let mut colors = vec![0u32; g.n()];
    replay_into(g, trace, &mut colors)?;
    let c = Coloring { colors, palette: trace.palette };
    if !verify_coloring(g, &c) {
        return Err(broken("replayed coloring is not proper within the palette"));
    }
    Ok(c)
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    let mut a = a.to_vec();
    a.sort_unstable();
    a == b
}

fn replay_into(g: &Graph, trace: &ReductionTrace, colors: &mut [u32]) -> Result<()> {
    if trace.vertices.iter().any(|&v| v >= g.n()) {
        return Err(broken("vertex out of range"));
    }
    let mut alive = vec![false; g.n()];
    trace.vertices.iter().for_each(|&v| alive[v] = true);
    let mut levels = Vec::with_capacity(trace.steps.len());
    for step in &trace.steps {
        levels.push(alive.clone());
        for v in step.removed() {
            if !alive[v] {
                return Err(broken(format!("vertex {v} removed twice or outside the trace")));
            }
            alive[v] = false;
        }
    }
    let remaining = trace.remaining();
    run_terminal(g, &trace.terminal, &remaining, colors)?;
    for (step, level) in trace.steps.iter().zip(&levels).rev() {
        run_step(g, step, level, colors)?;
    }
    Ok(())
}

fn run_terminal(g: &Graph, terminal: &Terminal, remaining: &[usize], colors: &mut [u32]) -> Result<()> {
    match terminal {
        Terminal::Empty => {
            if !remaining.is_empty() {
                return Err(broken("empty terminal with vertices left"));
            }
        }
        Terminal::Greedy { order } => {
            if !same_set(order, remaining) {
                return Err(broken("greedy order does not match the remaining vertices"));
            }
            crate::coloring::greedy_along(g, order, colors);
        }
        Terminal::Explicit { colors: given, .. } => {
            let vs: Vec<usize> = given.iter().map(|&(v, _)| v).collect();
            if !same_set(&vs, remaining) {
                return Err(broken("explicit coloring does not match the remaining vertices"));
            }
            for &(v, c) in given {
                colors[v] = c;
            }
        }
        Terminal::CaseStrategy { sets, order, palette, .. } => {
            let mut covered: Vec<usize> = sets.iter().flatten().copied().collect();
            covered.extend(order);
            if !same_set(&covered, remaining) {
                return Err(broken("case strategy does not cover the remaining vertices"));
            }
            let (sub, map) = g.induced_subgraph(remaining)?;
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in map.iter().enumerate() {
                local[v] = i;
            }
            let local_sets: Vec<VertexSet> = sets.iter().map(|s| s.iter().map(|&v| local[v]).collect()).collect();
            let local_order: Vec<usize> = order.iter().map(|&v| local[v]).collect();
            let c = color_with_independent_sets(&sub, &local_sets, *palette, Some(&local_order))?;
            for (i, &v) in map.iter().enumerate() {
                colors[v] = c.colors[i];
            }
        }
        Terminal::Components { parts } => {
            let covered: Vec<usize> = parts.iter().flat_map(|p| p.vertices.iter().copied()).collect();
            if !same_set(&covered, remaining) {
                return Err(broken("component traces do not partition the remaining vertices"));
            }
            for p in parts {
                replay_into(g, p, colors)?;
            }
        }
        Terminal::CliqueLift { units, star } => {
            let mut covered = star.vertices.clone();
            for u in units {
                if !u.kept.iter().all(|v| u.vertices.contains(v)) || !u.cotree.describes(g, &u.vertices) {
                    return Err(broken("lift unit is inconsistent with the graph"));
                }
                covered.extend(u.vertices.iter().filter(|v| !u.kept.contains(v)));
            }
            if !same_set(&covered, remaining) {
                return Err(broken("clique lift does not cover the remaining vertices"));
            }
            replay_into(g, star, colors)?;
            for u in units {
                let mut available: Vec<u32> = u.kept.iter().map(|&v| colors[v]).collect();
                available.sort_unstable();
                available.dedup();
                if available.len() < u.cotree.omega() {
                    return Err(broken("kept clique carries too few colors"));
                }
                let mut local = vec![0u32; g.n()];
                u.cotree.color_into(0, &mut local);
                for &v in &u.vertices {
                    colors[v] = available[local[v] as usize - 1];
                }
            }
        }
    }
    Ok(())
}

/// `level` flags the vertices present when the step was taken.
fn run_step(g: &Graph, step: &ReductionStep, level: &[bool], colors: &mut [u32]) -> Result<()> {
    match step {
        ReductionStep::LowDegree { vertex, palette } => {
            let c = smallest_free_color(g, *vertex, colors);
            if c > *palette {
                return Err(broken(format!("vertex {vertex} has no free color within {palette}")));
            }
            colors[*vertex] = c;
        }
        ReductionStep::Copycat { removed, donor } | ReductionStep::CliqueCopy { removed, donor_clique: donor } => {
            let present: Vec<usize> = (0..g.n()).filter(|&v| level[v]).collect();
            let (sub, map) = g.induced_subgraph(&present)?;
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in map.iter().enumerate() {
                local[v] = i;
            }
            let to_local = |s: &[usize]| -> Result<Vec<usize>> {
                s.iter()
                    .map(|&v| (local[v] != usize::MAX).then_some(local[v]).ok_or_else(|| broken("copy set outside its level")))
                    .collect()
            };
            let partial = Coloring { colors: map.iter().map(|&v| colors[v]).collect(), palette: u32::MAX };
            let out = copycat_extend(&sub, &to_local(removed)?, &to_local(donor)?, &partial)?;
            for (i, &v) in map.iter().enumerate() {
                colors[v] = out.colors[i];
            }
        }
        ReductionStep::D1Extend { witness, palette } => {
            let (h, map) = g.induced_subgraph(witness)?;
            let lists = map
                .iter()
                .map(|&v| {
                    (1..=*palette)
                        .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
                        .collect::<Vec<u32>>()
                })
                .collect();
            let local = extend_list_coloring(&h, &ListAssignment { lists })?;
            for (i, &v) in map.iter().enumerate() {
                colors[v] = local[i];
            }
        }
        ReductionStep::A7Peel { components, palette } => {
            for comp in components {
                for &v in comp {
                    let c = smallest_free_color(g, v, colors);
                    if c > *palette {
                        return Err(broken(format!("pendant vertex {v} has no free color within {palette}")));
                    }
                    colors[v] = c;
                }
            }
        }
        ReductionStep::DeltaReduce { independent_set, color } => {
            if !g.is_independent(independent_set) {
                return Err(broken("reduction set is not independent"));
            }
            for &v in independent_set {
                colors[v] = *color;
            }
        }
    }
    Ok(())
}
