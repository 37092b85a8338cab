//! The independent-set coloring engine, case strategies, the reduction-driven
//! eight-coloring procedure, the top-level solver and the exact oracle.

mod cases;
mod engine;
mod oracle;

pub use cases::{apply_case_strategy, case_branches, CaseBranch, CaseOutcome};
pub use engine::{back_degree_profile, color_with_independent_sets, degeneracy_order, max_back_degree};
pub use oracle::{exact_chromatic, exact_chromatic_capped, k_color, DEFAULT_ORACLE_CAP};

pub use crate::coloring::{verify_coloring, Coloring};
pub use crate::trace::{replay, ColoringSource, OrderSource, ReductionTrace, Terminal};

use crate::classify::{classify_trusted, ClassLabel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{clique_number, is_p5_gem_free};
use crate::reductions::{brooks_color, delta_reduce, find_copycat, find_d1_catalog, find_low_degree, ReductionStep};
use crate::structure::{clique_reduce, Template};

/// Colors a (P5, gem)-free graph with `ω ≤ 8` and `Δ ≤ 9` using at most eight colors.
pub fn color8(g: &Graph) -> Result<(Coloring, ReductionTrace)> {
    is_p5_gem_free(g).map_err(Error::NotP5GemFree)?;
    let delta = g.max_degree();
    if delta > 9 {
        return Err(Error::DeltaTooLarge { delta, allowed: 9 });
    }
    let (omega, clique) = clique_number(g);
    if omega > 8 {
        return Err(Error::CliqueTooLarge { omega, bound: 8, clique });
    }
    let trace = color8_trace(g)?;
    let coloring = replay(g, &trace)?;
    Ok((coloring, trace))
}

/// Knobs for [`solve_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Reject inputs containing an induced P5 or gem. When off, the pipeline
    /// runs anyway and only the final verification vouches for the result.
    pub require_p5_gem_free: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { require_p5_gem_free: true }
    }
}

/// Colors a (P5, gem)-free graph with `Δ ≥ 9` and `ω ≤ Δ - 1` using at most `Δ - 1` colors.
pub fn solve(g: &Graph) -> Result<(Coloring, ReductionTrace)> {
    solve_with(g, SolveOptions::default())
}

pub fn solve_with(g: &Graph, options: SolveOptions) -> Result<(Coloring, ReductionTrace)> {
    if options.require_p5_gem_free {
        is_p5_gem_free(g).map_err(Error::NotP5GemFree)?;
    }
    let delta = g.max_degree();
    if delta < 9 {
        return Err(Error::DeltaTooSmall { delta, required: 9 });
    }
    let (omega, clique) = clique_number(g);
    if omega > delta - 1 {
        return Err(Error::CliqueTooLarge { omega, bound: delta - 1, clique });
    }
    let trace = if delta == 9 { color8_trace(g)? } else { delta_reduce(g, color8_trace)? };
    let coloring = replay(g, &trace)?;
    if coloring.palette as usize > delta - 1 {
        return Err(Error::InternalInconsistency(format!("palette {} exceeds Delta - 1", coloring.palette)));
    }
    Ok((coloring, trace))
}

const PALETTE: u32 = 8;

/// Builds the trace of the eight-coloring procedure; preconditions are trusted.
fn color8_trace(g: &Graph) -> Result<ReductionTrace> {
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut cur = g.clone();
    let mut to_host: Vec<usize> = (0..g.n()).collect();
    let terminal = loop {
        let local = match next_move(&cur)? {
            Move::Done(t) => break t.remap(&to_host),
            Move::Remove(step) => step,
        };
        let (rest, map) = cur.without(&local.removed());
        steps.push(local.remap(&to_host));
        to_host = map.iter().map(|&v| to_host[v]).collect();
        cur = rest;
    };
    Ok(ReductionTrace { vertices: (0..g.n()).collect(), palette: PALETTE, steps, terminal })
}

enum Move {
    Done(Terminal),
    Remove(ReductionStep),
}

/// Decides the next reduction or the terminal coloring for `g`, in `g`'s indices.
fn next_move(g: &Graph) -> Result<Move> {
    if g.n() == 0 {
        return Ok(Move::Done(Terminal::Empty));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let parts = comps
            .iter()
            .map(|c| {
                let (sub, map) = g.induced_subgraph(c)?;
                Ok(color8_trace(&sub)?.remap(&map))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Move::Done(Terminal::Components { parts }));
    }
    let delta = g.max_degree();
    if delta <= 7 {
        return Ok(Move::Done(Terminal::Greedy { order: (0..g.n()).collect() }));
    }
    if delta == 8 {
        let c = brooks_color(g)?;
        let colors = c.colors.into_iter().enumerate().collect();
        return Ok(Move::Done(Terminal::Explicit { source: ColoringSource::Brooks, colors }));
    }
    if let Some(v) = find_low_degree(g, PALETTE as usize) {
        return Ok(Move::Remove(ReductionStep::LowDegree { vertex: v, palette: PALETTE }));
    }
    if let Some((a, b)) = find_copycat(g) {
        return Ok(Move::Remove(ReductionStep::Copycat { removed: a, donor: b }));
    }
    if let Some(w) = find_d1_catalog(g) {
        return Ok(Move::Remove(ReductionStep::D1Extend { witness: w.vertices(), palette: PALETTE }));
    }
    match classify_trusted(g)? {
        ClassLabel::Perfect => {
            let omega = clique_number(g).0;
            let colors = k_color(g, omega)
                .ok_or_else(|| Error::InternalInconsistency("graph without induced C5 has chi > omega".into()))?;
            Ok(Move::Done(Terminal::Explicit {
                source: ColoringSource::Oracle { reason: "no induced C5".into() },
                colors: colors.into_iter().enumerate().collect(),
            }))
        }
        ClassLabel::Expansion(bags) => {
            let template = Template::new(bags.template);
            let red = clique_reduce(g, &template, &bags)?;
            if !red.is_identity() {
                let star = color8_trace(&red.star)?.remap(&red.star_to_host);
                return Ok(Move::Done(Terminal::CliqueLift { units: red.units, star: Box::new(star) }));
            }
            Ok(match apply_case_strategy(g, &template, &bags)? {
                CaseOutcome::Colored(t) => Move::Done(t),
                CaseOutcome::Reduce(step) => Move::Remove(step),
            })
        }
    }
}
