//! Per-case coloring strategies for irreducible clique expansions with maximum degree nine.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::max_clique_within;
use crate::reductions::find_copycat;
use crate::structure::{is_starred, BagPartition, Template, TemplateId};
use crate::trace::{ColoringSource, OrderSource, ReductionStep, Terminal};

use super::engine::{degeneracy_order, max_back_degree};
use super::oracle::k_color;

/// One coloring branch: which bag-size condition it needs, the independent
/// sets (as `(bag, representative)` pairs, both 1-based / 0-based) and the
/// listed bag order, read as an elimination order.
#[derive(Clone, Debug)]
pub struct CaseBranch {
    pub template: TemplateId,
    pub name: &'static str,
    pub sets: &'static [&'static [(usize, usize)]],
    pub order: &'static [usize],
    condition: fn(&[usize]) -> bool,
}

const TWO_SETS_ANY: fn(&[usize]) -> bool = |_| true;

static BRANCHES: [CaseBranch; 10] = [
    CaseBranch {
        template: TemplateId::G2,
        name: "|Q6|>=2",
        sets: &[&[(2, 0), (5, 0), (6, 0)], &[(2, 1), (5, 1), (6, 1)]],
        order: &[1, 4, 3, 5, 2, 6],
        condition: |s| s[5] >= 2,
    },
    CaseBranch {
        template: TemplateId::G2,
        name: "|Q6|=1,|Q1|>=2",
        sets: &[&[(2, 0), (5, 0), (6, 0)]],
        order: &[1, 5, 2, 4, 3, 6],
        condition: |s| s[5] == 1 && s[0] >= 2,
    },
    CaseBranch {
        template: TemplateId::G3,
        name: "|Q4|>=2",
        sets: &[&[(2, 0), (5, 0), (6, 0)], &[(1, 0), (3, 0), (7, 0)]],
        order: &[4, 3, 5, 2, 1, 6, 7],
        condition: |s| s[3] >= 2,
    },
    CaseBranch {
        template: TemplateId::G4,
        name: "main",
        sets: &[&[(1, 0), (5, 0), (7, 0)], &[(1, 1), (3, 0), (6, 0)]],
        order: &[4, 2, 1, 5, 3, 7, 6],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::G6,
        name: "main",
        sets: &[&[(3, 0), (5, 0), (7, 0)], &[(2, 0), (6, 0), (8, 0)]],
        order: &[4, 1, 8, 5, 7, 6, 3, 2],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::G7,
        name: "main",
        sets: &[&[(4, 0), (6, 0), (7, 0)], &[(2, 0), (4, 1), (8, 0)]],
        order: &[5, 3, 4, 7, 2, 8, 6, 1],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::G8,
        name: "main",
        sets: &[&[(3, 0), (5, 0), (7, 0)], &[(2, 0), (6, 0), (8, 0)]],
        order: &[4, 1, 3, 2, 7, 8, 6, 5],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::G9,
        name: "main",
        sets: &[&[(3, 0), (5, 0), (7, 0), (9, 0)], &[(2, 0), (6, 0), (8, 0), (9, 1)]],
        order: &[4, 1, 3, 2, 7, 8, 9, 6, 5],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::G10,
        name: "main",
        sets: &[&[(3, 0), (5, 0), (7, 0)], &[(2, 0), (6, 0), (8, 0)]],
        order: &[9, 4, 1, 3, 2, 7, 8, 6, 5],
        condition: TWO_SETS_ANY,
    },
    CaseBranch {
        template: TemplateId::H,
        name: "|A6|>=2",
        sets: &[&[(2, 0), (5, 0), (6, 0)], &[(2, 1), (5, 1), (6, 1)]],
        order: &[1, 5, 2, 4, 3, 6, 7],
        condition: |s| s[5] >= 2,
    },
];

/// Every coloring branch, in case order.
pub fn case_branches() -> &'static [CaseBranch] {
    &BRANCHES
}

impl CaseBranch {
    /// Degeneracy the remainder must have: palette minus reserved colors minus one.
    pub fn bound(&self, k: usize) -> usize {
        k - self.sets.len() - 1
    }

    /// Whether the bag sizes meet the branch condition and supply every representative.
    pub fn applies(&self, sizes: &[usize]) -> bool {
        (self.condition)(sizes) && self.sets.iter().flat_map(|s| s.iter()).all(|&(bag, rep)| sizes[bag - 1] > rep)
    }

    /// The bag order as printed, e.g. `(Q1,Q4,Q3,Q5,Q2,Q6)`.
    pub fn order_text(&self) -> String {
        let names: Vec<String> = self.order.iter().map(|&b| self.template.bag_name(b - 1)).collect();
        format!("({})", names.join(","))
    }

    /// The sets, each written as `{x2,x5',...}`.
    pub fn sets_text(&self) -> Vec<String> {
        let letter = if self.template == TemplateId::H { 'a' } else { 'x' };
        self.sets
            .iter()
            .map(|s| {
                let items: Vec<String> =
                    s.iter().map(|&(b, r)| format!("{letter}{b}{}", "'".repeat(r))).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect()
    }

    /// Representatives are the lowest-index vertices of each bag. Returns the
    /// independent sets and the coloring sequence of the remaining vertices,
    /// which runs through the listed order backwards.
    pub fn select(&self, bags: &BagPartition) -> (Vec<VertexSet>, Vec<usize>) {
        let sets: Vec<VertexSet> = self
            .sets
            .iter()
            .map(|s| crate::graph::sorted(s.iter().map(|&(b, r)| bags.bags[b - 1][r])))
            .collect();
        let taken: Vec<usize> = sets.iter().flatten().copied().collect();
        let mut elimination: Vec<usize> = Vec::new();
        for &b in self.order {
            elimination.extend(bags.bags[b - 1].iter().filter(|v| !taken.contains(v)));
        }
        elimination.reverse();
        (sets, elimination)
    }
}

/// What a case strategy decided for an irreducible starred member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseOutcome {
    Colored(Terminal),
    /// A reducible configuration: remove it, color the rest, extend.
    Reduce(ReductionStep),
}

const PALETTE: usize = 8;

/// Applies the strategy of the case matching `bags` to a starred member with
/// maximum degree nine. Indices are those of `g`.
pub fn apply_case_strategy(g: &Graph, template: &Template, bags: &BagPartition) -> Result<CaseOutcome> {
    if bags.template != template.id || !is_starred(g, template, bags) {
        return Err(Error::Precondition("case strategies need a starred member and its own template".into()));
    }
    let sizes = bags.sizes();
    if template.id == TemplateId::H {
        let hub_clique = max_clique_within(g, &bags.bags[5]);
        for side in [4, 1] {
            if sizes[side] <= hub_clique.len() {
                return Ok(CaseOutcome::Reduce(ReductionStep::CliqueCopy {
                    removed: bags.bags[side].clone(),
                    donor_clique: hub_clique,
                }));
            }
        }
    }
    for branch in BRANCHES.iter().filter(|b| b.template == template.id) {
        if branch.applies(&sizes) {
            return strategy(g, branch, bags).map(CaseOutcome::Colored);
        }
    }
    if template.id == TemplateId::H && sizes[5] == 1 {
        return Ok(CaseOutcome::Reduce(ReductionStep::A7Peel {
            components: g.components_within(&bags.bags[6]),
            palette: PALETTE as u32,
        }));
    }
    if let Some((a, b)) = find_copycat(g) {
        return Ok(CaseOutcome::Reduce(ReductionStep::Copycat { removed: a, donor: b }));
    }
    Err(Error::InternalInconsistency(contradiction(template.id, &sizes)))
}

fn strategy(g: &Graph, branch: &CaseBranch, bags: &BagPartition) -> Result<Terminal> {
    let (sets, listed) = branch.select(bags);
    let bound = branch.bound(PALETTE);
    let terminal = |order, order_source| Terminal::CaseStrategy {
        template: branch.template,
        branch: branch.name.to_string(),
        sets: sets.clone(),
        order,
        palette: PALETTE as u32,
        order_source,
    };
    if max_back_degree(g, &listed) <= bound {
        return Ok(terminal(listed, OrderSource::Listed));
    }
    let (computed, degeneracy) = degeneracy_order(g, &listed);
    if degeneracy <= bound {
        return Ok(terminal(computed, OrderSource::Computed));
    }
    let colors = k_color(g, PALETTE).ok_or_else(|| {
        Error::InternalInconsistency(format!("{} member is not {PALETTE}-colorable", branch.template))
    })?;
    Ok(Terminal::Explicit {
        source: ColoringSource::Oracle {
            reason: format!("{} {}: no order meets back-degree {bound}", branch.template, branch.name),
        },
        colors: colors.into_iter().enumerate().collect(),
    })
}

fn contradiction(id: TemplateId, sizes: &[usize]) -> String {
    let why = match id {
        TemplateId::G1 => "some bag has at least four vertices, which yields a K4-join catalog shape or a vertex of degree at least 10",
        TemplateId::G2 => "|Q1| = 1 forces |Q3|, |Q4| <= 1 and then d(x6) = 3 < 8",
        TemplateId::G3 => "|Q4| = 1 forces |Q1| = |Q2| = |Q6| = |Q7| = 1 and then d(x6) = 3 < 8",
        TemplateId::G5 => "|Q1| <= 2 and |Q3|, |Q4| <= 3 force d(x1) >= 10",
        _ => "no coloring branch applies and no copycat pair exists",
    };
    format!("{id} member with bag sizes {sizes:?} reached a contradiction branch: {why}")
}
