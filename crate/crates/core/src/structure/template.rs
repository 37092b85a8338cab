use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// The eleven structure templates; `G(i)` means the template of case `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TemplateId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
    G9,
    G10,
    H,
}

impl TemplateId {
    /// All templates in classification order.
    pub const ALL: [TemplateId; 11] = [
        TemplateId::G1,
        TemplateId::G2,
        TemplateId::G3,
        TemplateId::G4,
        TemplateId::G5,
        TemplateId::G6,
        TemplateId::G7,
        TemplateId::G8,
        TemplateId::G9,
        TemplateId::G10,
        TemplateId::H,
    ];

    /// Case number, 1 through 11.
    pub fn case_number(self) -> usize {
        Self::ALL.iter().position(|&t| t == self).unwrap() + 1
    }

    pub fn from_case(case: usize) -> Option<Self> {
        Self::ALL.get(case.checked_sub(1)?).copied()
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("h") || s.eq_ignore_ascii_case("g11") {
            return Some(TemplateId::H);
        }
        let digits = s.strip_prefix('G').or_else(|| s.strip_prefix('g'))?;
        Self::from_case(digits.parse().ok()?).filter(|&t| t != TemplateId::H)
    }

    /// Bag name used in human-readable output.
    pub fn bag_name(self, node: usize) -> String {
        match self {
            TemplateId::H => format!("A{}", node + 1),
            _ => format!("Q{}", node + 1),
        }
    }
}

impl fmt::Display for TemplateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateId::H => write!(f, "H"),
            t => write!(f, "G{}", t.case_number()),
        }
    }
}

/// What a bag of the template may look like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeRole {
    MustBeClique,
    MayBeCograph,
    /// The bag adjacent to the pendant bag; never reduced to a clique.
    HubA6,
    /// The pendant bag: anticomplete to everything except the hub, free to the hub,
    /// components homogeneous.
    PendantA7,
}

/// How two distinct bags must be joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Complete,
    Anticomplete,
    Free,
}

#[derive(Clone, Debug)]
pub struct Template {
    pub id: TemplateId,
    pub graph: Graph,
    pub roles: Vec<NodeRole>,
}

const C5: [(usize, usize); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];

const G8_EDGES: [(usize, usize); 14] = [
    (4, 6),
    (3, 4),
    (2, 3),
    (1, 2),
    (1, 5),
    (4, 5),
    (4, 7),
    (2, 7),
    (3, 8),
    (1, 8),
    (1, 6),
    (6, 7),
    (5, 8),
    (7, 8),
];

/// Edge list of a template, 1-indexed by bag.
fn edge_list(id: TemplateId) -> (usize, Vec<(usize, usize)>) {
    let with_c5 = |extra: &[(usize, usize)]| C5.iter().chain(extra).copied().collect::<Vec<_>>();
    match id {
        TemplateId::G1 => (5, C5.to_vec()),
        TemplateId::G2 | TemplateId::H => {
            let mut e = with_c5(&[(6, 1), (6, 3), (6, 4)]);
            if id == TemplateId::H {
                e.push((6, 7));
                return (7, e);
            }
            (6, e)
        }
        TemplateId::G3 => (7, with_c5(&[(4, 6), (6, 1), (4, 7), (7, 2), (6, 7)])),
        TemplateId::G4 => (
            7,
            vec![
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 2),
                (3, 7),
                (7, 6),
                (6, 2),
                (6, 5),
                (7, 4),
                (1, 2),
                (1, 4),
            ],
        ),
        TemplateId::G5 => (8, with_c5(&[(4, 8), (8, 1), (8, 3), (4, 6), (6, 7), (7, 3), (6, 1), (1, 7)])),
        TemplateId::G6 => (
            8,
            vec![
                (3, 4),
                (2, 3),
                (1, 2),
                (3, 6),
                (5, 6),
                (1, 5),
                (1, 8),
                (4, 8),
                (4, 7),
                (6, 7),
                (2, 7),
                (7, 8),
                (1, 6),
                (4, 5),
            ],
        ),
        TemplateId::G7 => (
            8,
            vec![
                (2, 5),
                (2, 3),
                (3, 7),
                (5, 7),
                (2, 6),
                (6, 8),
                (5, 8),
                (7, 8),
                (3, 6),
                (4, 5),
                (3, 4),
                (1, 7),
                (1, 2),
            ],
        ),
        TemplateId::G8 => (8, G8_EDGES.to_vec()),
        TemplateId::G9 => {
            let mut e = G8_EDGES.to_vec();
            e.extend([(1, 9), (9, 4)]);
            (9, e)
        }
        TemplateId::G10 => {
            let mut e = G8_EDGES.to_vec();
            e.extend([(5, 9), (9, 6), (3, 9), (9, 2)]);
            (9, e)
        }
    }
}

impl Template {
    pub fn new(id: TemplateId) -> Self {
        let (n, edges) = edge_list(id);
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u - 1, v - 1)).collect();
        let graph = Graph::new(n, &edges).expect("template edges are valid");
        let mut roles = vec![NodeRole::MayBeCograph; n];
        if id == TemplateId::H {
            roles[5] = NodeRole::HubA6;
            roles[6] = NodeRole::PendantA7;
        }
        Template { id, graph, roles }
    }

    pub fn all() -> Vec<Template> {
        TemplateId::ALL.iter().map(|&id| Template::new(id)).collect()
    }

    pub fn len(&self) -> usize {
        self.graph.n()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.n() == 0
    }

    /// The starred form: every cograph bag must be a clique.
    pub fn starred(&self) -> Template {
        let roles = self
            .roles
            .iter()
            .map(|&r| if r == NodeRole::MayBeCograph { NodeRole::MustBeClique } else { r })
            .collect();
        Template { id: self.id, graph: self.graph.clone(), roles }
    }

    pub fn pendant(&self) -> Option<usize> {
        self.roles.iter().position(|&r| r == NodeRole::PendantA7)
    }

    pub fn relation(&self, a: usize, b: usize) -> Relation {
        let pendant = |x: usize| self.roles[x] == NodeRole::PendantA7;
        let hub = |x: usize| self.roles[x] == NodeRole::HubA6;
        if (pendant(a) && hub(b)) || (pendant(b) && hub(a)) {
            Relation::Free
        } else if self.graph.has_edge(a, b) {
            Relation::Complete
        } else {
            Relation::Anticomplete
        }
    }

    /// True when the only modules of the template graph are trivial and the
    /// template has no free bag pair.
    pub fn is_prime(&self) -> bool {
        self.pendant().is_none() && super::modules::is_prime(&self.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{find_induced, is_p5_gem_free, Pattern};

    #[test]
    fn every_template_is_free_and_has_a_c5() {
        for t in Template::all() {
            assert!(is_p5_gem_free(&t.graph).is_ok(), "{}", t.id);
            assert!(find_induced(&t.graph, Pattern::C5).is_some(), "{}", t.id);
        }
    }

    #[test]
    fn sizes_and_edge_counts() {
        let expected = [(5, 5), (6, 8), (7, 10), (7, 11), (8, 13), (8, 14), (8, 13), (8, 14), (9, 16), (9, 18), (7, 9)];
        for (t, (n, m)) in Template::all().iter().zip(expected) {
            assert_eq!((t.graph.n(), t.graph.edge_count()), (n, m), "{}", t.id);
        }
    }

    #[test]
    fn names_round_trip() {
        for id in TemplateId::ALL {
            assert_eq!(TemplateId::parse(&id.to_string()), Some(id));
        }
        assert_eq!(TemplateId::parse("G11"), Some(TemplateId::H));
        assert_eq!(TemplateId::parse("G12"), None);
        assert_eq!(TemplateId::H.bag_name(6), "A7");
    }

    #[test]
    fn pendant_relations() {
        let h = Template::new(TemplateId::H);
        assert_eq!(h.relation(6, 5), Relation::Free);
        assert_eq!(h.relation(6, 0), Relation::Anticomplete);
        assert_eq!(h.relation(5, 0), Relation::Complete);
        assert!(!h.is_prime());
        assert!(Template::new(TemplateId::G1).is_prime());
    }
}
