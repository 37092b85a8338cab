//! Exact detection of the small induced patterns the coloring pipeline relies on.

mod clique;

pub use clique::{
    clique_number, cliques_of_size, max_clique_within, maximum_independent_set,
    maximum_independent_set_within,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Small fixed patterns, each with a canonical vertex order:
/// path order for paths, P4 order followed by the apex for the gem,
/// cyclic order for C5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    P4,
    P5,
    Gem,
    C5,
    Clique(usize),
}

impl Pattern {
    pub fn order(self) -> usize {
        match self {
            Pattern::P4 => 4,
            Pattern::P5 | Pattern::Gem | Pattern::C5 => 5,
            Pattern::Clique(t) => t,
        }
    }

    /// Whether positions `i` and `j` of the canonical order are adjacent.
    pub fn adjacent(self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let (a, b) = (i.min(j), i.max(j));
        match self {
            Pattern::P4 | Pattern::P5 => b == a + 1,
            Pattern::Gem => b == 4 || b == a + 1,
            Pattern::C5 => b == a + 1 || (a, b) == (0, 4),
            Pattern::Clique(_) => true,
        }
    }

    pub fn graph(self) -> Graph {
        let k = self.order();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.adjacent(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(k, &edges).expect("pattern edges are valid")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::P4 => write!(f, "P4"),
            Pattern::P5 => write!(f, "P5"),
            Pattern::Gem => write!(f, "GEM"),
            Pattern::C5 => write!(f, "C5"),
            Pattern::Clique(t) => write!(f, "K{t}"),
        }
    }
}

/// An ordered vertex tuple realizing a pattern in its canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    /// Direct edge comparison of the induced subgraph against the pattern.
    pub fn verify(&self, g: &Graph) -> bool {
        let w = &self.vertices;
        if w.len() != self.pattern.order() || w.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] == w[j] || g.has_edge(w[i], w[j]) != self.pattern.adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.pattern)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Finds the lexicographically smallest ordered tuple inducing `pattern`,
/// or `None` when no vertex subset induces it.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    find_induced_within(g, pattern, None)
}

/// Same as [`find_induced`] but restricted to vertices flagged in `allowed`.
pub fn find_induced_within(g: &Graph, pattern: Pattern, allowed: Option<&[bool]>) -> Option<PatternWitness> {
    let k = pattern.order();
    if k == 0 || g.n() < k {
        return None;
    }
    // Position i is anchored on the earliest earlier position it must be adjacent to.
    let anchors: Vec<Option<usize>> = (0..k).map(|i| (0..i).find(|&j| pattern.adjacent(i, j))).collect();
    let all: Vec<usize> = (0..g.n()).collect();
    let mut tuple = Vec::with_capacity(k);
    if extend(g, pattern, &anchors, &all, allowed, &mut tuple) {
        Some(PatternWitness { pattern, vertices: tuple })
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    pattern: Pattern,
    anchors: &[Option<usize>],
    all: &[usize],
    allowed: Option<&[bool]>,
    tuple: &mut Vec<usize>,
) -> bool {
    let i = tuple.len();
    if i == anchors.len() {
        return true;
    }
    let candidates = match anchors[i] {
        Some(j) => g.neighbors(tuple[j]),
        None => all,
    };
    for &v in candidates {
        if allowed.is_some_and(|a| !a[v]) || tuple.contains(&v) {
            continue;
        }
        if tuple.iter().enumerate().all(|(j, &w)| g.has_edge(v, w) == pattern.adjacent(i, j)) {
            tuple.push(v);
            if extend(g, pattern, anchors, all, allowed, tuple) {
                return true;
            }
            tuple.pop();
        }
    }
    false
}

/// `Ok(())` when the graph has neither an induced P5 nor an induced gem,
/// otherwise the first violating witness (P5 checked first).
pub fn is_p5_gem_free(g: &Graph) -> Result<(), PatternWitness> {
    for p in [Pattern::P5, Pattern::Gem] {
        if let Some(w) = find_induced(g, p) {
            return Err(w);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_in_itself() {
        let w = find_induced(&Graph::path(5), Pattern::P5).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert!(w.verify(&Graph::path(5)));
    }

    #[test]
    fn gem_has_no_p5() {
        let gem = Graph::complete(1).join(&Graph::path(4));
        assert!(find_induced(&gem, Pattern::P5).is_none());
        let w = find_induced(&gem, Pattern::Gem).unwrap();
        assert!(w.verify(&gem));
        assert_eq!(w.vertices[4], 0);
    }

    #[test]
    fn c5_is_free() {
        let c5 = Graph::cycle(5);
        assert!(is_p5_gem_free(&c5).is_ok());
        assert_eq!(find_induced(&c5, Pattern::C5).unwrap().vertices, vec![0, 1, 2, 3, 4]);
        let err = is_p5_gem_free(&Graph::path(5)).unwrap_err();
        assert_eq!(err.pattern, Pattern::P5);
    }

    #[test]
    fn c5_side_of_a_join() {
        // K5 on 0..5 joined with C5 on 5..10
        let g = Graph::complete(5).join(&Graph::cycle(5));
        let w = find_induced(&g, Pattern::C5).unwrap();
        assert_eq!(w.vertices, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn display_format() {
        let w = find_induced(&Graph::cycle(5), Pattern::C5).unwrap();
        assert_eq!(w.to_string(), "C5: 0 1 2 3 4");
    }

    #[test]
    fn witness_verification_rejects_wrong_orders() {
        let w = PatternWitness { pattern: Pattern::P5, vertices: vec![0, 2, 1, 3, 4] };
        assert!(!w.verify(&Graph::path(5)));
    }
}
