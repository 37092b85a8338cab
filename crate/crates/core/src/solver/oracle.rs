//! Exact chromatic number by DSATUR branch and bound.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::clique_number;

/// Default vertex cap for [`exact_chromatic`].
pub const DEFAULT_ORACLE_CAP: usize = 24;

/// A proper coloring with colors `1..=k`, or `None` when `g` is not `k`-colorable.
pub fn k_color(g: &Graph, k: usize) -> Option<Vec<u32>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut s = Dsatur { g, k, colors: vec![0; n], nb_count: vec![vec![0; k + 1]; n], sat: vec![0; n] };
    s.search(0, 0).then_some(s.colors)
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<u32>,
    nb_count: Vec<Vec<u16>>,
    sat: Vec<usize>,
}

impl Dsatur<'_> {
    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let free_deg = self.g.neighbors(v).iter().filter(|&&w| self.colors[w] == 0).count();
                (self.sat[v], free_deg, std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex exists")
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = c as u32;
        for &w in self.g.neighbors(v) {
            self.nb_count[w][c] += 1;
            if self.nb_count[w][c] == 1 {
                self.sat[w] += 1;
            }
        }
    }

    fn unset(&mut self, v: usize, c: usize) {
        self.colors[v] = 0;
        for &w in self.g.neighbors(v) {
            self.nb_count[w][c] -= 1;
            if self.nb_count[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, max_used: usize) -> bool {
        if colored == self.g.n() {
            return true;
        }
        let v = self.pick();
        if self.sat[v] >= self.k {
            return false;
        }
        for c in 1..=self.k.min(max_used + 1) {
            if self.nb_count[v][c] != 0 {
                continue;
            }
            self.set(v, c);
            if self.search(colored + 1, max_used.max(c)) {
                return true;
            }
            self.unset(v, c);
        }
        false
    }
}

/// Exact chromatic number with a witness, refusing graphs above the default cap.
pub fn exact_chromatic(g: &Graph) -> Result<(usize, Coloring)> {
    exact_chromatic_capped(g, DEFAULT_ORACLE_CAP)
}

/// Exact chromatic number with a witness, refusing graphs with more than `cap` vertices.
pub fn exact_chromatic_capped(g: &Graph, cap: usize) -> Result<(usize, Coloring)> {
    if g.n() > cap {
        return Err(Error::OracleCapExceeded { n: g.n(), cap });
    }
    let lower = clique_number(g).0;
    for k in lower..=g.n() {
        if let Some(colors) = k_color(g, k) {
            return Ok((k, Coloring { colors, palette: k as u32 }));
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    #[test]
    fn small_values() {
        assert_eq!(exact_chromatic(&Graph::cycle(5)).unwrap().0, 3);
        assert_eq!(exact_chromatic(&Graph::cycle(6)).unwrap().0, 2);
        assert_eq!(exact_chromatic(&Graph::complete(6)).unwrap().0, 6);
        assert_eq!(exact_chromatic(&Graph::empty(0)).unwrap().0, 0);
        let (chi, c) = exact_chromatic(&Graph::complete(4).join(&Graph::cycle(5))).unwrap();
        assert_eq!(chi, 7);
        assert!(verify_coloring(&Graph::complete(4).join(&Graph::cycle(5)), &c));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(exact_chromatic_capped(&Graph::empty(30), 24), Err(Error::OracleCapExceeded { n: 30, cap: 24 })));
    }

    #[test]
    fn k_color_refuses_too_few() {
        assert!(k_color(&Graph::cycle(7), 2).is_none());
        assert!(k_color(&Graph::cycle(7), 3).is_some());
    }
}
