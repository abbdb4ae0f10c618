//! The Coxeter system of type `E_n` and its fully commutative elements.
//!
//! Vertices are labelled `0..n`: vertices `1, ..., n-1` form a path in order
//! and vertex `0` is attached to vertex `3`, which is the unique vertex of
//! degree 3.

mod bruhat;
mod enumerate;
mod fc;
mod geom;
mod words;

pub use bruhat::bruhat_leq;
pub use enumerate::{enumerate_fc, enumerate_fc_side, BfsSide, FcEnumerator};
pub use fc::{normalize, FcElement, Heap};
pub use geom::GroupElement;
pub use words::{commutation_class, parse_word, word_to_string};

use crate::{Error, Result};

/// Which side a descent set is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The Coxeter graph of type `E_n`, `n >= 6`.
///
/// Bonds are simply laced: `m(s, t) = 3` exactly on edges, `2` on distinct
/// non-adjacent pairs and `1` on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    n: usize,
}

/// Builds the type `E_n` graph, rejecting ranks below 6.
pub fn build_graph(n: usize) -> Result<CoxeterGraph> {
    if n < 6 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(CoxeterGraph { n })
}

impl CoxeterGraph {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// True iff `s` and `t` are joined by an edge.
    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        debug_assert!(s < self.n && t < self.n);
        let (a, b) = (s.min(t), s.max(t));
        (a >= 1 && b == a + 1) || (a == 0 && b == 3)
    }

    /// Coxeter bond `m(s, t)`.
    pub fn bond(&self, s: usize, t: usize) -> u32 {
        if s == t {
            1
        } else if self.adjacent(s, t) {
            3
        } else {
            2
        }
    }

    /// Sorted neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adjacent(u, v)).collect()
    }

    /// Edge set as ordered pairs `(s, t)` with `s < t`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (1..self.n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, 3));
        e.sort();
        e
    }

    pub fn check_generator(&self, s: usize) -> Result<()> {
        if s < self.n {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                gen: s,
                rank: self.n,
            })
        }
    }

    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&s| self.check_generator(s))
    }
}
