//! Breadth-first enumeration of fully commutative elements.

use std::collections::HashSet;

use super::{normalize, CoxeterGraph, FcElement, Side};
use crate::{Error, Result};

/// Which side the BFS extends words on.  Both directions enumerate the same
/// set; having two lets verification compare independent orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfsSide {
    Right,
    Left,
}

/// Streams every fully commutative element exactly once, in non-decreasing
/// length order.
pub struct FcEnumerator<'a> {
    graph: &'a CoxeterGraph,
    side: BfsSide,
    max_len: Option<usize>,
    seen: HashSet<FcElement>,
    frontier: Vec<FcElement>,
    next_frontier: Vec<FcElement>,
    cursor: usize,
}

/// Starts an enumeration.  `W_c(E_n)` is finite for every rank, but the
/// sweep is memory-hungry at high rank, so ranks above 8 must supply a
/// length bound.
pub fn enumerate_fc(g: &CoxeterGraph, max_len: Option<usize>) -> Result<FcEnumerator<'_>> {
    enumerate_fc_side(g, max_len, BfsSide::Right)
}

pub fn enumerate_fc_side(
    g: &CoxeterGraph,
    max_len: Option<usize>,
    side: BfsSide,
) -> Result<FcEnumerator<'_>> {
    if max_len.is_none() && g.rank() > 8 {
        return Err(Error::UnboundedEnumeration(g.rank()));
    }
    let identity = FcElement::identity();
    Ok(FcEnumerator {
        graph: g,
        side,
        max_len,
        seen: HashSet::from([identity.clone()]),
        frontier: vec![identity],
        next_frontier: Vec::new(),
        cursor: 0,
    })
}

impl Iterator for FcEnumerator<'_> {
    type Item = FcElement;

    fn next(&mut self) -> Option<FcElement> {
        loop {
            if self.cursor < self.frontier.len() {
                let x = self.frontier[self.cursor].clone();
                self.cursor += 1;
                self.extend(&x);
                return Some(x);
            }
            if self.next_frontier.is_empty() {
                return None;
            }
            self.frontier = std::mem::take(&mut self.next_frontier);
            // Deterministic order within a length stratum.
            self.frontier.sort_by(|a, b| a.word().cmp(&b.word()));
            self.cursor = 0;
        }
    }
}

impl FcEnumerator<'_> {
    fn extend(&mut self, x: &FcElement) {
        if let Some(max) = self.max_len {
            if x.len() >= max {
                return;
            }
        }
        let g = self.graph;
        let descents = match self.side {
            BfsSide::Right => x.descents(g, Side::Right),
            BfsSide::Left => x.descents(g, Side::Left),
        };
        for s in 0..g.rank() {
            if descents.contains(&s) {
                continue;
            }
            let mut word = x.word();
            match self.side {
                BfsSide::Right => word.push(s),
                BfsSide::Left => word.insert(0, s),
            }
            if let Ok(y) = normalize(g, &word) {
                if self.seen.insert(y.clone()) {
                    self.next_frontier.push(y);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    #[test]
    fn short_strata_have_expected_sizes() {
        let g = build_graph(6).unwrap();
        let by_len = |l: usize| {
            enumerate_fc(&g, Some(l))
                .unwrap()
                .filter(|x| x.len() == l)
                .count()
        };
        assert_eq!(by_len(0), 1);
        assert_eq!(by_len(1), 6);
        // 10 ordered adjacent pairs plus 10 commuting pairs.
        assert_eq!(by_len(2), 20);
    }

    #[test]
    fn lengths_are_non_decreasing() {
        let g = build_graph(7).unwrap();
        let mut last = 0;
        for x in enumerate_fc(&g, Some(5)).unwrap() {
            assert!(x.len() >= last);
            last = x.len();
        }
    }

    #[test]
    fn unbounded_high_rank_is_rejected() {
        let g = build_graph(9).unwrap();
        assert!(matches!(
            enumerate_fc(&g, None),
            Err(Error::UnboundedEnumeration(9))
        ));
        assert!(enumerate_fc(&g, Some(4)).is_ok());
    }

    #[test]
    fn left_and_right_bfs_agree_on_bounded_sweep() {
        let g = build_graph(6).unwrap();
        let right: std::collections::HashSet<_> =
            enumerate_fc_side(&g, Some(4), BfsSide::Right).unwrap().collect();
        let left: std::collections::HashSet<_> =
            enumerate_fc_side(&g, Some(4), BfsSide::Left).unwrap().collect();
        assert_eq!(right, left);
    }
}
