//! Word utilities: parsing and commutation classes.

use std::collections::HashSet;

use super::CoxeterGraph;
use crate::{Error, Result};

/// Parses a space-separated list of generator indices.  The empty string
/// denotes the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad generator index `{tok}`")))
        })
        .collect()
}

pub fn word_to_string(word: &[usize]) -> String {
    word.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// All words reachable from `word` by swapping adjacent commuting letters.
///
/// For a reduced word of a fully commutative element this is exactly the set
/// of its reduced words.  Exponential in general; intended for exhaustive
/// verification at small lengths.
pub fn commutation_class(g: &CoxeterGraph, word: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = vec![word.to_vec()];
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop() {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] != w[i + 1] && !g.adjacent(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    #[test]
    fn parse_round_trip() {
        let w = parse_word("1 2 4 0 5").unwrap();
        assert_eq!(w, vec![1, 2, 4, 0, 5]);
        assert_eq!(word_to_string(&w), "1 2 4 0 5");
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert!(parse_word("1 x").is_err());
    }

    #[test]
    fn commutation_class_of_commuting_pair() {
        let g = build_graph(6).unwrap();
        let class = commutation_class(&g, &[1, 3]);
        assert_eq!(class.len(), 2);
        assert!(class.contains(&vec![3, 1]));
        // Adjacent letters do not commute.
        assert_eq!(commutation_class(&g, &[2, 3]).len(), 1);
    }
}
