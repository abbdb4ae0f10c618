//! Bruhat order via the subword property.

use super::{CoxeterGraph, GroupElement};

/// Tests `x <= w` in Bruhat order.
///
/// `w_word` must be reduced; `x_word` may be any word for the element `x`
/// (fully commutative or not).  Uses the greedy subword algorithm: scan a
/// reduced word of `w` from the right, stripping matching right descents
/// from `x`; then `x <= w` iff `x` is consumed completely.
pub fn bruhat_leq(g: &CoxeterGraph, x_word: &[usize], w_word: &[usize]) -> bool {
    let mut v = GroupElement::from_word(g, x_word);
    for &s in w_word.iter().rev() {
        if v.is_right_descent(s) {
            v = v.mul_gen_right(g, s);
        }
    }
    v.is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    #[test]
    fn identity_below_everything() {
        let g = build_graph(6).unwrap();
        assert!(bruhat_leq(&g, &[], &[]));
        assert!(bruhat_leq(&g, &[], &[1, 2, 4, 0, 5]));
    }

    #[test]
    fn distinct_generators_incomparable() {
        let g = build_graph(6).unwrap();
        assert!(!bruhat_leq(&g, &[1], &[2]));
        assert!(!bruhat_leq(&g, &[2], &[1]));
        assert!(bruhat_leq(&g, &[1], &[1]));
    }

    #[test]
    fn example_pair_is_comparable() {
        let g = build_graph(6).unwrap();
        let y = [1, 2, 4, 0, 5];
        let w = [1, 2, 3, 4, 0, 3, 5, 2, 4, 1, 3, 2, 0, 3, 4, 5];
        assert!(bruhat_leq(&g, &y, &w));
        assert!(!bruhat_leq(&g, &w, &y));
    }

    /// Brute-force oracle: `x <= w` iff some subword of a reduced word of
    /// `w` multiplies out to `x`.
    fn subword_oracle(g: &CoxeterGraph, x_word: &[usize], w_word: &[usize]) -> bool {
        let x = GroupElement::from_word(g, x_word);
        (0u32..1 << w_word.len()).any(|mask| {
            let sub: Vec<usize> = w_word
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            GroupElement::from_word(g, &sub) == x
        })
    }

    #[test]
    fn greedy_matches_subword_oracle_on_short_words() {
        let g = build_graph(6).unwrap();
        let words: Vec<Vec<usize>> = vec![
            vec![],
            vec![1],
            vec![2, 3],
            vec![3, 2],
            vec![1, 3],
            vec![2, 3, 2],
            vec![0, 3, 2, 1],
            vec![1, 2, 3, 4],
            vec![4, 3, 0, 3],
            vec![2, 3, 4, 0, 3, 2],
        ];
        for x in &words {
            for w in &words {
                // Skip non-reduced w (the greedy requires reduced w).
                let wl = GroupElement::from_word(&g, w).length(&g);
                if wl != w.len() {
                    continue;
                }
                assert_eq!(
                    bruhat_leq(&g, x, w),
                    subword_oracle(&g, x, w),
                    "x={x:?} w={w:?}"
                );
            }
        }
    }
}
