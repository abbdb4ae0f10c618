//! Monomial-basis multiplication and the `a`-function.
//!
//! Products of monomial basis elements are always a nonnegative power of
//! `delta` times a single basis element, so products are carried as a pair
//! `(delta exponent, element)` and never expanded.

use crate::coxeter::{normalize, CoxeterGraph, FcElement, Heap, Side};
use crate::Error;

/// `delta^exp * b_elt`, the closed form of any product of monomial basis
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledMonomial {
    pub exp: u32,
    pub elt: FcElement,
}

impl ScaledMonomial {
    pub fn of(elt: FcElement) -> Self {
        ScaledMonomial { exp: 0, elt }
    }

    pub fn one() -> Self {
        Self::of(FcElement::identity())
    }
}

/// Left multiplication `b_s * (delta^exp b_w)`.
///
/// Three cases: `s` is a left descent of `w` (absorb with a `delta`); `sw`
/// is fully commutative (prepend); or `sw` is complex, in which case the
/// braid relation contracts `b_s b_t b_s` to `b_s`.  In the last case the
/// heap of `w` contains a lowest occurrence of `s` whose strict down-set is
/// the down-set of a single adjacent letter `t`; removing that pair of
/// occurrences and rebuilding gives the factor the contraction leaves.
pub fn mult_gen_left(g: &CoxeterGraph, s: usize, m: &ScaledMonomial) -> ScaledMonomial {
    if m.elt.descents(g, Side::Left).contains(&s) {
        return ScaledMonomial {
            exp: m.exp + 1,
            elt: m.elt.clone(),
        };
    }
    let mut word = Vec::with_capacity(m.elt.len() + 1);
    word.push(s);
    word.extend(m.elt.word());
    match normalize(g, &word) {
        Ok(elt) => ScaledMonomial { exp: m.exp, elt },
        Err(Error::NotFullyCommutative) => {
            let rest = star_reduce(g, &m.elt, s);
            let rebuilt = mult_word_left(
                g,
                &rest,
                &ScaledMonomial {
                    exp: m.exp,
                    elt: FcElement::identity(),
                },
            );
            // A product that lengthens never mints a delta factor.
            debug_assert_eq!(rebuilt.exp, m.exp);
            mult_gen_left(g, s, &rebuilt)
        }
        Err(e) => unreachable!("s not a left descent, so sw is reduced: {e}"),
    }
}

/// Removes from `w` the lowest occurrence of `s` together with its unique
/// adjacent support, returning the remaining letters in heap order.
fn star_reduce(g: &CoxeterGraph, w: &FcElement, s: usize) -> Vec<usize> {
    let word = w.word();
    let heap = w.heap(g);
    let e_s = word
        .iter()
        .position(|&c| c == s)
        .expect("complex product implies s occurs in w");
    let supports: Vec<usize> = heap
        .below_set(e_s)
        .into_iter()
        .filter(|&u| g.adjacent(word[u], s))
        .collect();
    assert_eq!(
        supports.len(),
        1,
        "complex product has a unique adjacent support"
    );
    let e_t = supports[0];
    debug_assert!({
        let mut ideal = heap.below_set(e_t);
        ideal.push(e_t);
        ideal.sort();
        ideal == heap.below_set(e_s)
    });
    word.iter()
        .enumerate()
        .filter(|&(i, _)| i != e_s && i != e_t)
        .map(|(_, &c)| c)
        .collect()
}

/// Folds `mult_gen_left` over `word` from the right.
pub fn mult_word_left(g: &CoxeterGraph, word: &[usize], m: &ScaledMonomial) -> ScaledMonomial {
    word.iter()
        .rev()
        .fold(m.clone(), |acc, &s| mult_gen_left(g, s, &acc))
}

/// The unique `delta^k b_z` with `b_x b_y = delta^k b_z`.
pub fn product(g: &CoxeterGraph, x: &FcElement, y: &FcElement) -> ScaledMonomial {
    mult_word_left(g, &x.word(), &ScaledMonomial::of(y.clone()))
}

/// The `a`-function: the maximum size of a heap antichain of `w`.
///
/// Incomparable heap elements carry distinct non-adjacent labels, so
/// antichains are exactly the commuting factors `i(A)` of reduced
/// decompositions `w = x i(A) y`.
pub fn a_value(g: &CoxeterGraph, w: &FcElement) -> usize {
    maximum_antichains(&w.heap(g)).0
}

/// All maximum antichains of a heap, as sorted position lists.
fn maximum_antichains(heap: &Heap) -> (usize, Vec<Vec<usize>>) {
    let all: Vec<usize> = (0..heap.len()).collect();
    let mut best = 0;
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    search(heap, &mut Vec::new(), &all, &mut best, &mut out);
    (best, out)
}

fn search(
    heap: &Heap,
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut usize,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() + candidates.len() < *best {
        return;
    }
    match current.len().cmp(best) {
        std::cmp::Ordering::Greater => {
            *best = current.len();
            out.clear();
            out.push(current.clone());
        }
        std::cmp::Ordering::Equal => {
            if !out.contains(current) {
                out.push(current.clone());
            }
        }
        std::cmp::Ordering::Less => {}
    }
    for (i, &c) in candidates.iter().enumerate() {
        let rest: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&d| !heap.comparable(c, d))
            .collect();
        current.push(c);
        search(heap, current, &rest, best, out);
        current.pop();
    }
}

/// A reduced decomposition `w = x * i(A) * y` with `#A = a(w)`.
///
/// Among maximum antichains the heap-maximal one is chosen (the join of the
/// lattice of maximum antichains, placing every element as late as
/// possible), making runs reproducible.  `x` collects the letters strictly
/// below the antichain in heap order and `y` the rest.
pub fn max_antichain_decomposition(
    g: &CoxeterGraph,
    w: &FcElement,
) -> (FcElement, Vec<usize>, FcElement) {
    let word = w.word();
    let heap = w.heap(g);
    let (size, antichains) = maximum_antichains(&heap);
    // Join of all maximum antichains: the maximal elements of their union.
    let mut union: Vec<usize> = antichains.into_iter().flatten().collect();
    union.sort();
    union.dedup();
    let top: Vec<usize> = union
        .iter()
        .copied()
        .filter(|&u| !union.iter().any(|&v| heap.is_below(u, v)))
        .collect();
    assert_eq!(top.len(), size, "join of maximum antichains is maximum");

    let below: Vec<usize> = (0..word.len())
        .filter(|&p| top.iter().any(|&a| heap.is_below(p, a)))
        .collect();
    let rest: Vec<usize> = (0..word.len())
        .filter(|&p| !top.contains(&p) && !below.contains(&p))
        .collect();
    let pick = |positions: &[usize]| -> Vec<usize> { positions.iter().map(|&p| word[p]).collect() };
    let x = normalize(g, &pick(&below)).expect("prefix of a reduced FC word");
    let y = normalize(g, &pick(&rest)).expect("suffix of a reduced FC word");
    let mut labels: Vec<usize> = top.iter().map(|&p| word[p]).collect();
    labels.sort();
    (x, labels, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::i_of;
    use crate::coxeter::build_graph;

    fn g6() -> CoxeterGraph {
        build_graph(6).unwrap()
    }

    fn fc(g: &CoxeterGraph, w: &[usize]) -> FcElement {
        normalize(g, w).unwrap()
    }

    #[test]
    fn square_of_a_generator_absorbs() {
        let g = g6();
        let b2 = ScaledMonomial::of(fc(&g, &[2]));
        let r = mult_gen_left(&g, 2, &b2);
        assert_eq!(r.exp, 1);
        assert_eq!(r.elt, fc(&g, &[2]));
    }

    #[test]
    fn braid_contraction() {
        let g = g6();
        // b_2 * b_{32} = b_2
        let m = ScaledMonomial::of(fc(&g, &[3, 2]));
        let r = mult_gen_left(&g, 2, &m);
        assert_eq!(r, ScaledMonomial::of(fc(&g, &[2])));
    }

    #[test]
    fn commuting_letters_prepend() {
        let g = g6();
        let r = mult_gen_left(&g, 1, &ScaledMonomial::of(fc(&g, &[3])));
        assert_eq!(r, ScaledMonomial::of(fc(&g, &[1, 3])));
    }

    #[test]
    fn deep_star_reduction() {
        let g = g6();
        // b_2 * b_{432}: the adjacent support of the lowest 2 sits below
        // another letter, so the contraction also commutes past b_4.
        let r = mult_gen_left(&g, 2, &ScaledMonomial::of(fc(&g, &[4, 3, 2])));
        assert_eq!(r, ScaledMonomial::of(fc(&g, &[4, 2])));
        // b_2 * b_{43542} needs a cascade of two contractions.
        let r = mult_gen_left(&g, 2, &ScaledMonomial::of(fc(&g, &[4, 3, 5, 4, 2])));
        assert_eq!(r, ScaledMonomial::of(fc(&g, &[4, 2])));
    }

    #[test]
    fn product_examples() {
        let g = g6();
        // b_{23} * b_2 = b_2
        let r = product(&g, &fc(&g, &[2, 3]), &fc(&g, &[2]));
        assert_eq!(r, ScaledMonomial::of(fc(&g, &[2])));
        // b_{13} * b_{31} = delta^2 b_{13}
        let w = fc(&g, &[1, 3]);
        let r = product(&g, &w, &w.inverse(&g));
        assert_eq!(r.exp, 2);
        assert_eq!(r.elt, w);
        // identity acts trivially
        let y = fc(&g, &[1, 2, 4, 0, 5]);
        assert_eq!(
            product(&g, &FcElement::identity(), &y),
            ScaledMonomial::of(y)
        );
    }

    #[test]
    fn a_value_examples() {
        let g = g6();
        assert_eq!(a_value(&g, &FcElement::identity()), 0);
        assert_eq!(a_value(&g, &fc(&g, &[1, 3])), 2);
        assert_eq!(a_value(&g, &fc(&g, &[2, 3])), 1);
        let g7 = build_graph(7).unwrap();
        let ia = i_of(&g7, &[0, 2, 4, 6]).unwrap();
        assert_eq!(a_value(&g7, &ia), 4);
    }

    #[test]
    fn decomposition_examples() {
        let g = g6();
        let (x, a, y) = max_antichain_decomposition(&g, &FcElement::identity());
        assert!(x.is_identity() && a.is_empty() && y.is_identity());

        let w = fc(&g, &[2, 3]);
        let (x, a, y) = max_antichain_decomposition(&g, &w);
        assert_eq!(x, fc(&g, &[2]));
        assert_eq!(a, vec![3]);
        assert!(y.is_identity());

        let ia = i_of(&g, &[1, 3, 5]).unwrap();
        let (x, a, y) = max_antichain_decomposition(&g, &ia);
        assert!(x.is_identity() && y.is_identity());
        assert_eq!(a, vec![1, 3, 5]);

        let big = fc(&g, &[1, 2, 3, 4, 0, 3, 5, 2, 4, 1, 3, 2, 0, 3, 4, 5]);
        let (x, a, y) = max_antichain_decomposition(&g, &big);
        assert_eq!(a.len(), a_value(&g, &big));
        let mut word = x.word();
        word.extend_from_slice(&a);
        word.extend(y.word());
        assert_eq!(normalize(&g, &word).unwrap(), big);
    }
}
