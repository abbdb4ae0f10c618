//! Canonical forms and heaps of fully commutative elements.
//!
//! The canonical form is the left-justified Cartier–Foata layering: layer 0
//! holds the letters that can begin a reduced word, and every letter of a
//! later layer has an equal-or-adjacent letter in the layer directly below
//! it.  Layers are sorted ascending, giving linear-time equality and hashing.

use super::{CoxeterGraph, Side};
use crate::bits::Bits;
use crate::{Error, Result};

/// A fully commutative element of `W(E_n)` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FcElement {
    layers: Vec<Vec<usize>>,
    len: usize,
}

impl FcElement {
    /// The identity element (empty layering).
    pub fn identity() -> Self {
        FcElement::default()
    }

    /// Coxeter length.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// The Cartier–Foata layers, each sorted ascending.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// The canonical reduced word: layers concatenated in order.
    pub fn word(&self) -> Vec<usize> {
        self.layers.iter().flatten().copied().collect()
    }

    /// Left or right descent set.
    ///
    /// The left descent set is the set of letters available as a first
    /// layer; the right descent set is the left descent set of the inverse,
    /// read off as the labels with no equal-or-adjacent letter above them.
    pub fn descents(&self, g: &CoxeterGraph, side: Side) -> Vec<usize> {
        match side {
            Side::Left => self.layers.first().cloned().unwrap_or_default(),
            Side::Right => {
                let mut out = Vec::new();
                for (i, layer) in self.layers.iter().enumerate() {
                    'letter: for &s in layer {
                        for later in &self.layers[i + 1..] {
                            if later.iter().any(|&t| t == s || g.adjacent(s, t)) {
                                continue 'letter;
                            }
                        }
                        out.push(s);
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// The inverse element: reverse any reduced word and renormalize.
    pub fn inverse(&self, g: &CoxeterGraph) -> FcElement {
        let mut word = self.word();
        word.reverse();
        normalize(g, &word).expect("reverse of a reduced FC word is a reduced FC word")
    }

    /// The heap of letter occurrences, in canonical word order.
    pub fn heap(&self, g: &CoxeterGraph) -> Heap {
        Heap::of_word(g, &self.word())
    }
}

/// The heap of a word: its letter occurrences partially ordered by the
/// transitive closure of precedence between equal-or-adjacent labels.
/// Linear extensions read off exactly the words in the commutation class.
#[derive(Debug, Clone)]
pub struct Heap {
    labels: Vec<usize>,
    below: Vec<Bits>,
}

impl Heap {
    pub fn of_word(g: &CoxeterGraph, word: &[usize]) -> Heap {
        let m = word.len();
        let mut below: Vec<Bits> = Vec::with_capacity(m);
        for j in 0..m {
            let mut b = Bits::new(m);
            for i in 0..j {
                if word[i] == word[j] || g.adjacent(word[i], word[j]) {
                    b.set(i);
                    let prior = below[i].clone();
                    b.or_assign(&prior);
                }
            }
            below.push(b);
        }
        Heap {
            labels: word.to_vec(),
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// True iff occurrence `i` lies strictly below occurrence `j`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.is_below(i, j) || self.is_below(j, i)
    }

    /// Number of elements strictly below `j`.
    pub fn below_count(&self, j: usize) -> usize {
        self.below[j].count()
    }

    /// The occurrences strictly below `j`.
    pub fn below_set(&self, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_below(i, j)).collect()
    }
}

/// Normalizes a reduced word of a fully commutative element.
///
/// Rejects non-reduced input (`NotReduced`: some pair of consecutive equal
/// letters has no adjacent letter between them, so a cancellation is
/// available) and words with a long-braid factor (`NotFullyCommutative`:
/// some pair of consecutive equal letters is separated by exactly one
/// adjacent letter).  A word that needs a braid move to expose a
/// cancellation, such as `1 2 1 2`, is reported as `NotFullyCommutative`
/// since the braid factor is what the heap detects.
pub fn normalize(g: &CoxeterGraph, word: &[usize]) -> Result<FcElement> {
    g.check_word(word)?;
    let heap = Heap::of_word(g, word);
    let mut min_separation = usize::MAX;
    for s in 0..g.rank() {
        let occs: Vec<usize> = (0..word.len()).filter(|&i| word[i] == s).collect();
        for pair in occs.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let separators = (0..word.len())
                .filter(|&u| g.adjacent(word[u], s) && heap.is_below(a, u) && heap.is_below(u, b))
                .count();
            min_separation = min_separation.min(separators);
        }
    }
    if min_separation == 0 {
        return Err(Error::NotReduced);
    }
    if min_separation == 1 {
        return Err(Error::NotFullyCommutative);
    }

    // Left-justified insertion: each letter falls to the layer just above
    // its deepest equal-or-adjacent predecessor.
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut depth_of: Vec<usize> = Vec::new();
    for (j, &s) in word.iter().enumerate() {
        let depth = (0..j)
            .filter(|&i| word[i] == s || g.adjacent(word[i], s))
            .map(|i| depth_of[i] + 1)
            .max()
            .unwrap_or(0);
        depth_of.push(depth);
        if depth == layers.len() {
            layers.push(Vec::new());
        }
        layers[depth].push(s);
    }
    for layer in &mut layers {
        layer.sort();
    }
    Ok(FcElement {
        layers,
        len: word.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    fn g6() -> CoxeterGraph {
        build_graph(6).unwrap()
    }

    #[test]
    fn example_word_normalizes_to_length_five() {
        let x = normalize(&g6(), &[1, 2, 4, 0, 5]).unwrap();
        assert_eq!(x.len(), 5);
        assert_eq!(x.layers(), &[vec![0, 1, 4], vec![2, 5]]);
    }

    #[test]
    fn commuting_words_normalize_identically() {
        let g = g6();
        let a = normalize(&g, &[3, 1]).unwrap();
        let b = normalize(&g, &[1, 3]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn braid_factor_rejected() {
        assert_eq!(
            normalize(&g6(), &[2, 3, 2]),
            Err(Error::NotFullyCommutative)
        );
    }

    #[test]
    fn cancellation_rejected() {
        assert_eq!(normalize(&g6(), &[1, 1]), Err(Error::NotReduced));
        // A cancellation behind a commuting letter is still direct.
        assert_eq!(normalize(&g6(), &[1, 3, 1]), Err(Error::NotReduced));
    }

    #[test]
    fn hidden_braid_is_reported_as_not_fully_commutative() {
        // 1 2 1 2 reduces only after a braid move; the heap sees the factor.
        assert_eq!(
            normalize(&g6(), &[1, 2, 1, 2]),
            Err(Error::NotFullyCommutative)
        );
    }

    #[test]
    fn descent_sets() {
        let g = g6();
        let x = normalize(&g, &[1, 2]).unwrap();
        assert_eq!(x.descents(&g, Side::Left), vec![1]);
        assert_eq!(x.descents(&g, Side::Right), vec![2]);
        let a = normalize(&g, &[0, 2, 5]).unwrap();
        assert_eq!(a.descents(&g, Side::Left), vec![0, 2, 5]);
        assert_eq!(a.descents(&g, Side::Right), vec![0, 2, 5]);
    }

    #[test]
    fn inverse_is_an_involution() {
        let g = g6();
        let w = normalize(&g, &[1, 2, 3, 4, 0, 3, 5, 2, 4, 1, 3, 2, 0, 3, 4, 5]).unwrap();
        assert_eq!(w.inverse(&g).inverse(&g), w);
        assert_eq!(FcElement::identity().inverse(&g), FcElement::identity());
        let xy = normalize(&g, &[1, 2]).unwrap();
        assert_eq!(xy.inverse(&g), normalize(&g, &[2, 1]).unwrap());
    }

    #[test]
    fn example_16_letter_word_has_left_descent_one() {
        let g = g6();
        let w = normalize(&g, &[1, 2, 3, 4, 0, 3, 5, 2, 4, 1, 3, 2, 0, 3, 4, 5]).unwrap();
        assert!(w.descents(&g, Side::Left).contains(&1));
        assert_eq!(w.len(), 16);
    }

    #[test]
    fn heap_order_of_a_chain() {
        let g = g6();
        let h = Heap::of_word(&g, &[4, 3, 2]);
        assert!(h.is_below(0, 1) && h.is_below(1, 2) && h.is_below(0, 2));
        assert!(!h.is_below(2, 0));
    }
}
