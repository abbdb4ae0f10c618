//! Integer reflection representation of `W(E_n)`.
//!
//! Elements are stored as the matrix of their action on simple-root
//! coordinates together with the matrix of the inverse, so that both right
//! and left descent sets are column-sign tests.  This supports arbitrary
//! (not necessarily fully commutative) elements, as needed by the Bruhat
//! order and the Kazhdan–Lusztig oracle.

use super::CoxeterGraph;

/// A group element of `W(E_n)` in the reflection representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    n: usize,
    /// Row-major matrix: column `j` is the image of the simple root `j`.
    mat: Vec<i64>,
    /// Matrix of the inverse element.
    inv: Vec<i64>,
}

impl GroupElement {
    pub fn identity(g: &CoxeterGraph) -> Self {
        let n = g.rank();
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        GroupElement {
            n,
            inv: mat.clone(),
            mat,
        }
    }

    pub fn from_word(g: &CoxeterGraph, word: &[usize]) -> Self {
        let mut e = Self::identity(g);
        for &s in word {
            e = e.mul_gen_right(g, s);
        }
        e
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.mat
            .iter()
            .enumerate()
            .all(|(k, &v)| v == i64::from(k / n == k % n))
    }

    /// The element `self * s`.
    pub fn mul_gen_right(&self, g: &CoxeterGraph, s: usize) -> Self {
        let n = self.n;
        let mut out = self.clone();
        right_mul_gen(g, &mut out.mat, n, s);
        left_mul_gen(g, &mut out.inv, n, s);
        out
    }

    /// The element `s * self`.
    pub fn mul_gen_left(&self, g: &CoxeterGraph, s: usize) -> Self {
        let n = self.n;
        let mut out = self.clone();
        left_mul_gen(g, &mut out.mat, n, s);
        right_mul_gen(g, &mut out.inv, n, s);
        out
    }

    /// True iff `len(self * s) < len(self)`, i.e. `self` maps root `s` to a
    /// negative root.
    pub fn is_right_descent(&self, s: usize) -> bool {
        (0..self.n).all(|r| self.mat[r * self.n + s] <= 0)
    }

    /// True iff `len(s * self) < len(self)`.
    pub fn is_left_descent(&self, s: usize) -> bool {
        (0..self.n).all(|r| self.inv[r * self.n + s] <= 0)
    }

    /// ShortLex normal form: strip the smallest left descent repeatedly.
    /// Also yields the length as the word size.
    pub fn shortlex(&self, g: &CoxeterGraph) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while !cur.is_identity() {
            let s = (0..self.n)
                .find(|&s| cur.is_left_descent(s))
                .expect("non-identity element has a left descent");
            word.push(s);
            cur = cur.mul_gen_left(g, s);
        }
        word
    }

    pub fn length(&self, g: &CoxeterGraph) -> usize {
        self.shortlex(g).len()
    }

    /// Key identifying the element (the matrix of its action).
    pub fn key(&self) -> &[i64] {
        &self.mat
    }
}

/// `m := m * M(s)`: neighbour columns gain the old column `s`, which is
/// then negated.
fn right_mul_gen(g: &CoxeterGraph, m: &mut [i64], n: usize, s: usize) {
    for r in 0..n {
        let base = r * n;
        let old = m[base + s];
        for t in g.neighbours(s) {
            m[base + t] += old;
        }
        m[base + s] = -old;
    }
}

/// `m := M(s) * m`: row `s` becomes the neighbour-row sum minus itself.
fn left_mul_gen(g: &CoxeterGraph, m: &mut [i64], n: usize, s: usize) {
    for c in 0..n {
        let mut acc = -m[s * n + c];
        for t in g.neighbours(s) {
            acc += m[t * n + c];
        }
        m[s * n + c] = acc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    #[test]
    fn generators_are_involutions() {
        let g = build_graph(6).unwrap();
        for s in 0..6 {
            let e = GroupElement::from_word(&g, &[s, s]);
            assert!(e.is_identity());
        }
    }

    #[test]
    fn braid_relation_holds() {
        let g = build_graph(6).unwrap();
        let a = GroupElement::from_word(&g, &[2, 3, 2]);
        let b = GroupElement::from_word(&g, &[3, 2, 3]);
        assert_eq!(a, b);
        let c = GroupElement::from_word(&g, &[1, 3, 1, 3]);
        assert!(c.is_identity());
    }

    #[test]
    fn shortlex_picks_smallest_reduced_word() {
        let g = build_graph(6).unwrap();
        let e = GroupElement::from_word(&g, &[3, 1]);
        assert_eq!(e.shortlex(&g), vec![1, 3]);
        assert_eq!(e.length(&g), 2);
        let braid = GroupElement::from_word(&g, &[3, 2, 3]);
        assert_eq!(braid.shortlex(&g), vec![2, 3, 2]);
    }

    #[test]
    fn descents_match_length_changes() {
        let g = build_graph(6).unwrap();
        let w = GroupElement::from_word(&g, &[1, 2, 3]);
        assert!(w.is_right_descent(3));
        assert!(!w.is_right_descent(1));
        assert!(w.is_left_descent(1));
        assert!(!w.is_left_descent(3));
    }
}
