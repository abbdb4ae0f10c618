//! Trace evaluation on `TL(E_n)`.
//!
//! Every trace is determined by its values on the elements `i(A)`, which are
//! constant on neighbour classes.  The evaluation recursion decomposes
//! `w = x i(A) y` with `#A = a(w)`, rotates the factors, and either lands on
//! `i(A)` itself or strictly increases the `a`-value, so any trace value on
//! a monomial basis element is an integer power of `delta` times a base
//! value.  The Markov trace `tr` uses base value `delta^-#A`; its value on
//! `b_w` is a pure power `delta^e` with `e <= -a(w)` and `e` of the same
//! parity as the length of `w`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{
    a_value, i_of, max_antichain_decomposition, p_classes, product, LaurentPolynomial,
    PClassPartition, ScaledMonomial,
};
use crate::coxeter::{normalize, CoxeterGraph, FcElement};
use crate::{Error, Result};

/// Base values of a trace, one per neighbour class.
#[derive(Debug, Clone)]
pub struct TraceBase {
    values: Vec<BaseValue>,
}

#[derive(Debug, Clone)]
pub enum BaseValue {
    /// `delta^k` (kept symbolic; `k` may be negative).
    DeltaPow(i64),
    /// An arbitrary exact value.
    Poly(LaurentPolynomial),
}

impl TraceBase {
    /// The base of the Markov trace: `delta^-#A` on the class of `A`.
    pub fn markov(partition: &PClassPartition) -> TraceBase {
        TraceBase {
            values: (0..partition.num_classes())
                .map(|c| BaseValue::DeltaPow(-(partition.class_size(c) as i64)))
                .collect(),
        }
    }

    /// The indicator trace of one class: 1 on its members, 0 elsewhere.
    pub fn indicator(partition: &PClassPartition, class: usize) -> TraceBase {
        TraceBase {
            values: (0..partition.num_classes())
                .map(|c| {
                    if c == class {
                        BaseValue::Poly(LaurentPolynomial::one())
                    } else {
                        BaseValue::Poly(LaurentPolynomial::zero())
                    }
                })
                .collect(),
        }
    }

    pub fn value(&self, class: usize) -> &BaseValue {
        &self.values[class]
    }
}

/// A trace value as a sum of `delta` powers with polynomial coefficients,
/// with no expansion of negative powers.  Coefficients are reduced so that
/// none is divisible by `delta`.
pub type DeltaExpansion = BTreeMap<i64, LaurentPolynomial>;

/// Shared evaluator for all traces at one rank, with a memo of the
/// recursion.
pub struct TraceEngine<'g> {
    graph: &'g CoxeterGraph,
    partition: PClassPartition,
    memo: HashMap<FcElement, (i64, usize)>,
}

impl<'g> TraceEngine<'g> {
    pub fn new(graph: &'g CoxeterGraph) -> Self {
        TraceEngine {
            graph,
            partition: p_classes(graph),
            memo: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.graph
    }

    pub fn partition(&self) -> &PClassPartition {
        &self.partition
    }

    /// Core recursion: returns `(e, class)` such that every trace takes the
    /// value `delta^e * base(class)` on `b_w`.
    pub fn eval_raw(&mut self, w: &FcElement) -> (i64, usize) {
        if let Some(&hit) = self.memo.get(w) {
            return hit;
        }
        let g = self.graph;
        let mut chain: Vec<(FcElement, i64)> = Vec::new();
        let mut acc: i64 = 0;
        let mut cur = w.clone();
        let result = loop {
            if let Some(&(e, class)) = self.memo.get(&cur) {
                break (acc + e, class);
            }
            let (x, a, y) = max_antichain_decomposition(g, &cur);
            chain.push((cur.clone(), acc));
            let mut left = a.clone();
            left.extend(y.word());
            let mut right = x.word();
            right.extend_from_slice(&a);
            let iay = normalize(g, &left).expect("decomposition tail is reduced FC");
            let xia = normalize(g, &right).expect("decomposition head is reduced FC");
            let p = product(g, &iay, &xia);
            acc += p.exp as i64 - a.len() as i64;
            let az = a_value(g, &p.elt);
            if az == a.len() {
                // The load-bearing step: the rotated product collapses to
                // i(A) whenever its a-value does not grow.
                let ia = i_of(g, &a).expect("antichain labels commute");
                assert_eq!(p.elt, ia, "rotated product must collapse to i(A)");
                let class = self
                    .partition
                    .class_of(&a)
                    .expect("antichain labels form a commuting set");
                break (acc, class);
            }
            assert!(az > a.len(), "a-value must strictly increase");
            cur = p.elt;
        };
        let (total, class) = result;
        for (elt, before) in chain {
            self.memo.insert(elt, (total - before, class));
        }
        (total, class)
    }

    /// Evaluates an arbitrary trace given its base values.
    pub fn eval_trace(&mut self, base: &TraceBase, w: &FcElement) -> DeltaExpansion {
        self.trace_linear(base, &[(LaurentPolynomial::one(), w.clone())])
    }

    /// The Markov trace exponent: `tr(b_w) = delta^e`.
    pub fn tr_exponent(&mut self, w: &FcElement) -> i64 {
        let (e, class) = self.eval_raw(w);
        e - self.partition.class_size(class) as i64
    }

    /// Value of the indicator trace of `class` on `b_w`: `Some(e)` meaning
    /// `delta^e`, or `None` meaning zero.
    pub fn indicator_exponent(&mut self, class: usize, w: &FcElement) -> Option<i64> {
        let (e, c) = self.eval_raw(w);
        (c == class).then_some(e)
    }

    /// Linear extension of trace evaluation to a combination of basis
    /// elements with polynomial coefficients.
    pub fn trace_linear(
        &mut self,
        base: &TraceBase,
        combo: &[(LaurentPolynomial, FcElement)],
    ) -> DeltaExpansion {
        let mut raw: DeltaExpansion = BTreeMap::new();
        for (coeff, w) in combo {
            if coeff.is_zero() {
                continue;
            }
            let (e, class) = self.eval_raw(w);
            let (slot, value) = match base.value(class) {
                BaseValue::DeltaPow(d) => (e + d, coeff.clone()),
                BaseValue::Poly(p) => (e, coeff * p),
            };
            if value.is_zero() {
                continue;
            }
            let entry = raw.entry(slot).or_default();
            *entry = &*entry + &value;
        }
        // Pull delta factors out of the coefficients and merge.
        let mut out: DeltaExpansion = BTreeMap::new();
        for (slot, value) in raw {
            if value.is_zero() {
                continue;
            }
            let (k, rest) = value.factor_delta();
            let entry = out.entry(slot + k as i64).or_default();
            *entry = &*entry + &rest;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The leading coefficient `mu~(x, y)`: the coefficient of `v^-1` in
    /// `tr(b_x b_{y^-1})` expanded as a power series in descending powers
    /// of `v`.
    pub fn mu_tilde(&mut self, x: &FcElement, y: &FcElement) -> Result<u8> {
        let p = product(self.graph, x, &y.inverse(self.graph));
        let e = p.exp as i64 + self.tr_exponent(&p.elt);
        coeff_v_minus1(e)
    }

    /// Total `delta` exponent of `tr` on a scaled monomial.
    pub fn tr_exponent_scaled(&mut self, m: &ScaledMonomial) -> i64 {
        m.exp as i64 + self.tr_exponent(&m.elt)
    }
}

/// Coefficient of `v^-1` in the power-series expansion of `delta^e` in
/// descending powers of `v`.  For `e <= 0` the expansion is
/// `v^e (1 + v^-2)^e`, whose exponents all have the parity of `e` and lie
/// at or below `e`; so the coefficient is 1 exactly when `e = -1`.
/// Positive `e` cannot arise from a trace of a monomial product and is
/// rejected.
pub fn coeff_v_minus1(e: i64) -> Result<u8> {
    if e > 0 {
        return Err(Error::PositiveTraceExponent(e));
    }
    Ok(u8::from(e == -1))
}

/// Both sides of the Markov step `tr_{n+1}(h b_n) = delta^-1 tr_n(h)`, as
/// `delta` exponents, for `h` a scaled monomial of the rank-`n` algebra
/// embedded in rank `n + 1`.
pub fn markov_step(
    lower: &mut TraceEngine,
    upper: &mut TraceEngine,
    h: &ScaledMonomial,
) -> Result<(i64, i64)> {
    let n = lower.graph.rank();
    if upper.graph.rank() != n + 1 {
        return Err(Error::RankMismatch(n + 1, upper.graph.rank()));
    }
    let embedded = normalize(upper.graph, &h.elt.word())
        .expect("rank n word embeds in rank n+1 unchanged");
    let gen_n = normalize(upper.graph, &[n]).expect("single letter");
    let p = product(upper.graph, &embedded, &gen_n);
    let lhs = h.exp as i64 + p.exp as i64 + upper.tr_exponent(&p.elt);
    let rhs = h.exp as i64 - 1 + lower.tr_exponent(&h.elt);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_graph;

    fn fc(g: &CoxeterGraph, w: &[usize]) -> FcElement {
        normalize(g, w).unwrap()
    }

    #[test]
    fn markov_trace_basics() {
        let g = build_graph(6).unwrap();
        let mut eng = TraceEngine::new(&g);
        assert_eq!(eng.tr_exponent(&FcElement::identity()), 0);
        assert_eq!(eng.tr_exponent(&fc(&g, &[2])), -1);
        assert_eq!(eng.tr_exponent(&fc(&g, &[1, 3])), -2);
        assert_eq!(eng.tr_exponent(&fc(&g, &[2, 3])), -2);
    }

    #[test]
    fn trace_of_i_a_is_delta_to_minus_size() {
        let g = build_graph(7).unwrap();
        let mut eng = TraceEngine::new(&g);
        let ia = i_of(&g, &[0, 2, 4, 6]).unwrap();
        assert_eq!(eng.tr_exponent(&ia), -4);
    }

    #[test]
    fn coeff_extraction() {
        assert_eq!(coeff_v_minus1(-1), Ok(1));
        assert_eq!(coeff_v_minus1(0), Ok(0));
        assert_eq!(coeff_v_minus1(-2), Ok(0));
        assert_eq!(coeff_v_minus1(2), Err(Error::PositiveTraceExponent(2)));
    }

    #[test]
    fn mu_tilde_examples() {
        let g = build_graph(6).unwrap();
        let mut eng = TraceEngine::new(&g);
        let s = fc(&g, &[4]);
        assert_eq!(eng.mu_tilde(&FcElement::identity(), &s), Ok(1));
        assert_eq!(eng.mu_tilde(&s, &s), Ok(0));
        assert_eq!(eng.mu_tilde(&fc(&g, &[1]), &fc(&g, &[3])), Ok(0));
    }

    #[test]
    fn trace_linear_merges_delta_factors() {
        let g = build_graph(6).unwrap();
        let mut eng = TraceEngine::new(&g);
        let base = TraceBase::markov(eng.partition());
        let one = LaurentPolynomial::one();

        let v = eng.trace_linear(&base, &[(one.clone(), FcElement::identity())]);
        assert_eq!(v, BTreeMap::from([(0, LaurentPolynomial::one())]));

        // delta * tr(b_s) = delta^0
        let v = eng.trace_linear(&base, &[(LaurentPolynomial::delta(), fc(&g, &[1]))]);
        assert_eq!(v, BTreeMap::from([(0, LaurentPolynomial::one())]));

        // tr(b_s) - tr(b_t) = 0
        let v = eng.trace_linear(
            &base,
            &[
                (one.clone(), fc(&g, &[1])),
                (&LaurentPolynomial::zero() - &one, fc(&g, &[4])),
            ],
        );
        assert!(v.is_empty());
    }

    #[test]
    fn markov_step_base_cases() {
        let g6 = build_graph(6).unwrap();
        let g7 = build_graph(7).unwrap();
        let mut e6 = TraceEngine::new(&g6);
        let mut e7 = TraceEngine::new(&g7);
        // h = 1: tr(b_6) = delta^-1.
        let (lhs, rhs) = markov_step(&mut e6, &mut e7, &ScaledMonomial::one()).unwrap();
        assert_eq!(lhs, -1);
        assert_eq!(lhs, rhs);
        // h = b_5: tr(b_5 b_6) = delta^-2.
        let h = ScaledMonomial::of(fc(&g6, &[5]));
        let (lhs, rhs) = markov_step(&mut e6, &mut e7, &h).unwrap();
        assert_eq!(lhs, -2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn indicator_traces_are_dual_to_p_prime() {
        let g = build_graph(6).unwrap();
        let mut eng = TraceEngine::new(&g);
        let classes = eng.partition().num_classes();
        let reps = crate::algebra::p_prime(&g);
        assert_eq!(reps.len(), classes);
        for b in &reps {
            let ib = i_of(&g, b).unwrap();
            let cb = eng.partition().class_of(b).unwrap();
            for c in 0..classes {
                let got = eng.indicator_exponent(c, &ib);
                if c == cb {
                    assert_eq!(got, Some(0));
                } else {
                    assert_eq!(got, None);
                }
            }
        }
    }
}
