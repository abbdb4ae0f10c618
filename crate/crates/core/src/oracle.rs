//! Brute-force Kazhdan–Lusztig polynomials over Bruhat intervals.
//!
//! Elements of the full group `W(E_n)` (not just the fully commutative
//! ones) are interned through the reflection representation under ShortLex
//! normal forms.  Lower Bruhat intervals are generated by subword closure
//! of a fixed reduced word, and the polynomials follow the classical
//! right-descent recursion with global memoisation.  The module exists
//! solely to cross-validate the non-recursive leading-coefficient route,
//! so desk-scale resource limits apply.

use std::collections::HashMap;
use std::fmt;

use crate::coxeter::{CoxeterGraph, GroupElement};
use crate::{Error, Result};

/// A polynomial in `q` with integer coefficients (dense, low degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlPolynomial {
    coeffs: Vec<i64>,
}

impl KlPolynomial {
    pub fn zero() -> Self {
        KlPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        KlPolynomial { coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + other.coeff(i);
        }
        KlPolynomial { coeffs }.trim()
    }

    fn sub(&self, other: &Self) -> Self {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) - other.coeff(i);
        }
        KlPolynomial { coeffs }.trim()
    }

    /// `q^k * self`.
    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        KlPolynomial { coeffs }
    }

    /// `c * q^k * self`.
    fn shift_scaled(&self, k: usize, c: i64) -> Self {
        let mut out = self.shift(k);
        for x in &mut out.coeffs {
            *x *= c;
        }
        out.trim()
    }
}

impl fmt::Display for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c == 1 => write!(f, "q^{k}")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Resource limits; the defaults finish the verification suites in minutes.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    pub max_length: usize,
    pub max_interval: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_length: 12,
            max_interval: 250_000,
        }
    }
}

type EltId = u32;

/// Interned-element oracle with global memo tables.
pub struct KlOracle<'g> {
    graph: &'g CoxeterGraph,
    limits: OracleLimits,
    elements: Vec<GroupElement>,
    ids: HashMap<Vec<i64>, EltId>,
    words: Vec<Vec<usize>>,
    right_mul: HashMap<(EltId, usize), EltId>,
    intervals: HashMap<EltId, Vec<EltId>>,
    kl_memo: HashMap<(EltId, EltId), KlPolynomial>,
}

impl<'g> KlOracle<'g> {
    pub fn new(graph: &'g CoxeterGraph, limits: OracleLimits) -> Self {
        let mut oracle = KlOracle {
            graph,
            limits,
            elements: Vec::new(),
            ids: HashMap::new(),
            words: Vec::new(),
            right_mul: HashMap::new(),
            intervals: HashMap::new(),
            kl_memo: HashMap::new(),
        };
        oracle.intern(GroupElement::identity(graph));
        oracle
    }

    fn intern(&mut self, e: GroupElement) -> EltId {
        if let Some(&id) = self.ids.get(e.key()) {
            return id;
        }
        let id = self.elements.len() as EltId;
        self.ids.insert(e.key().to_vec(), id);
        self.words.push(e.shortlex(self.graph));
        self.elements.push(e);
        id
    }

    fn intern_word(&mut self, word: &[usize]) -> EltId {
        self.intern(GroupElement::from_word(self.graph, word))
    }

    fn len(&self, e: EltId) -> usize {
        self.words[e as usize].len()
    }

    fn mul_gen(&mut self, e: EltId, s: usize) -> EltId {
        if let Some(&r) = self.right_mul.get(&(e, s)) {
            return r;
        }
        let next = self.elements[e as usize].mul_gen_right(self.graph, s);
        let r = self.intern(next);
        self.right_mul.insert((e, s), r);
        self.right_mul.insert((r, s), e);
        r
    }

    fn is_right_descent(&self, e: EltId, s: usize) -> bool {
        self.elements[e as usize].is_right_descent(s)
    }

    /// The lower interval `{z : z <= w}` by subword closure of the ShortLex
    /// word of `w`, sorted by length.
    fn interval(&mut self, w: EltId) -> Result<Vec<EltId>> {
        if let Some(hit) = self.intervals.get(&w) {
            return Ok(hit.clone());
        }
        let word = self.words[w as usize].clone();
        let mut set: Vec<EltId> = vec![0];
        let mut seen: std::collections::HashSet<EltId> = set.iter().copied().collect();
        for &s in &word {
            for z in set.clone() {
                let zs = self.mul_gen(z, s);
                if self.len(zs) > self.len(z) && seen.insert(zs) {
                    set.push(zs);
                }
            }
            if set.len() > self.limits.max_interval {
                return Err(Error::ResourceLimit {
                    what: "Bruhat interval size",
                    limit: self.limits.max_interval,
                    needed: set.len(),
                });
            }
        }
        set.sort_by_key(|&z| (self.len(z), z));
        self.intervals.insert(w, set.clone());
        Ok(set)
    }

    fn bruhat_leq_ids(&mut self, x: EltId, w: EltId) -> Result<bool> {
        Ok(self.interval(w)?.contains(&x))
    }

    /// `P_{x,w}` by the classical recursion on a right descent of `w`.
    fn kl_ids(&mut self, x: EltId, w: EltId) -> Result<KlPolynomial> {
        if x == w {
            return Ok(KlPolynomial::one());
        }
        if self.len(x) >= self.len(w) || !self.bruhat_leq_ids(x, w)? {
            return Ok(KlPolynomial::zero());
        }
        if let Some(hit) = self.kl_memo.get(&(x, w)) {
            return Ok(hit.clone());
        }
        let s = (0..self.graph.rank())
            .find(|&s| self.is_right_descent(w, s))
            .expect("non-identity element has a right descent");
        let v = self.mul_gen(w, s); // len(v) = len(w) - 1
        let xs = self.mul_gen(x, s);
        let c = usize::from(self.len(xs) < self.len(x));
        // q^(1-c) P_{xs,v} + q^c P_{x,v}
        let a = self.kl_ids(xs, v)?.shift(1 - c);
        let b = self.kl_ids(x, v)?.shift(c);
        let mut acc = a.add(&b);
        // minus the correction sum over x <= z <= v with zs < z.
        for z in self.interval(v)? {
            if !self.is_right_descent(z, s) {
                continue;
            }
            let gap = self.len(w) - self.len(z);
            if gap % 2 != 0 {
                continue;
            }
            let mu = self.mu_of_poly(z, v)?;
            if mu == 0 {
                continue;
            }
            let pxz = self.kl_ids(x, z)?;
            if pxz.is_zero() {
                continue;
            }
            acc = acc.sub(&pxz.shift_scaled(gap / 2, mu));
        }
        let acc = acc.trim();
        // Tripwires for the recursion.
        debug_assert!(acc.coeff(0) == 1, "constant term of P_x,w is 1");
        debug_assert!(
            acc.degree().unwrap_or(0) * 2 + 1 <= self.len(w) - self.len(x),
            "degree bound violated"
        );
        self.kl_memo.insert((x, w), acc.clone());
        Ok(acc)
    }

    /// Leading coefficient `mu(z, v)` for `z < v`.
    fn mu_of_poly(&mut self, z: EltId, v: EltId) -> Result<i64> {
        let gap = self.len(v) - self.len(z);
        if gap % 2 == 0 {
            return Ok(0);
        }
        let p = self.kl_ids(z, v)?;
        Ok(p.coeff((gap - 1) / 2))
    }

    fn check_limits(&self, w_len: usize) -> Result<()> {
        if w_len > self.limits.max_length {
            return Err(Error::ResourceLimit {
                what: "oracle word length",
                limit: self.limits.max_length,
                needed: w_len,
            });
        }
        Ok(())
    }

    /// `P_{x,w}` for reduced words `x`, `w`; zero when `x` is not below
    /// `w` in Bruhat order.
    pub fn kl_poly(&mut self, x_word: &[usize], w_word: &[usize]) -> Result<KlPolynomial> {
        self.graph.check_word(x_word)?;
        self.graph.check_word(w_word)?;
        let x = self.intern_word(x_word);
        let w = self.intern_word(w_word);
        self.check_limits(self.len(w))?;
        self.kl_ids(x, w)
    }

    /// The coefficient of `q^((len(w) - len(x) - 1) / 2)` in `P_{x,w}`,
    /// zero when the exponent is not a nonnegative integer.
    pub fn mu(&mut self, x_word: &[usize], w_word: &[usize]) -> Result<i64> {
        self.graph.check_word(x_word)?;
        self.graph.check_word(w_word)?;
        let x = self.intern_word(x_word);
        let w = self.intern_word(w_word);
        self.check_limits(self.len(w))?;
        if self.len(x) >= self.len(w) || !self.bruhat_leq_ids(x, w)? {
            return Ok(0);
        }
        self.mu_of_poly(x, w)
    }

    /// Number of interned elements, exposed for diagnostics.
    pub fn interned(&self) -> usize {
        self.elements.len()
    }
}
