//! Sparse integer Laurent polynomials in `v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An integer-coefficient Laurent polynomial in `v`, finitely supported.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPolynomial { coeffs }
    }

    /// `delta = v + v^-1`, the loop scalar.
    pub fn delta() -> Self {
        let mut p = Self::monomial(1, 1);
        p.add_term(-1, 1);
        p
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(1, 2)
    }

    /// `delta^k` for `k >= 0`, expanded.
    pub fn delta_pow(k: u32) -> Self {
        let mut p = Self::one();
        for _ in 0..k {
            p = &p * &Self::delta();
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Largest exponent with nonzero coefficient, if any.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    fn add_term(&mut self, e: i64, c: i64) {
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    /// Writes `self` as `delta^k * rest` with `rest` not divisible by
    /// `delta`; returns `(k, rest)`.  The zero polynomial returns `(0, 0)`.
    pub fn factor_delta(&self) -> (u32, LaurentPolynomial) {
        let mut k = 0;
        let mut rest = self.clone();
        while !rest.is_zero() {
            match rest.div_delta_exact() {
                Some(q) => {
                    rest = q;
                    k += 1;
                }
                None => break,
            }
        }
        (k, rest)
    }

    /// Exact division by `delta`, if the remainder vanishes.
    fn div_delta_exact(&self) -> Option<LaurentPolynomial> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Divide v*self by v^2 + 1 as an ordinary polynomial in v.
        let shift = self.min_exp().unwrap() - 1;
        let deg = (self.degree().unwrap() - shift) as usize;
        let mut dense = vec![0i64; deg + 1];
        for (e, c) in self.terms() {
            dense[(e - shift) as usize] = c;
        }
        let mut quot = vec![0i64; dense.len()];
        for i in (2..dense.len()).rev() {
            let c = dense[i];
            quot[i - 2] = c;
            dense[i] -= c;
            dense[i - 2] -= c;
        }
        if dense.iter().any(|&c| c != 0) {
            return None;
        }
        let mut out = Self::zero();
        for (i, &c) in quot.iter().enumerate() {
            if c != 0 {
                // quot is the quotient of v*self by v^2+1, in v^(shift+1) units
                // shifted down by one factor of v.
                out.add_term(i as i64 + shift + 1, c);
            }
        }
        Some(out)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        &LaurentPolynomial::zero() - self
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.coeffs.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
