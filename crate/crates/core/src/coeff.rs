//! Exact arithmetic in the Laurent ring `Q[q, q^-1]`.
//!
//! Besides the ring operations this module provides the `(q-1)`-adic
//! valuation, exact division by powers of `q-1`, specialization at `q = 1`
//! and reduction modulo `(q-1)^M`, which is how truncated presentations keep
//! their coefficients canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("{value} is not divisible by (q-1)^{power}")]
    NotDivisible { value: String, power: u32 },
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// `(q-1)`-adic valuation. Zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, n: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= n,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Laurent polynomial in `q` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, Rational>,
}

fn shift(e: i32, by: i32) -> i32 {
    e.checked_add(by).expect("exponent of q overflowed i32")
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::q() - Self::one()
    }

    /// `(q - 1)^n`.
    pub fn q_minus_one_pow(n: u32) -> Self {
        let base = Self::q_minus_one();
        (0..n).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (e, c) in it {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `(c, e)` when the scalar is the unit `c * q^e` of the ring.
    pub fn as_unit(&self) -> Option<(Rational, i32)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    /// Inverse in `Q[q, q^-1]`; only monomials are invertible.
    pub fn inverse(&self) -> Option<Self> {
        let (c, e) = self.as_unit()?;
        Some(Self::monomial(c.recip(), -e))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn shift_q(&self, by: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (shift(*e, by), v.clone())).collect(),
        }
    }

    /// Substitutes `q := 1`.
    pub fn evaluate_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Substitutes a rational value for `q` (nonzero when negative exponents occur).
    pub fn evaluate(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(at.clone(), *e as usize)
            } else {
                num_traits::pow(at.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Exact quotient by `q - 1`, or `None` when `q - 1` does not divide.
    fn divide_once(&self) -> Option<Self> {
        let lo = self.min_exponent()?;
        let hi = self.max_exponent().unwrap();
        // p(q) = q^-lo * self, a polynomial; synthetic division by (q - 1)
        let deg = (hi - lo) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for k in (1..=deg).rev() {
            carry += &coeffs[k];
            quotient[k - 1] = carry.clone();
        }
        carry += &coeffs[0];
        if !carry.is_zero() {
            return None;
        }
        Some(Self::from_terms(
            quotient.into_iter().enumerate().map(|(k, c)| (shift(lo, k as i32), c)),
        ))
    }

    /// Largest `n` with `(q-1)^n` dividing `self`.
    pub fn q1_valuation(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.divide_once() {
            cur = next;
            v += 1;
        }
        Valuation::Finite(v)
    }

    /// Returns `g` with `(q-1)^n * g = self`.
    pub fn divide_by_q1(&self, n: u32) -> Result<Self, CoeffError> {
        let mut cur = self.clone();
        for _ in 0..n {
            if cur.is_zero() {
                return Ok(cur);
            }
            cur = cur.divide_once().ok_or_else(|| CoeffError::NotDivisible {
                value: self.to_string(),
                power: n,
            })?;
        }
        Ok(cur)
    }

    /// Taylor coefficients at `q = 1`: `self = sum_i c_i (q-1)^i`, truncated to `order` terms.
    pub fn taylor_at_one(&self, order: u32) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); order as usize];
        for (e, c) in &self.terms {
            // (1 + t)^e = sum_i binom(e, i) t^i, valid for negative e as a power series
            let e = BigInt::from(*e);
            let mut binom = BigInt::one();
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += c * Rational::from_integer(binom.clone());
                binom = binom * (&e - BigInt::from(i)) / BigInt::from(i + 1);
            }
        }
        out
    }

    /// Canonical representative modulo `(q-1)^order`: the polynomial of degree
    /// `< order` in `q` congruent to `self`.
    pub fn mod_q1_power(&self, order: u32) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Self::zero();
        };
        if lo >= 0 && hi < order as i32 {
            return self.clone();
        }
        if lo < 0 || order == 0 {
            return Self::from_taylor(&self.taylor_at_one(order));
        }
        // remainder of a polynomial by the monic (q-1)^order
        let m = order as usize;
        let mut p = vec![Rational::zero(); hi as usize + 1];
        for (e, c) in &self.terms {
            p[*e as usize] = c.clone();
        }
        let modulus: Vec<BigInt> = (0..m)
            .map(|i| {
                let b = binomial(m, i);
                if (m - i) % 2 == 0 { b } else { -b }
            })
            .collect();
        for k in (m..p.len()).rev() {
            let c = std::mem::take(&mut p[k]);
            if c.is_zero() {
                continue;
            }
            for (i, b) in modulus.iter().enumerate() {
                p[k - m + i] -= &c * Rational::from_integer(b.clone());
            }
        }
        p.truncate(m);
        Self::from_terms(p.into_iter().enumerate().map(|(k, c)| (k as i32, c)))
    }

    /// `sum_i c_i (q-1)^i` expanded in powers of `q`.
    fn from_taylor(taylor: &[Rational]) -> Self {
        let n = taylor.len();
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in taylor.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (q-1)^i = sum_k binom(i,k) (-1)^(i-k) q^k
            let mut binom = BigInt::one();
            for (k, slot) in coeffs.iter_mut().enumerate().take(i + 1) {
                let term = c * Rational::from_integer(binom.clone());
                if (i - k) % 2 == 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
                binom = binom * (i - k) / (k + 1);
            }
        }
        Self::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as i32, c)))
    }

    /// Inverse modulo `(q-1)^order`; exists iff the value at `q = 1` is nonzero.
    pub fn inverse_mod_q1(&self, order: u32) -> Option<Self> {
        let taylor = self.taylor_at_one(order);
        let a0 = taylor.first()?.clone();
        if a0.is_zero() {
            return None;
        }
        // power-series inversion in t = q - 1
        let n = order as usize;
        let mut inv = vec![Rational::zero(); n];
        inv[0] = a0.recip();
        for k in 1..n {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &taylor[j] * &inv[k - j];
            }
            inv[k] = -s * &inv[0];
        }
        Some(Self::from_taylor(&inv))
    }
}

impl From<i64> for LaurentScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -(self.clone())
    }
}

impl Mul<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(shift(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_q_power(e: i32) -> String {
    if e == 1 {
        "q".to_string()
    } else {
        format!("q^{e}")
    }
}

impl fmt::Display for LaurentScalar {
    /// Exponents ascending, e.g. `2*q^-1 - 1 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{}", fmt_rational(&abs))?,
                (e, true) => write!(f, "{}", fmt_q_power(e))?,
                (e, false) => write!(f, "{}*{}", fmt_rational(&abs), fmt_q_power(e))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

impl std::str::FromStr for LaurentScalar {
    type Err = CoeffError;

    /// Accepts sums of products of rational literals and powers of `q`,
    /// e.g. `-1 + 2*q^-1 + q^2` or `3/2*q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CoeffError::Parse(s.to_string());
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(err());
        }
        let bytes = src.as_bytes();
        let mut total = LaurentScalar::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            // one product term, up to the next top-level + or - that is not an exponent sign
            let start = i;
            while i < bytes.len() {
                let c = bytes[i];
                if (c == b'+' || c == b'-') && i > start && bytes[i - 1] != b'^' {
                    break;
                }
                i += 1;
            }
            let term = &src[start..i];
            if term.is_empty() {
                return Err(err());
            }
            let mut value = LaurentScalar::integer(sign);
            for factor in term.split('*') {
                let f = parse_scalar_factor(factor).ok_or_else(err)?;
                value = &value * &f;
            }
            total += value;
        }
        Ok(total)
    }
}

fn parse_scalar_factor(tok: &str) -> Option<LaurentScalar> {
    if let Some(rest) = tok.strip_prefix('q') {
        if rest.is_empty() {
            return Some(LaurentScalar::q());
        }
        let e: i32 = rest.strip_prefix('^')?.parse().ok()?;
        return Some(LaurentScalar::q_pow(e));
    }
    parse_rational(tok).map(LaurentScalar::constant)
}

pub(crate) fn parse_rational(tok: &str) -> Option<Rational> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> LaurentScalar {
        text.parse().unwrap()
    }

    #[test]
    fn arith_examples() {
        assert_eq!(&s("q") * &s("q^-1"), LaurentScalar::one());
        assert_eq!(&s("q - 1") * &s("q + 1"), s("q^2 - 1"));
        assert_eq!(&s("3*q^2 - q") + &LaurentScalar::zero(), s("3*q^2 - q"));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(s("q - 1").q1_valuation(), Valuation::Finite(1));
        let f = &s("q^-1") * &s("q^2 - 2*q + 1");
        assert_eq!(f.q1_valuation(), Valuation::Finite(2));
        assert_eq!(s("5").q1_valuation(), Valuation::Finite(0));
        assert_eq!(LaurentScalar::zero().q1_valuation(), Valuation::Infinite);
    }

    #[test]
    fn divide_examples() {
        assert_eq!(s("q^2 - 1").divide_by_q1(1).unwrap(), s("q + 1"));
        let f = s("q^3 + 2");
        assert_eq!(f.divide_by_q1(0).unwrap(), f);
        assert!(matches!(s("q").divide_by_q1(1), Err(CoeffError::NotDivisible { .. })));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(s("q^-3").evaluate_at_one(), rat(1));
        assert_eq!(s("q^2 + q - 1").evaluate_at_one(), rat(1));
        assert_eq!(LaurentScalar::zero().evaluate_at_one(), rat(0));
    }

    #[test]
    fn printing_is_ascending() {
        assert_eq!(s("-1 + 2*q^-1 + q^2").to_string(), "2*q^-1 - 1 + q^2");
        assert_eq!(s("3/2*q").to_string(), "3/2*q");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
        let f = s("-q^-2 + 7/3 - q");
        assert_eq!(f.to_string().parse::<LaurentScalar>().unwrap(), f);
    }

    #[test]
    fn truncation_and_inverse() {
        let m = 5;
        let f = s("q^-1");
        let r = f.mod_q1_power(m);
        assert!((&f - &r).q1_valuation().at_least(m));
        assert!(r.min_exponent().unwrap() >= 0 && r.max_exponent().unwrap() < m as i32);
        let u = s("2 + q - q^3");
        let inv = u.inverse_mod_q1(m).unwrap();
        assert!((&(&u * &inv) - &LaurentScalar::one()).q1_valuation().at_least(m));
        assert!(s("q - 1").inverse_mod_q1(m).is_none());
    }

    #[test]
    fn q_minus_q_inv_factorization() {
        let f = LaurentScalar::q_minus_q_inv();
        assert_eq!(f.divide_by_q1(1).unwrap(), s("1 + q^-1"));
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
