//! Commutative Laurent polynomials over `Q` in a fixed number of variables.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::coeff::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rational::one())
    }

    /// `x_i^e`.
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        let mut p = MPoly::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MPoly::var_pow(nvars, i, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MPoly {
        (0..n).fold(MPoly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut d = e.clone();
                d[i] -= 1;
                out.add_term(d, c * Rational::from_integer(e[i].into()));
            }
        }
        out
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Substitutes `x_i -> images[i]`; exponents must be nonnegative.
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map_or(0, MPoly::nvars);
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                assert!(k >= 0, "compose needs polynomial input");
                t = t.mul(&images[i].pow(k as u32));
            }
            out = out.add(&t);
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MPolyDisplay<'a> {
        MPolyDisplay { p: self, names }
    }
}

pub struct MPolyDisplay<'a> {
    p: &'a MPoly,
    names: &'a [String],
}

impl fmt::Display for MPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.p.terms.iter().collect();
        // higher total degree first, then larger exponents first
        terms.sort_by(|(a, _), (b, _)| {
            let da: i32 = a.iter().sum();
            let db: i32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{x}", self.names[i])),
                }
            }
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn names() -> Vec<String> {
        ["x", "y"].map(String::from).to_vec()
    }

    #[test]
    fn arithmetic_and_printing() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = x.mul(&y).sub(&y.scale(&rat(2))).add(&MPoly::constant(2, rat(3)));
        assert_eq!(p.display(&names()).to_string(), "x*y - 2*y + 3");
        assert_eq!(x.pow(2).display(&names()).to_string(), "x^2");
        assert_eq!(p.derivative(1), x.sub(&MPoly::constant(2, rat(2))));
        let inv = MPoly::var_pow(2, 0, -1);
        assert_eq!(inv.mul(&x), MPoly::one(2));
        assert_eq!(inv.derivative(0), MPoly::var_pow(2, 0, -2).neg());
    }

    #[test]
    fn composition() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = x.mul(&y);
        let q = p.compose(&[x.add(&y), x.sub(&y)]);
        assert_eq!(q, x.pow(2).sub(&y.pow(2)));
    }
}
