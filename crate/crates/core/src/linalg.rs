//! Exact Gaussian elimination over `Q` and over the rational function field `Q(q)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{LaurentScalar, Rational};

pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(<Rational as Zero>::zero);
                    let b = o.0.get(i).cloned().unwrap_or_else(<Rational as Zero>::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![<Rational as Zero>::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        if self.0.len() <= dd {
            return (Poly::default(), self.clone());
        }
        let mut quot = vec![<Rational as Zero>::zero(); self.0.len() - dd];
        let lead_inv = d.lead().recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !Zero::is_zero(&c) {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.lead().recip();
        a.scale(&inv)
    }
}

/// Element of `Q(q)` kept in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::constant(<Rational as One>::one()) };
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let inv = d.lead().recip();
        RatFunc { num: n.scale(&inv), den: d.scale(&inv) }
    }

    pub fn from_laurent(s: &LaurentScalar) -> Self {
        let Some(lo) = s.min_exponent() else {
            return <RatFunc as Field>::zero();
        };
        let hi = s.max_exponent().unwrap();
        let mut c = vec![<Rational as Zero>::zero(); (hi - lo) as usize + 1];
        for (e, v) in s.terms() {
            c[(e - lo) as usize] = v.clone();
        }
        let num = Poly::new(c);
        if lo >= 0 {
            let mut shifted = vec![<Rational as Zero>::zero(); lo as usize];
            shifted.extend(num.0);
            RatFunc::new(Poly::new(shifted), Poly::constant(<Rational as One>::one()))
        } else {
            let mut den = vec![<Rational as Zero>::zero(); (-lo) as usize];
            den.push(<Rational as One>::one());
            RatFunc::new(num, Poly::new(den))
        }
    }
}

impl RatFunc {
    /// Back to a Laurent polynomial when the denominator is a power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentScalar> {
        let k = self.den.degree().unwrap_or(0);
        if self.den.0[..k].iter().any(|c| !Zero::is_zero(c)) {
            return None;
        }
        let terms = self.num.0.iter().enumerate().map(|(e, c)| (e as i32 - k as i32, c.clone()));
        Some(LaurentScalar::from_terms(terms))
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::default(), den: Poly::constant(<Rational as One>::one()) }
    }
    fn one() -> Self {
        RatFunc { num: Poly::constant(<Rational as One>::one()), den: Poly::constant(<Rational as One>::one()) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&RatFunc { num: o.num.neg(), den: o.den.clone() })
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one().div(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = rows[r][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Coefficients `c` with `sum_i c_i * vectors[i] = target`, if any.
pub fn solve_in_span<F: Field>(vectors: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = vectors.len();
    let dim = target.len();
    // augmented system: columns = vectors, last column = target
    let mut rows: Vec<Vec<F>> = (0..dim)
        .map(|r| {
            let mut row: Vec<F> = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    if rows.is_empty() {
        return Some(vec![F::zero(); n]);
    }
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut sol = vec![F::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = rows[r][n].clone();
    }
    Some(sol)
}
