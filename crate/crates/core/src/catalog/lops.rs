//! Dual-side presentation: upper `L+` and lower `L-` matrices subject to RLL
//! relations for the standard `gl_n` R-matrix, `l+_ii l-_ii = 1`.

use super::{mono, one, word, CatalogError, COMPLETION_DEGREE};
use crate::coeff::LaurentScalar;
use crate::hopf::{HopfPresentation, Role, TensorElement};
use crate::ncalg::{GeneratorSet, NCElement, RewriteSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Generator layout for `n x n` L-operators.
#[derive(Debug, Clone)]
pub struct LopLayout {
    n: usize,
    names: Vec<String>,
    index: Vec<Vec<[Option<usize>; 2]>>,
}

impl LopLayout {
    pub fn new(n: usize) -> Self {
        // off-diagonal entries lead; this order orients every RLL relation with a unit coefficient
        let slots = match n {
            2 => vec![(Sign::Plus, 1, 2), (Sign::Minus, 2, 1)],
            _ => vec![
                (Sign::Plus, 1, 3),
                (Sign::Plus, 1, 2),
                (Sign::Plus, 2, 3),
                (Sign::Minus, 3, 2),
                (Sign::Minus, 2, 1),
                (Sign::Minus, 3, 1),
            ],
        };
        Self::from_slots(n, slots)
    }

    fn from_slots(n: usize, mut slots: Vec<(Sign, usize, usize)>) -> Self {
        let mut names = Vec::new();
        let mut index = vec![vec![[None; 2]; n + 1]; n + 1];
        for s in [Sign::Plus, Sign::Minus] {
            slots.extend((1..=n).map(|i| (s, i, i)));
        }
        for (s, i, j) in slots {
            let tag = match s {
                Sign::Plus => "lp",
                Sign::Minus => "lm",
            };
            index[i][j][s as usize] = Some(names.len());
            names.push(format!("{tag}{i}{j}"));
        }
        LopLayout { n, names, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Generator index of `l^s_ij`, `None` where the triangular shape forces zero.
    pub fn entry(&self, s: Sign, i: usize, j: usize) -> Option<usize> {
        self.index[i][j][s as usize]
    }

    fn element(&self, s: Sign, i: usize, j: usize) -> NCElement {
        self.entry(s, i, j).map_or_else(NCElement::zero, NCElement::generator)
    }
}

/// `R = q sum E_ii(x)E_ii + sum_{i != j} E_ii(x)E_jj + (q - q^-1) sum_{i > j} E_ij(x)E_ji`,
/// indexed as `R[(i, k), (m, p)]`.
pub fn r_entry(i: usize, k: usize, m: usize, p: usize) -> LaurentScalar {
    let mut c = LaurentScalar::zero();
    if i == k && k == m && m == p {
        c = LaurentScalar::q();
    } else if i != k && m == i && p == k {
        c = LaurentScalar::one();
    }
    if i > k && m == k && p == i {
        c = c + LaurentScalar::q_minus_q_inv();
    }
    c
}

/// Entries of `R L1^a L2^b - L2^b L1^a R`.
fn rll(layout: &LopLayout, a: Sign, b: Sign) -> Vec<NCElement> {
    let n = layout.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let mut rel = NCElement::zero();
                    for m in 1..=n {
                        for p in 1..=n {
                            let left = r_entry(i, k, m, p);
                            if !left.is_zero() {
                                let w = layout.element(a, m, j).mul_free(&layout.element(b, p, l));
                                rel = rel.add(&w.scale(&left));
                            }
                            let right = r_entry(m, p, j, l);
                            if !right.is_zero() {
                                let w = layout.element(b, k, p).mul_free(&layout.element(a, i, m));
                                rel = rel.sub(&w.scale(&right));
                            }
                        }
                    }
                    if !rel.is_zero() {
                        out.push(rel);
                    }
                }
            }
        }
    }
    out
}

/// Defining relations: the three RLL families and the diagonal inverses.
pub fn lop_relations(layout: &LopLayout) -> Vec<NCElement> {
    let mut rels = Vec::new();
    for (a, b) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
        rels.extend(rll(layout, a, b));
    }
    for i in 1..=layout.n {
        let (p, m) = (layout.entry(Sign::Plus, i, i).unwrap(), layout.entry(Sign::Minus, i, i).unwrap());
        rels.push(mono(&[p, m], one()).sub(&NCElement::one()));
        rels.push(mono(&[m, p], one()).sub(&NCElement::one()));
    }
    rels
}

/// Antipode `S(L) = L^-1`, solved row by row for a triangular matrix.
fn antipode(layout: &LopLayout, s: Sign, i: usize, j: usize) -> NCElement {
    let other = match s {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
    };
    if i == j {
        return layout.element(other, i, i);
    }
    let inv_jj = layout.element(other, j, j);
    let ks: Vec<usize> = match s {
        Sign::Plus => (i..j).collect(),
        Sign::Minus => (j + 1..=i).collect(),
    };
    let mut acc = NCElement::zero();
    for k in ks {
        let term = antipode(layout, s, i, k).mul_free(&layout.element(s, k, j)).mul_free(&inv_jj);
        acc = acc.sub(&term);
    }
    acc
}

/// Hopf presentation of the L-operator algebra for `gl_n`, `n` in `2..=3`.
pub fn l_operators(n: usize) -> Result<HopfPresentation, CatalogError> {
    if !(2..=3).contains(&n) {
        return Err(CatalogError::UnsupportedN(n));
    }
    let layout = LopLayout::new(n);
    let gens = GeneratorSet::new(layout.names().to_vec())?;
    let mut sys = RewriteSystem::free(gens);
    let defining = lop_relations(&layout);
    for r in &defining {
        sys.add_relation(r)?;
    }
    sys.interreduce()?;
    sys.complete(COMPLETION_DEGREE, COMPLETION_DEGREE)?;
    let k = layout.names().len();
    let mut counit = vec![LaurentScalar::zero(); k];
    let mut coproduct = vec![TensorElement::zero(2); k];
    let mut anti = vec![NCElement::zero(); k];
    for s in [Sign::Plus, Sign::Minus] {
        for i in 1..=n {
            for j in 1..=n {
                let Some(g) = layout.entry(s, i, j) else { continue };
                if i == j {
                    counit[g] = one();
                }
                for m in 1..=n {
                    if let (Some(x), Some(y)) = (layout.entry(s, i, m), layout.entry(s, m, j)) {
                        coproduct[g].add_term(vec![word(&[x]), word(&[y])], one());
                    }
                }
                anti[g] = antipode(&layout, s, i, j);
            }
        }
    }
    let p = HopfPresentation::new(format!("lop_gl{n}"), sys, counit, coproduct, anti)?;
    Ok(p.with_role(Role::FunctionAlgebra).with_dimension(n * n).with_defining_relations(defining))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_r_matrix() {
        let l = LopLayout::new(3);
        assert_eq!(l.names().len(), 12);
        assert_eq!(l.entry(Sign::Plus, 2, 1), None);
        assert_eq!(l.names()[l.entry(Sign::Minus, 3, 1).unwrap()], "lm31");
        assert_eq!(r_entry(1, 1, 1, 1), LaurentScalar::q());
        assert_eq!(r_entry(1, 2, 1, 2), LaurentScalar::one());
        assert_eq!(r_entry(2, 1, 1, 2), LaurentScalar::q_minus_q_inv());
        assert!(r_entry(1, 2, 2, 1).is_zero());
    }

    #[test]
    fn gl2_is_hopf() {
        let p = l_operators(2).unwrap();
        assert!(p.relations().check_confluence(6).is_empty());
        let rep = p.check_hopf_axioms(3);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn gl3_is_hopf() {
        let p = l_operators(3).unwrap();
        assert!(p.relations().check_confluence(6).is_empty());
        let rep = p.check_hopf_axioms(2);
        assert!(rep.passed(), "{rep}");
    }
}
