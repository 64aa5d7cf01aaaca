//! Stokes coordinates `S = L+ (L-)^T` on the dual group.
//!
//! Two independent routes to the bracket on `s_ij`:
//! * classical: push the r-matrix Poisson bivector on pairs of triangular
//!   matrices forward along `(b+, b-) -> b+ b-^T`;
//! * quantum: q-commutation relations of the quantum `S_ij` inside the
//!   L-operator algebra, then the semiclassical bracket of that algebra.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use super::lops::{l_operators, LopLayout, Sign};
use super::{word, CatalogError};
use crate::coeff::{rat, LaurentScalar, Rational};
use crate::drinfeld::poisson_bracket_in;
use crate::hopf::{HopfPresentation, Side};
use crate::liebialg::LieBialgebra;
use crate::linalg::{solve_in_span, Field, RatFunc};
use crate::mpoly::MPoly;
use crate::ncalg::{GeneratorSet, NCElement, RewriteSystem, Word};
use crate::report::CheckReport;

/// Coordinate pairs `(i, j)`, `i < j`, in the order used for names and tables.
pub fn stokes_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

pub fn stokes_names(n: usize) -> Vec<String> {
    stokes_pairs(n).into_iter().map(|(i, j)| format!("s{i}{j}")).collect()
}

/// Antisymmetric table of brackets between coordinates, polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    coordinates: Vec<String>,
    /// Keyed by `(a, b)` with `a < b`.
    entries: BTreeMap<(usize, usize), MPoly>,
}

impl BracketTable {
    pub fn new(coordinates: Vec<String>) -> Self {
        BracketTable { coordinates, entries: BTreeMap::new() }
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn set(&mut self, a: usize, b: usize, p: MPoly) {
        assert_ne!(a, b, "diagonal entries are zero");
        if a < b {
            self.entries.insert((a, b), p);
        } else {
            self.entries.insert((b, a), p.neg());
        }
    }

    pub fn get(&self, a: usize, b: usize) -> MPoly {
        let zero = MPoly::zero(self.dim());
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => zero,
            std::cmp::Ordering::Less => self.entries.get(&(a, b)).cloned().unwrap_or(zero),
            std::cmp::Ordering::Greater => self.entries.get(&(b, a)).map_or(zero, MPoly::neg),
        }
    }

    /// Biderivation extension to polynomials in the coordinates.
    pub fn bracket(&self, f: &MPoly, g: &MPoly) -> MPoly {
        let n = self.dim();
        let mut out = MPoly::zero(n);
        for a in 0..n {
            let fa = f.derivative(a);
            if fa.is_zero() {
                continue;
            }
            for b in 0..n {
                let gb = g.derivative(b);
                if a != b && !gb.is_zero() {
                    out = out.add(&fa.mul(&gb).mul(&self.get(a, b)));
                }
            }
        }
        out
    }

    /// First coordinate triple whose Jacobiator is nonzero.
    pub fn jacobi_defect(&self) -> Option<(usize, usize, usize, MPoly)> {
        let n = self.dim();
        let x = |i| MPoly::var(n, i);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let j = self
                        .bracket(&x(a), &self.bracket(&x(b), &x(c)))
                        .add(&self.bracket(&x(b), &self.bracket(&x(c), &x(a))))
                        .add(&self.bracket(&x(c), &self.bracket(&x(a), &x(b))));
                    if !j.is_zero() {
                        return Some((a, b, c, j));
                    }
                }
            }
        }
        None
    }

    /// One line `{x, y} = expr` per pair.
    pub fn render(&self) -> String {
        let n = self.dim();
        let mut out = String::new();
        for a in 0..n {
            for b in a + 1..n {
                let e = self.get(a, b);
                out.push_str(&format!(
                    "{{{}, {}}} = {}\n",
                    self.coordinates[a],
                    self.coordinates[b],
                    e.display(&self.coordinates)
                ));
            }
        }
        out
    }

    /// SHA-256 of [`BracketTable::render`], hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.render().as_bytes()))
    }
}

// ---------------------------------------------------------------------------
// classical route

/// Classical r-matrix `r = sum E_ii(x)E_ii + 2 sum_{i > j} E_ij(x)E_ji` as `r[(i, k), (m, p)]`.
fn r_classical(i: usize, k: usize, m: usize, p: usize) -> Rational {
    let mut c = <Rational as Zero>::zero();
    if i == k && k == m && m == p {
        c += rat(1);
    }
    if i > k && m == k && p == i {
        c += rat(2);
    }
    c
}

fn r21_classical(i: usize, k: usize, m: usize, p: usize) -> Rational {
    r_classical(k, i, p, m)
}

/// Coordinates on pairs of triangular matrices: `u_i = b+_ii` (with
/// `b-_ii = 1/u_i`), `b+_ij` for `i < j`, `b-_ij` for `i > j`.
struct DualGroup {
    n: usize,
    vars: Vec<(Sign, usize, usize)>,
}

impl DualGroup {
    fn new(n: usize) -> Self {
        let mut vars: Vec<_> = (1..=n).map(|i| (Sign::Plus, i, i)).collect();
        for i in 1..=n {
            for j in 1..=n {
                if i < j {
                    vars.push((Sign::Plus, i, j));
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if i > j {
                    vars.push((Sign::Minus, i, j));
                }
            }
        }
        DualGroup { n, vars }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn entry(&self, s: Sign, i: usize, j: usize) -> MPoly {
        let nv = self.nvars();
        if i == j {
            let e = if s == Sign::Plus { 1 } else { -1 };
            return MPoly::var_pow(nv, i - 1, e);
        }
        match self.vars.iter().position(|&v| v == (s, i, j)) {
            Some(k) => MPoly::var(nv, k),
            None => MPoly::zero(nv),
        }
    }

    /// `{b^a_ij, b^b_kl}`: `[L1 L2, r]` within one triangular factor and
    /// `[r21, L1+ L2-]` across them.
    fn entry_bracket(&self, (a, i, j): (Sign, usize, usize), (b, k, l): (Sign, usize, usize)) -> MPoly {
        if (a, b) == (Sign::Minus, Sign::Plus) {
            return self.entry_bracket((b, k, l), (a, i, j)).neg();
        }
        let n = self.n;
        let mixed = a != b;
        let mut out = MPoly::zero(self.nvars());
        for m in 1..=n {
            for p in 1..=n {
                let (right, left) = if mixed {
                    (-r21_classical(m, p, j, l), -r21_classical(i, k, m, p))
                } else {
                    (r_classical(m, p, j, l), r_classical(i, k, m, p))
                };
                if !Zero::is_zero(&right) {
                    out = out.add(&self.entry(a, i, m).mul(&self.entry(b, k, p)).scale(&right));
                }
                if !Zero::is_zero(&left) {
                    out = out.sub(&self.entry(a, m, j).mul(&self.entry(b, p, l)).scale(&left));
                }
            }
        }
        out
    }

    fn bivector(&self) -> Vec<Vec<MPoly>> {
        self.vars
            .iter()
            .map(|&x| self.vars.iter().map(|&y| self.entry_bracket(x, y)).collect())
            .collect()
    }

    fn stokes(&self, i: usize, j: usize) -> MPoly {
        (1..=self.n).fold(MPoly::zero(self.nvars()), |acc, k| {
            acc.add(&self.entry(Sign::Plus, i, k).mul(&self.entry(Sign::Minus, j, k)))
        })
    }
}

fn push_forward(bivector: &[Vec<MPoly>], f: &MPoly, g: &MPoly) -> MPoly {
    let nv = f.nvars();
    let mut out = MPoly::zero(nv);
    let dg: Vec<MPoly> = (0..nv).map(|y| g.derivative(y)).collect();
    for x in 0..nv {
        let fx = f.derivative(x);
        if fx.is_zero() {
            continue;
        }
        for (y, gy) in dg.iter().enumerate() {
            if !gy.is_zero() && !bivector[x][y].is_zero() {
                out = out.add(&fx.mul(gy).mul(&bivector[x][y]));
            }
        }
    }
    out
}

/// Writes `target` as a polynomial of degree `<= 2` in `images`.
fn express_quadratic(target: &MPoly, images: &[MPoly]) -> Option<MPoly> {
    let c = images.len();
    let mut monomials: Vec<Vec<i32>> = vec![vec![0; c]];
    for a in 0..c {
        let mut e = vec![0; c];
        e[a] = 1;
        monomials.push(e);
    }
    for a in 0..c {
        for b in a..c {
            let mut e = vec![0; c];
            e[a] += 1;
            e[b] += 1;
            monomials.push(e);
        }
    }
    let expanded: Vec<MPoly> = monomials
        .iter()
        .map(|e| {
            let mut m = MPoly::zero(c);
            m.add_term(e.clone(), <Rational as One>::one());
            m.compose(images)
        })
        .collect();
    let mut index: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for p in expanded.iter().chain(std::iter::once(target)) {
        for (e, _) in p.terms() {
            let k = index.len();
            index.entry(e.clone()).or_insert(k);
        }
    }
    let to_vec = |p: &MPoly| {
        let mut v = vec![<Rational as Zero>::zero(); index.len()];
        for (e, x) in p.terms() {
            v[index[e]] = x.clone();
        }
        v
    };
    let vectors: Vec<_> = expanded.iter().map(to_vec).collect();
    let sol = solve_in_span(&vectors, &to_vec(target))?;
    let mut out = MPoly::zero(c);
    for (e, x) in monomials.into_iter().zip(sol) {
        out.add_term(e, x);
    }
    Some(out)
}

/// The classical bracket of the Stokes coordinates, `n` in `3..=4`.
pub fn stokes_bracket(n: usize) -> Result<BracketTable, CatalogError> {
    if !(3..=4).contains(&n) {
        return Err(CatalogError::UnsupportedN(n));
    }
    let g = DualGroup::new(n);
    let bivector = g.bivector();
    let pairs = stokes_pairs(n);
    let images: Vec<MPoly> = pairs.iter().map(|&(i, j)| g.stokes(i, j)).collect();
    let mut table = BracketTable::new(stokes_names(n));
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let raw = push_forward(&bivector, &images[a], &images[b]);
            let e = express_quadratic(&raw, &images).ok_or_else(|| {
                CatalogError::Build(format!("bracket of s{}{} and s{}{} leaves the Stokes coordinates", pairs[a].0, pairs[a].1, pairs[b].0, pairs[b].1))
            })?;
            table.set(a, b, e);
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// quantum route

/// Quantum Stokes generators inside the L-operator algebra together with
/// the relations they satisfy among themselves.
#[derive(Debug, Clone)]
pub struct QuantumStokes {
    pub lop: HopfPresentation,
    /// `S_ij = sum_k l+_ik l-_jk`, normal forms in `lop`.
    pub generators: Vec<NCElement>,
    /// Presentation of the subalgebra on `s12, s13, s23`.
    pub relations: RewriteSystem,
}

fn ratfunc_vectors(elements: &[NCElement], target: &NCElement) -> (Vec<Vec<RatFunc>>, Vec<RatFunc>) {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for e in elements.iter().chain(std::iter::once(target)) {
        for (w, _) in e.terms() {
            let k = index.len();
            index.entry(w.clone()).or_insert(k);
        }
    }
    let to_vec = |e: &NCElement| {
        let mut v = vec![<RatFunc as Field>::zero(); index.len()];
        for (w, c) in e.terms() {
            v[index[w]] = RatFunc::from_laurent(c);
        }
        v
    };
    (elements.iter().map(to_vec).collect(), to_vec(target))
}

pub fn quantum_stokes() -> Result<QuantumStokes, CatalogError> {
    let n = 3;
    let lop = l_operators(n)?;
    let layout = LopLayout::new(n);
    let pairs = stokes_pairs(n);
    let generators: Vec<NCElement> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut s = NCElement::zero();
            for k in i..=j {
                if let (Some(p), Some(m)) = (layout.entry(Sign::Plus, i, k), layout.entry(Sign::Minus, j, k)) {
                    s = s.add(&NCElement::from_word(word(&[p, m])));
                }
            }
            lop.normal_form(&s)
        })
        .collect();
    let gens = GeneratorSet::new(stokes_names(n))?;
    let mut relations = RewriteSystem::free(gens);
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            // S_a S_b = lambda S_b S_a + mu_0 + sum_c mu_c S_c
            let target = lop.multiply(&generators[a], &generators[b]);
            let mut span = vec![lop.multiply(&generators[b], &generators[a]), NCElement::one()];
            span.extend(generators.iter().cloned());
            let (vectors, t) = ratfunc_vectors(&span, &target);
            let sol = solve_in_span(&vectors, &t).ok_or_else(|| {
                CatalogError::Build(format!("no q-commutation relation for s{}{}, s{}{}", pairs[a].0, pairs[a].1, pairs[b].0, pairs[b].1))
            })?;
            let coeffs: Vec<LaurentScalar> = sol
                .iter()
                .map(|c| c.to_laurent().ok_or_else(|| CatalogError::Build("relation coefficient is not a Laurent polynomial".into())))
                .collect::<Result<_, _>>()?;
            let mut rel = NCElement::from_word(word(&[a, b])).sub(&NCElement::term(word(&[b, a]), coeffs[0].clone()));
            rel = rel.sub(&NCElement::scalar(coeffs[1].clone()));
            for (c, mu) in coeffs[2..].iter().enumerate() {
                rel = rel.sub(&NCElement::term(word(&[c]), mu.clone()));
            }
            relations.add_relation(&rel)?;
        }
    }
    relations.interreduce()?;
    Ok(QuantumStokes { lop, generators, relations })
}

/// The semiclassical bracket of a presentation on the Stokes generators.
pub fn quantum_bracket_table(relations: &RewriteSystem) -> Result<BracketTable, CatalogError> {
    let names = relations.generators().names().to_vec();
    let c = names.len();
    let mut table = BracketTable::new(names);
    for a in 0..c {
        for b in a + 1..c {
            let e = poisson_bracket_in(&NCElement::generator(a), &NCElement::generator(b), relations)
                .map_err(|e| CatalogError::Build(e.to_string()))?;
            let mut p = MPoly::zero(c);
            for (w, coef) in e.terms() {
                let mut exps = vec![0; c];
                for &l in &w.0 {
                    exps[l as usize] += 1;
                }
                p.add_term(exps, coef.evaluate_at_one());
            }
            table.set(a, b, p);
        }
    }
    Ok(table)
}

/// Outcome of the two-oracle comparison plus the structural side checks.
#[derive(Debug, Clone)]
pub struct StokesVerification {
    pub classical: BracketTable,
    pub quantum: BracketTable,
    /// `(pair label, equal)` for every coordinate pair.
    pub matches: Vec<(String, bool)>,
    pub report: CheckReport,
}

impl StokesVerification {
    pub fn all_match(&self) -> bool {
        self.matches.iter().all(|(_, m)| *m)
    }
}

pub fn verify_stokes_quantization() -> Result<StokesVerification, CatalogError> {
    verify_stokes_with(&quantum_stokes()?)
}

/// Runs the comparison against a given quantum datum (used with perturbed fixtures).
pub fn verify_stokes_with(q: &QuantumStokes) -> Result<StokesVerification, CatalogError> {
    let classical = stokes_bracket(3)?;
    let quantum = quantum_bracket_table(&q.relations)?;
    let names = classical.coordinates().to_vec();
    let mut report = CheckReport::new();
    let mut matches = Vec::new();
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            let label = format!("{{{}, {}}}", names[a], names[b]);
            let (x, y) = (classical.get(a, b), quantum.get(a, b));
            let ok = x == y;
            let witness = (!ok).then(|| format!("classical {} vs quantum {}", x.display(&names), y.display(&names)));
            report.record(format!("bracket {label}"), witness);
            matches.push((label, ok));
        }
    }
    report.record(
        "classical table satisfies Jacobi",
        classical.jacobi_defect().map(|(a, b, c, _)| format!("{}, {}, {}", names[a], names[b], names[c])),
    );
    let coideal = q.lop.check_coideal_subalgebra(&q.generators, 2, Side::Left);
    let witness = (!coideal.passed()).then(|| {
        coideal
            .first_failure()
            .map_or_else(|| coideal.verdict().to_string(), |e| format!("{}: {}", e.name, e.witness.clone().unwrap_or_default()))
    });
    report.record("Stokes generators span a left coideal subalgebra", witness);
    let sl3 = LieBialgebra::standard_sl(3).map_err(|e| CatalogError::Build(e.to_string()))?;
    let so = so_n_embedding_in(&sl3)?;
    report.record("so3 is coisotropic in sl3", (!so.coisotropic).then(|| "not coisotropic".to_string()));
    report.record("so3 is not a sub-bialgebra", so.sub_bialgebra.then(|| "cobracket closes on so3".to_string()));
    Ok(StokesVerification { classical, quantum, matches, report })
}

/// Infinitesimal data of `so_n` inside standard `sl_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SoEmbedding {
    pub subalgebra: bool,
    pub coisotropic: bool,
    pub sub_bialgebra: bool,
    pub complementary_dual_dim: usize,
}

pub fn so_n_embedding_check(n: usize) -> Result<SoEmbedding, CatalogError> {
    if n != 3 {
        return Err(CatalogError::UnsupportedN(n));
    }
    let g = LieBialgebra::standard_sl(n).map_err(|e| CatalogError::Build(e.to_string()))?;
    so_n_embedding_in(&g)
}

/// Same checks against a bialgebra carrying matrix realizations, e.g. a perturbed copy.
pub fn so_n_embedding_in(g: &LieBialgebra) -> Result<SoEmbedding, CatalogError> {
    let err = |e: crate::liebialg::LieError| CatalogError::Build(e.to_string());
    let k = g.so_subspace().ok_or_else(|| CatalogError::Build("bialgebra has no matrix realization".into()))?;
    Ok(SoEmbedding {
        subalgebra: g.is_subalgebra(&k),
        coisotropic: g.is_coisotropic(&k).map_err(err)?,
        sub_bialgebra: g.is_sub_bialgebra(&k).map_err(err)?,
        complementary_dual_dim: g.complementary_dual(&k).map_err(err)?.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Rule;

    #[test]
    fn classical_table() {
        let t = stokes_bracket(3).unwrap();
        assert_eq!(
            t.render(),
            "{s12, s13} = s12*s13 - 2*s23\n{s12, s23} = -s12*s23 + 2*s13\n{s13, s23} = s13*s23 - 2*s12\n"
        );
        assert!(t.jacobi_defect().is_none());
        assert!(t.get(0, 0).is_zero());
        assert_eq!(t.get(1, 0), t.get(0, 1).neg());
        assert!(matches!(stokes_bracket(5), Err(CatalogError::UnsupportedN(5))));
        assert!(matches!(stokes_bracket(2), Err(CatalogError::UnsupportedN(2))));
    }

    #[test]
    fn classical_table_n4_is_poisson() {
        let t = stokes_bracket(4).unwrap();
        assert_eq!(t.coordinates().len(), 6);
        assert!(t.jacobi_defect().is_none());
    }

    #[test]
    fn quantum_matches_classical() {
        let q = quantum_stokes().unwrap();
        assert_eq!(q.relations.rules().len(), 3);
        assert!(q.relations.check_confluence(6).is_empty());
        let v = verify_stokes_with(&q).unwrap();
        assert!(v.all_match(), "{}", v.report);
        assert!(v.report.passed(), "{}", v.report);
        assert_eq!(v.classical.digest(), v.quantum.digest());
    }

    #[test]
    fn perturbed_relations_are_caught() {
        let mut q = quantum_stokes().unwrap();
        let gens = q.relations.generators().clone();
        let mut rules: Vec<Rule> = q.relations.rules().to_vec();
        // an extra (q - 1) s12 term shifts {s12, s13}
        let extra = NCElement::term(word(&[0]), LaurentScalar::q_minus_one());
        rules[0].rhs = rules[0].rhs.add(&extra);
        q.relations = RewriteSystem::new(gens, rules).unwrap();
        let v = verify_stokes_with(&q).unwrap();
        assert!(!v.all_match());
        assert_eq!(v.matches.iter().filter(|(_, m)| !m).count(), 1);
        assert!(!v.report.passed());
    }

    #[test]
    fn so3_embedding() {
        let r = so_n_embedding_check(3).unwrap();
        assert!(r.subalgebra && r.coisotropic && !r.sub_bialgebra);
        assert_eq!(r.complementary_dual_dim, 5);
        assert!(matches!(so_n_embedding_check(2), Err(CatalogError::UnsupportedN(2))));
    }

    #[test]
    fn perturbed_cobracket_breaks_coisotropy() {
        // basis E12, E13, E23, H1, H2, E21, E31, E32: push H1^H2 into delta(E12)
        let g = LieBialgebra::standard_sl(3).unwrap().perturbed_cobracket(0, 3, 4, rat(1));
        let r = so_n_embedding_in(&g).unwrap();
        assert!(r.subalgebra);
        assert!(!r.coisotropic);
    }
}
