//! Hopf structure on presented algebras: coproduct, counit and antipode given
//! on generators, tensor powers, the operators `delta_n`, and bounded checks of
//! the Hopf axioms and of quantum-subgroup data.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::coeff::{LaurentScalar, Valuation};
use crate::linalg::{solve_in_span, RatFunc};
use crate::ncalg::{GeneratorSet, NCElement, NcError, RewriteSystem, Word};
use crate::report::{CheckReport, Status};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("{what} given for {got} generators, expected {expected}")]
    LengthMismatch { what: &'static str, got: usize, expected: usize },
    #[error("coproduct image of `{0}` is not a 2-fold tensor")]
    BadArity(String),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// Which classical object a presentation is meant to deform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    #[default]
    Unspecified,
    /// Quantum function algebra.
    FunctionAlgebra,
    /// Quantized enveloping algebra.
    Enveloping,
}

/// Element of the `n`-fold tensor power of a presented algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, LaurentScalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn unit(arity: usize) -> Self {
        Self::pure(vec![Word::unit(); arity], LaurentScalar::one())
    }

    pub fn pure(factors: Vec<Word>, c: LaurentScalar) -> Self {
        let mut t = Self::zero(factors.len());
        t.add_term(factors, c);
        t
    }

    /// `a (x) b` for elements `a`, `b`.
    pub fn tensor2(a: &NCElement, b: &NCElement) -> Self {
        let mut t = Self::zero(2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(vec![wa.clone(), wb.clone()], ca * cb);
            }
        }
        t
    }

    pub fn from_element(a: &NCElement) -> Self {
        let mut t = Self::zero(1);
        for (w, c) in a.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, factors: Vec<Word>, c: LaurentScalar) {
        debug_assert_eq!(factors.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(factors.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&factors);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (f, c) in &o.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (f, c) in &o.terms {
            out.add_term(f.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> TensorElement {
        let mut out = TensorElement::zero(self.arity);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), c * s);
        }
        out
    }

    /// Reverses the two factors of a 2-fold tensor.
    pub fn swap(&self) -> TensorElement {
        assert_eq!(self.arity, 2);
        let mut out = TensorElement::zero(2);
        for (f, c) in &self.terms {
            out.add_term(vec![f[1].clone(), f[0].clone()], c.clone());
        }
        out
    }

    pub fn q1_valuation(&self) -> Valuation {
        self.terms
            .values()
            .map(LaurentScalar::q1_valuation)
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    pub fn divide_by_q1(&self, n: u32) -> Option<TensorElement> {
        let mut out = TensorElement::zero(self.arity);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), c.divide_by_q1(n).ok()?);
        }
        Some(out)
    }

    pub fn evaluate_at_one(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.arity);
        for (f, c) in &self.terms {
            out.add_term(f.clone(), LaurentScalar::constant(c.evaluate_at_one()));
        }
        out
    }

    /// Rewrites every factor to normal form in `sys` and expands.
    pub fn normalize(&self, sys: &RewriteSystem) -> TensorElement {
        let mut out = TensorElement::zero(self.arity);
        for (factors, c) in &self.terms {
            let mut partial: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::with_capacity(self.arity), c.clone())];
            for w in factors {
                let nf = sys.normal_form_word(w);
                let mut next = Vec::with_capacity(partial.len() * nf.len());
                for (pf, pc) in &partial {
                    for (nw, nc) in nf.terms() {
                        let c = sys.truncate_scalar(pc * nc);
                        if c.is_zero() {
                            continue;
                        }
                        let mut f = pf.clone();
                        f.push(nw.clone());
                        next.push((f, c));
                    }
                }
                partial = next;
            }
            for (f, c) in partial {
                out.add_term(f, c);
            }
        }
        out.truncated(sys)
    }

    fn truncated(self, sys: &RewriteSystem) -> TensorElement {
        if sys.precision().is_none() {
            return self;
        }
        let mut out = TensorElement::zero(self.arity);
        for (f, c) in self.terms {
            out.add_term(f, sys.truncate_scalar(c));
        }
        out
    }

    /// Factorwise product, normalized in `sys`.
    pub fn mul(&self, o: &TensorElement, sys: &RewriteSystem) -> TensorElement {
        assert_eq!(self.arity, o.arity);
        let mut raw = TensorElement::zero(self.arity);
        for (f1, c1) in &self.terms {
            for (f2, c2) in &o.terms {
                let c = sys.truncate_scalar(c1 * c2);
                if c.is_zero() {
                    continue;
                }
                let f: Vec<Word> = f1.iter().zip(f2).map(|(a, b)| a.concat(b)).collect();
                raw.add_term(f, c);
            }
        }
        raw.normalize(sys)
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> TensorDisplay<'a> {
        TensorDisplay { t: self, gens }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w, c.to_string()))).finish()
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorElement,
    gens: &'a GeneratorSet,
}

struct FactorsDisplay<'a>(&'a [Word], &'a GeneratorSet);

impl fmt::Display for FactorsDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " (x) ")?;
            }
            write!(f, "{}", w.display(self.1))?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        for (i, (factors, c)) in self.t.terms.iter().rev().enumerate() {
            crate::ncalg::fmt_term(f, c, &FactorsDisplay(factors, self.gens), false, i == 0)?;
        }
        Ok(())
    }
}

/// Finitely presented Hopf algebra over `Q[q, q^-1]`.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub name: String,
    relations: RewriteSystem,
    counit: Vec<LaurentScalar>,
    coproduct: Vec<TensorElement>,
    antipode: Vec<NCElement>,
    pub role: Role,
    pub dimension_hint: Option<usize>,
    defining: Option<Vec<NCElement>>,
}

impl PartialEq for HopfPresentation {
    fn eq(&self, o: &Self) -> bool {
        self.relations == o.relations
            && self.counit == o.counit
            && self.coproduct == o.coproduct
            && self.antipode == o.antipode
            && self.role == o.role
    }
}

impl HopfPresentation {
    pub fn new(
        name: impl Into<String>,
        relations: RewriteSystem,
        counit: Vec<LaurentScalar>,
        coproduct: Vec<TensorElement>,
        antipode: Vec<NCElement>,
    ) -> Result<Self, HopfError> {
        let n = relations.generators().len();
        for (what, got) in [("counit", counit.len()), ("coproduct", coproduct.len()), ("antipode", antipode.len())] {
            if got != n {
                return Err(HopfError::LengthMismatch { what, got, expected: n });
            }
        }
        for (i, d) in coproduct.iter().enumerate() {
            if d.arity() != 2 {
                return Err(HopfError::BadArity(relations.generators().name(i).to_string()));
            }
        }
        let coproduct = coproduct.iter().map(|d| d.normalize(&relations)).collect();
        let antipode = antipode.iter().map(|s| relations.normal_form(s)).collect();
        let counit = counit.into_iter().map(|c| relations.truncate_scalar(c)).collect();
        Ok(Self {
            name: name.into(),
            relations,
            counit,
            coproduct,
            antipode,
            role: Role::Unspecified,
            dimension_hint: None,
            defining: None,
        })
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    pub fn with_dimension(mut self, dim: usize) -> Self {
        self.dimension_hint = Some(dim);
        self
    }

    /// Records a generating set for the relation ideal, smaller than the completed rule list.
    pub fn with_defining_relations(mut self, rels: Vec<NCElement>) -> Self {
        self.defining = Some(rels);
        self
    }

    /// Generators of the relation ideal: the recorded defining set, or every rule.
    pub fn defining_relations(&self) -> Vec<NCElement> {
        match &self.defining {
            Some(r) => r.clone(),
            None => self.relations.rules().iter().map(|r| r.relation()).collect(),
        }
    }

    /// The recorded defining set, if one was given.
    pub fn explicit_defining_relations(&self) -> Option<&[NCElement]> {
        self.defining.as_deref()
    }

    pub fn generators(&self) -> &GeneratorSet {
        self.relations.generators()
    }

    pub fn relations(&self) -> &RewriteSystem {
        &self.relations
    }

    pub fn generator(&self, name: &str) -> Option<NCElement> {
        self.generators().index_of(name).map(NCElement::generator)
    }

    pub fn generator_counit(&self, i: usize) -> &LaurentScalar {
        &self.counit[i]
    }

    pub fn generator_coproduct(&self, i: usize) -> &TensorElement {
        &self.coproduct[i]
    }

    pub fn generator_antipode(&self, i: usize) -> &NCElement {
        &self.antipode[i]
    }

    pub fn normal_form(&self, e: &NCElement) -> NCElement {
        self.relations.normal_form(e)
    }

    pub fn multiply(&self, a: &NCElement, b: &NCElement) -> NCElement {
        self.relations.multiply(a, b)
    }

    pub fn display_element(&self, e: &NCElement) -> String {
        e.display(self.generators()).to_string()
    }

    pub fn display_tensor(&self, t: &TensorElement) -> String {
        t.display(self.generators()).to_string()
    }

    fn word_coproduct(&self, w: &Word, cache: &mut HashMap<Word, TensorElement>) -> TensorElement {
        if let Some(hit) = cache.get(w) {
            return hit.clone();
        }
        let mut acc = TensorElement::unit(2);
        for g in &w.0 {
            acc = acc.mul(&self.coproduct[*g as usize], &self.relations);
        }
        cache.insert(w.clone(), acc.clone());
        acc
    }

    /// Algebra-morphism extension of the generator coproducts.
    pub fn coproduct(&self, e: &NCElement) -> TensorElement {
        let mut cache = HashMap::new();
        let mut out = TensorElement::zero(2);
        for (w, c) in e.terms() {
            out = out.add(&self.word_coproduct(w, &mut cache).scale(c));
        }
        out.truncated(&self.relations)
    }

    /// `Delta^(n)`; `n = 1` is the identity.
    pub fn iterated_coproduct(&self, e: &NCElement, n: usize) -> TensorElement {
        assert!(n >= 1, "iterated coproduct needs n >= 1");
        let e = self.normal_form(e);
        let mut cur = TensorElement::from_element(&e);
        let mut cache = HashMap::new();
        for _ in 1..n {
            let mut next = TensorElement::zero(cur.arity() + 1);
            for (factors, c) in cur.terms() {
                let d = self.word_coproduct(&factors[0], &mut cache);
                for (df, dc) in d.terms() {
                    let mut f = df.clone();
                    f.extend(factors[1..].iter().cloned());
                    next.add_term(f, c * dc);
                }
            }
            cur = next.truncated(&self.relations);
        }
        cur
    }

    pub fn counit(&self, e: &NCElement) -> LaurentScalar {
        let mut total = LaurentScalar::zero();
        for (w, c) in e.terms() {
            total += self.word_counit(w) * c.clone();
        }
        self.relations.truncate_scalar(total)
    }

    fn word_counit(&self, w: &Word) -> LaurentScalar {
        w.0.iter().fold(LaurentScalar::one(), |acc, g| &acc * &self.counit[*g as usize])
    }

    /// Anti-multiplicative extension of the generator antipodes.
    pub fn antipode(&self, e: &NCElement) -> NCElement {
        e.substitute(&self.antipode, true, |x| self.relations.normal_form(&x))
    }

    /// `(pi (x) ... (x) pi) Delta^(n)(e)` with `pi = id - unit*counit`.
    pub fn delta_n(&self, e: &NCElement, n: usize) -> TensorElement {
        let full = self.iterated_coproduct(e, n);
        let mut out = TensorElement::zero(n);
        for (factors, c) in full.terms() {
            // each factor w becomes w - eps(w)*1
            let mut partial: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::with_capacity(n), c.clone())];
            for w in factors {
                let eps = self.word_counit(w);
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (pf, pc) in &partial {
                    if !w.is_unit() {
                        let mut f = pf.clone();
                        f.push(w.clone());
                        next.push((f, pc.clone()));
                    }
                    if !eps.is_zero() && !w.is_unit() {
                        let mut f = pf.clone();
                        f.push(Word::unit());
                        next.push((f, -(pc * &eps)));
                    }
                }
                partial = next;
            }
            for (f, c) in partial {
                out.add_term(f, c);
            }
        }
        out.truncated(&self.relations)
    }

    /// `m (S (x) id)` or `m (id (x) S)` applied to a 2-fold tensor.
    fn antipode_contract(&self, t: &TensorElement, left: bool) -> NCElement {
        let mut out = NCElement::zero();
        for (f, c) in t.terms() {
            let a = NCElement::from_word(f[0].clone());
            let b = NCElement::from_word(f[1].clone());
            let prod = if left {
                self.antipode(&a).mul_free(&b)
            } else {
                a.mul_free(&self.antipode(&b))
            };
            out = out.add(&prod.scale(c));
        }
        self.normal_form(&out)
    }

    fn apply_counit_to_factor(&self, t: &TensorElement, which: usize) -> NCElement {
        let mut out = NCElement::zero();
        for (f, c) in t.terms() {
            let eps = self.word_counit(&f[which]);
            out.add_term(f[1 - which].clone(), c * &eps);
        }
        self.normal_form(&out)
    }

    fn sample_elements(&self, max_degree: usize) -> Vec<NCElement> {
        self.relations
            .basis_words(max_degree.min(2))
            .into_iter()
            .filter(|w| !w.is_unit())
            .map(NCElement::from_word)
            .collect()
    }

    /// Bounded verification of the Hopf axioms.
    pub fn check_hopf_axioms(&self, max_degree: usize) -> CheckReport {
        let gens = self.generators();
        let mut report = CheckReport::new();
        let critical = self.relations.check_confluence(2 * max_degree);
        report.record(
            "relations confluent",
            critical.first().map(|cp| format!("ambiguity at {}", cp.word.display(gens))),
        );
        let samples = self.sample_elements(max_degree);

        let mut coassoc = None;
        let mut counit_law = None;
        let mut cache = HashMap::new();
        for x in &samples {
            let d = self.coproduct(x);
            let mut left = TensorElement::zero(3);
            let mut right = TensorElement::zero(3);
            for (f, c) in d.terms() {
                for (g, gc) in self.word_coproduct(&f[0], &mut cache).terms() {
                    left.add_term(vec![g[0].clone(), g[1].clone(), f[1].clone()], c * gc);
                }
                for (g, gc) in self.word_coproduct(&f[1], &mut cache).terms() {
                    right.add_term(vec![f[0].clone(), g[0].clone(), g[1].clone()], c * gc);
                }
            }
            let diff = left.sub(&right).truncated(&self.relations);
            if coassoc.is_none() && !diff.is_zero() {
                coassoc = Some(format!("on {}", self.display_element(x)));
            }
            let xn = self.normal_form(x);
            if counit_law.is_none()
                && (self.apply_counit_to_factor(&d, 0) != xn || self.apply_counit_to_factor(&d, 1) != xn)
            {
                counit_law = Some(format!("on {}", self.display_element(x)));
            }
        }
        report.record("coassociativity", coassoc);
        report.record("counit law", counit_law);

        let mut delta_rel = None;
        let mut eps_rel = None;
        let mut s_rel = None;
        for rule in self.relations.rules().iter().filter(|r| r.lhs.degree() <= max_degree) {
            let rel = rule.relation();
            let show = || format!("relation {} = {}", rule.lhs.display(gens), rule.rhs.display(gens));
            if delta_rel.is_none() && !self.coproduct(&rel).is_zero() {
                delta_rel = Some(show());
            }
            if eps_rel.is_none() && !self.counit(&rel).is_zero() {
                eps_rel = Some(show());
            }
            let s_lhs = self.antipode(&NCElement::from_word(rule.lhs.clone()));
            if s_rel.is_none() && s_lhs != self.antipode(&rule.rhs) {
                s_rel = Some(show());
            }
        }
        report.record("coproduct respects relations", delta_rel);
        report.record("counit respects relations", eps_rel);
        report.record("antipode respects relations", s_rel);

        let mut antipode_law = None;
        for i in 0..gens.len() {
            let x = NCElement::generator(i);
            let d = self.coproduct(&x);
            let expected = NCElement::scalar(self.counit[i].clone());
            let l = self.antipode_contract(&d, true);
            let r = self.antipode_contract(&d, false);
            if l != expected || r != expected {
                antipode_law = Some(format!("on {}", gens.name(i)));
                break;
            }
        }
        report.record("antipode law", antipode_law);
        report
    }

    /// Type I data: `I` generates a two-sided ideal that must also be a coideal
    /// annihilated by the counit.
    pub fn check_ideal_coideal(&self, ideal: &[NCElement], max_degree: usize) -> CheckReport {
        let mut report = CheckReport::new();
        if ideal.is_empty() {
            report.pass("empty ideal");
            return report;
        }
        let mut quotient = self.relations.clone();
        let mut orientable = true;
        for g in ideal {
            if quotient.add_relation(g).is_err() {
                orientable = false;
            }
        }
        let quotient_ok = orientable && quotient.complete(2 * max_degree, 2 * max_degree).unwrap_or(false);
        for g in ideal {
            let name = format!("generator {}", self.display_element(g));
            let eps = self.counit(g);
            if !eps.is_zero() {
                report.fail(name, format!("counit is {eps}, not 0"));
                continue;
            }
            if !quotient_ok {
                report.push(name, Status::Inconclusive, Some("quotient rewriting not confluent within bound".into()));
                continue;
            }
            // Delta(g) lies in I(x)H + H(x)I iff it vanishes in (H/I)(x)(H/I)
            let image = self.coproduct(g).normalize(&quotient);
            let first = image.terms().next().map(|(f, c)| TensorElement::pure(f.clone(), c.clone()));
            match first {
                None => report.pass(name),
                Some(t) => report.fail(name, format!("Delta leaves I(x)H + H(x)I at {}", self.display_tensor(&t))),
            }
        }
        report
    }

    /// Type II data: the unital subalgebra generated by `subalgebra` must be a
    /// one-sided coideal, decided on the degree `<= max_degree` slice.
    pub fn check_coideal_subalgebra(&self, subalgebra: &[NCElement], max_degree: usize, side: Side) -> CheckReport {
        let mut report = CheckReport::new();
        let gens: Vec<NCElement> = subalgebra.iter().map(|t| self.normal_form(t)).collect();
        // group by the factor that must range over all of H
        let (free, sub) = match side {
            Side::Left => (0, 1),
            Side::Right => (1, 0),
        };
        let all_components: Vec<BTreeMap<Word, NCElement>> = gens
            .iter()
            .map(|t| {
                let mut components: BTreeMap<Word, NCElement> = BTreeMap::new();
                for (f, c) in self.coproduct(t).terms() {
                    components.entry(f[free].clone()).or_default().add_term(f[sub].clone(), c.clone());
                }
                components
            })
            .collect();
        let mut max_degree = max_degree;
        if self.relations.precision().is_some() {
            // word degree only reflects the truncation order here
            let top = all_components.iter().flat_map(|m| m.values()).map(NCElement::degree).max();
            max_degree = max_degree.max(top.unwrap_or(0));
        }
        let span = self.subalgebra_span(&gens, max_degree);
        for (t, components) in gens.iter().zip(&all_components) {
            let name = format!("generator {}", self.display_element(t));
            let mut status = Status::Pass;
            let mut witness = None;
            for (w, y) in components.iter().rev() {
                if y.degree() > max_degree {
                    if status == Status::Pass {
                        status = Status::Inconclusive;
                        witness = Some(format!("component at {} exceeds degree {max_degree}", w.display(self.generators())));
                    }
                    continue;
                }
                if !in_span(&span, y) {
                    let support: BTreeSet<&Word> = span.iter().flat_map(|e| e.terms().map(|(w, _)| w)).collect();
                    let outside = y.terms().filter(|(yw, _)| !support.contains(yw)).min_by_key(|(_, c)| c.q1_valuation());
                    let mut t = TensorElement::zero(2);
                    if let Some((yw, yc)) = outside.or_else(|| y.terms().next_back()) {
                        let mut f = vec![w.clone(), w.clone()];
                        f[sub] = yw.clone();
                        t.add_term(f, yc.clone());
                    }
                    status = Status::Fail;
                    witness = Some(self.display_tensor(&t));
                    break;
                }
            }
            report.push(name, status, witness);
        }
        report
    }

    /// Normal forms spanning the degree-bounded part of the unital subalgebra.
    fn subalgebra_span(&self, gens: &[NCElement], max_degree: usize) -> Vec<NCElement> {
        let mut out = vec![NCElement::one()];
        let mut frontier = vec![(NCElement::one(), 0usize)];
        while let Some((p, d)) = frontier.pop() {
            for g in gens {
                let gd = g.degree();
                if gd == 0 || d + gd > max_degree {
                    continue;
                }
                let prod = self.multiply(&p, g);
                out.push(prod.clone());
                frontier.push((prod, d + gd));
            }
        }
        out
    }
}

/// Membership of `y` in the `Q(q)`-span of `span`.
fn in_span(span: &[NCElement], y: &NCElement) -> bool {
    if y.is_zero() {
        return true;
    }
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for e in span.iter().chain(std::iter::once(y)) {
        for (w, _) in e.terms() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    let to_vec = |e: &NCElement| {
        let mut v = vec![<RatFunc as crate::linalg::Field>::zero(); index.len()];
        for (w, c) in e.terms() {
            v[index[w]] = RatFunc::from_laurent(c);
        }
        v
    };
    let vectors: Vec<_> = span.iter().map(to_vec).collect();
    solve_in_span(&vectors, &to_vec(y)).is_some()
}

/// Which tensor factor of `Delta(t)` must stay inside the subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Delta(T) in H (x) <T>`.
    Left,
    /// `Delta(T) in <T> (x) H`.
    Right,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sl2_structure_maps() {
        let p = catalog::fq_sl(2).unwrap();
        let a = p.generator("a").unwrap();
        assert_eq!(p.display_tensor(&p.coproduct(&a)), "a (x) a + b (x) c");
        assert_eq!(p.display_tensor(&p.coproduct(&NCElement::one())), "1 (x) 1");
        assert!(p.counit(&a).is_one());
        assert!(p.counit(&p.generator("b").unwrap()).is_zero());
        assert_eq!(p.antipode(&a), p.generator("d").unwrap());
        assert_eq!(p.display_tensor(&p.delta_n(&a, 1)), "a - 1");
        assert!(p.delta_n(&NCElement::one(), 3).is_zero());
        let d2 = p.delta_n(&a, 2);
        let expected = TensorElement::tensor2(&a.sub(&NCElement::one()), &a.sub(&NCElement::one()))
            .add(&TensorElement::tensor2(&p.generator("b").unwrap(), &p.generator("c").unwrap()));
        assert_eq!(d2, expected);
    }

    #[test]
    fn catalog_axioms() {
        for p in [catalog::fq_sl(2), catalog::borel_sl2(), catalog::abelian_toy(), catalog::fq_sl(3)] {
            let p = p.unwrap();
            let r = p.check_hopf_axioms(3);
            assert!(r.passed(), "{}:\n{r}", p.name);
        }
    }

    #[test]
    fn non_counital_fails() {
        let gens = GeneratorSet::new(["x"]).unwrap();
        let x = Word::letter(0);
        let p = HopfPresentation::new(
            "bad",
            RewriteSystem::free(gens),
            vec![LaurentScalar::zero()],
            vec![TensorElement::pure(vec![x, Word::unit()], LaurentScalar::one())],
            vec![NCElement::generator(0).neg()],
        )
        .unwrap();
        let r = p.check_hopf_axioms(2);
        assert_eq!(r.get("counit law").unwrap().status, Status::Fail);
    }

    #[test]
    fn type_one_and_two() {
        let p = catalog::fq_sl(2).unwrap();
        let g = |n: &str| p.generator(n).unwrap();
        let r = p.check_ideal_coideal(&[g("c")], 3);
        assert!(r.passed(), "{r}");
        let r = p.check_ideal_coideal(&[g("a")], 3);
        assert_eq!(r.verdict(), Status::Fail);
        assert!(p.check_ideal_coideal(&[], 3).passed());
        assert!(p.check_coideal_subalgebra(&[NCElement::one()], 2, Side::Left).passed());
        let r = p.check_coideal_subalgebra(&[g("c")], 2, Side::Left);
        assert_eq!(r.verdict(), Status::Fail);
        assert_eq!(r.first_failure().unwrap().witness.as_deref(), Some("c (x) a"));
        let r = p.check_coideal_subalgebra(&[g("c")], 2, Side::Right);
        assert_eq!(r.first_failure().unwrap().witness.as_deref(), Some("d (x) c"));
    }
}
