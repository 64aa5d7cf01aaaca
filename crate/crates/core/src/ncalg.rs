//! Noncommutative polynomials over `Q[q, q^-1]` and rewriting-based normal forms.
//!
//! Words are ordered degree-lexicographically; a generator declared earlier
//! has higher precedence, so with generators `[a, b]` the word `a*b` exceeds
//! `b*a`. A rewrite rule replaces a monomial left-hand side by a combination
//! of strictly smaller words, which makes every reduction terminate.
//!
//! A system may carry a *precision* `M`: coefficients then live in
//! `Q[q, q^-1] / (q-1)^M` and right-hand-side terms whose coefficient is
//! divisible by `q-1` are exempt from the order condition (they vanish after
//! at most `M` substitutions).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::coeff::{LaurentScalar, Rational, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("generator names must be distinct and nonempty (offending: `{0}`)")]
    BadGenerators(String),
    #[error("rule `{rule}` is not decreasing: right-hand word `{word}` is not below the left-hand side")]
    OrderViolation { rule: String, word: String },
    #[error("rule left-hand side must be a nonempty monomial word: `{0}`")]
    BadLeftHandSide(String),
    #[error("relation `{0}` has no leading word with invertible coefficient")]
    NotOrientable(String),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
}

/// Ordered, distinct generator names. Declaration order is precedence order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, NcError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(NcError::BadGenerators(String::new()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(NcError::BadGenerators(n.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial: a sequence of generator indices. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u16])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Position of the first occurrence of `pat` in `self`.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - pat.0.len()).find(|&i| self.0[i..i + pat.0.len()] == pat.0[..])
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> WordDisplay<'a> {
        WordDisplay { word: self, gens }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            // lower index = higher precedence = larger
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    gens: &'a GeneratorSet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_unit() {
            return write!(f, "1");
        }
        for (i, g) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.gens.name(*g as usize))?;
        }
        Ok(())
    }
}

/// Linear combination of words with Laurent coefficients.
///
/// The type itself is an element of the free algebra; it is *canonical* for
/// a presented algebra once passed through [`RewriteSystem::normal_form`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCElement {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl NCElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::unit())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        Self::term(Word::unit(), c)
    }

    pub fn generator(i: usize) -> Self {
        Self::from_word(Word::letter(i))
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, LaurentScalar::one())
    }

    pub fn term(w: Word, c: LaurentScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, LaurentScalar)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &LaurentScalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &NCElement) -> NCElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCElement) -> NCElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCElement {
        self.scale(&LaurentScalar::integer(-1))
    }

    pub fn scale(&self, c: &LaurentScalar) -> NCElement {
        if c.is_zero() {
            return NCElement::zero();
        }
        NCElement::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Concatenation product in the free algebra (no reduction).
    pub fn mul_free(&self, other: &NCElement) -> NCElement {
        let mut out = NCElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Minimum `(q-1)`-adic valuation over all coefficients.
    pub fn q1_valuation(&self) -> Valuation {
        self.terms
            .values()
            .map(LaurentScalar::q1_valuation)
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    /// Coefficientwise exact division by `(q-1)^n`.
    pub fn divide_by_q1(&self, n: u32) -> Option<NCElement> {
        let mut out = NCElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.divide_by_q1(n).ok()?);
        }
        Some(out)
    }

    /// Substitutes `q := 1` in every coefficient.
    pub fn evaluate_at_one(&self) -> NCElement {
        NCElement::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), LaurentScalar::constant(c.evaluate_at_one()))),
        )
    }

    pub fn map_coefficients(&self, f: impl Fn(&LaurentScalar) -> LaurentScalar) -> NCElement {
        NCElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Applies an algebra morphism (or anti-morphism when `reverse`) given on letters.
    pub fn substitute(
        &self,
        images: &[NCElement],
        reverse: bool,
        mut reduce: impl FnMut(NCElement) -> NCElement,
    ) -> NCElement {
        let mut out = NCElement::zero();
        for (w, c) in &self.terms {
            let mut acc = NCElement::scalar(c.clone());
            let letters: Vec<u16> = if reverse {
                w.0.iter().rev().copied().collect()
            } else {
                w.0.clone()
            };
            for g in letters {
                acc = reduce(acc.mul_free(&images[g as usize]));
            }
            out = out.add(&acc);
        }
        reduce(out)
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> ElementDisplay<'a> {
        ElementDisplay { elem: self, gens }
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w, c.to_string()))).finish()
    }
}

pub struct ElementDisplay<'a> {
    elem: &'a NCElement,
    gens: &'a GeneratorSet,
}

/// Writes `coefficient*word` pieces joined by ` + `, largest word first.
pub(crate) fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    c: &LaurentScalar,
    word: &dyn fmt::Display,
    unit: bool,
    first: bool,
) -> fmt::Result {
    let negated = -c;
    let (c, sep) = match c.as_unit() {
        Some((r, _)) if !first && r < Rational::from_integer(0.into()) => (&negated, " - "),
        _ => (c, " + "),
    };
    if !first {
        write!(f, "{sep}")?;
    }
    if c.is_one() {
        return write!(f, "{word}");
    }
    if !unit && negated.is_one() {
        return write!(f, "-{word}");
    }
    let cs = if c.as_unit().is_some() { c.to_string() } else { format!("({c})") };
    if unit {
        write!(f, "{cs}")
    } else {
        write!(f, "{cs}*{word}")
    }
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.elem.terms.iter().rev().enumerate() {
            fmt_term(f, c, &w.display(self.gens), w.is_unit(), i == 0)?;
        }
        Ok(())
    }
}

/// An oriented relation `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCElement,
}

impl Rule {
    /// The relation element `lhs - rhs`.
    pub fn relation(&self) -> NCElement {
        NCElement::from_word(self.lhs.clone()).sub(&self.rhs)
    }
}

/// Rewrite system on a generator set, with an optional coefficient precision.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    gens: GeneratorSet,
    rules: Vec<Rule>,
    precision: Option<u32>,
    by_first: HashMap<u16, Vec<usize>>,
    word_cache: Arc<Mutex<HashMap<Word, NCElement>>>,
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.rules == other.rules && self.precision == other.precision
    }
}

/// One unresolved ambiguity found by [`RewriteSystem::check_confluence`].
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCElement,
    pub right: NCElement,
}

impl RewriteSystem {
    pub fn new(gens: GeneratorSet, rules: Vec<Rule>) -> Result<Self, NcError> {
        Self::with_precision(gens, rules, None)
    }

    pub fn with_precision(gens: GeneratorSet, rules: Vec<Rule>, precision: Option<u32>) -> Result<Self, NcError> {
        let mut sys = Self {
            gens,
            rules: Vec::new(),
            precision,
            by_first: HashMap::new(),
            word_cache: Arc::default(),
        };
        for r in rules {
            sys.push_rule(r)?;
        }
        Ok(sys)
    }

    /// A system with no relations (the free algebra).
    pub fn free(gens: GeneratorSet) -> Self {
        Self::new(gens, Vec::new()).expect("empty rule set is valid")
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn precision(&self) -> Option<u32> {
        self.precision
    }

    pub fn max_rule_degree(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.degree()).max().unwrap_or(0)
    }

    fn check_rule(&self, rule: &Rule) -> Result<(), NcError> {
        let show = || format!("{} = {}", rule.lhs.display(&self.gens), rule.rhs.display(&self.gens));
        if rule.lhs.is_unit() {
            return Err(NcError::BadLeftHandSide(show()));
        }
        for g in rule.lhs.0.iter().chain(rule.rhs.terms().flat_map(|(w, _)| w.0.iter())) {
            if *g as usize >= self.gens.len() {
                return Err(NcError::BadIndex(*g as usize));
            }
        }
        for (w, c) in rule.rhs.terms() {
            let exempt = self.precision.is_some() && c.q1_valuation().at_least(1);
            if !exempt && *w >= rule.lhs {
                return Err(NcError::OrderViolation {
                    rule: show(),
                    word: w.display(&self.gens).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn push_rule(&mut self, rule: Rule) -> Result<(), NcError> {
        let rule = Rule {
            lhs: rule.lhs,
            rhs: self.truncate(rule.rhs),
        };
        self.check_rule(&rule)?;
        self.by_first.entry(rule.lhs.0[0]).or_default().push(self.rules.len());
        self.rules.push(rule);
        self.word_cache = Arc::default();
        Ok(())
    }

    /// Memoized normal form of a single word.
    pub fn normal_form_word(&self, w: &Word) -> NCElement {
        if self.is_irreducible(w) {
            return NCElement::from_word(w.clone());
        }
        if let Some(hit) = self.word_cache.lock().expect("cache poisoned").get(w) {
            return hit.clone();
        }
        let nf = self.normal_form(&NCElement::from_word(w.clone()));
        self.word_cache.lock().expect("cache poisoned").insert(w.clone(), nf.clone());
        nf
    }

    /// Reduces coefficients modulo `(q-1)^M` when a precision is set.
    pub fn truncate(&self, e: NCElement) -> NCElement {
        match self.precision {
            None => e,
            Some(m) => e.map_coefficients(|c| c.mod_q1_power(m)),
        }
    }

    pub fn truncate_scalar(&self, c: LaurentScalar) -> LaurentScalar {
        match self.precision {
            None => c,
            Some(m) => c.mod_q1_power(m),
        }
    }

    /// First redex in `w`: leftmost position, earliest rule.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.0.len() {
            if let Some(cands) = self.by_first.get(&w.0[pos]) {
                for &ri in cands {
                    let lhs = &self.rules[ri].lhs.0;
                    if w.0.len() - pos >= lhs.len() && w.0[pos..pos + lhs.len()] == lhs[..] {
                        return Some((pos, ri));
                    }
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.0.len() {
            if let Some(cands) = self.by_first.get(&w.0[pos]) {
                for &ri in cands {
                    let lhs = &self.rules[ri].lhs.0;
                    if w.0.len() - pos >= lhs.len() && w.0[pos..pos + lhs.len()] == lhs[..] {
                        out.push((pos, ri));
                    }
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    fn rewrite_at(&self, w: &Word, c: &LaurentScalar, pos: usize, ri: usize, out: &mut Vec<(Word, LaurentScalar)>) {
        let rule = &self.rules[ri];
        let prefix = &w.0[..pos];
        let suffix = &w.0[pos + rule.lhs.0.len()..];
        for (rw, rc) in rule.rhs.terms() {
            let mut v = Vec::with_capacity(prefix.len() + rw.0.len() + suffix.len());
            v.extend_from_slice(prefix);
            v.extend_from_slice(&rw.0);
            v.extend_from_slice(suffix);
            let coeff = self.truncate_scalar(c * rc);
            if !coeff.is_zero() {
                out.push((Word(v), coeff));
            }
        }
    }

    /// Exhaustive reduction to the irreducible words of this system.
    pub fn normal_form(&self, e: &NCElement) -> NCElement {
        let mut pending: BTreeMap<Word, LaurentScalar> = BTreeMap::new();
        for (w, c) in e.terms() {
            let c = self.truncate_scalar(c.clone());
            if !c.is_zero() {
                pending.insert(w.clone(), c);
            }
        }
        let mut result = NCElement::zero();
        let mut buf = Vec::new();
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => result.add_term(w, c),
                Some((pos, ri)) => {
                    buf.clear();
                    self.rewrite_at(&w, &c, pos, ri, &mut buf);
                    for (nw, nc) in buf.drain(..) {
                        let slot = pending.entry(nw).or_default();
                        *slot += &nc;
                        if self.precision.is_some() {
                            *slot = self.truncate_scalar(std::mem::take(slot));
                        }
                    }
                }
            }
        }
        self.truncate(result)
    }

    /// Reduction choosing a random redex and a random pending term at every step.
    pub fn normal_form_randomized<R: Rng>(&self, e: &NCElement, rng: &mut R) -> NCElement {
        let mut pending: Vec<(Word, LaurentScalar)> = e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut result = NCElement::zero();
        let mut buf = Vec::new();
        while !pending.is_empty() {
            let k = rng.gen_range(0..pending.len());
            let (w, c) = pending.swap_remove(k);
            let redexes = self.all_redexes(&w);
            match redexes.choose(rng) {
                None => result.add_term(w, c),
                Some(&(pos, ri)) => {
                    buf.clear();
                    self.rewrite_at(&w, &c, pos, ri, &mut buf);
                    pending.append(&mut buf);
                }
            }
        }
        self.truncate(result)
    }

    pub fn multiply(&self, a: &NCElement, b: &NCElement) -> NCElement {
        self.normal_form(&a.mul_free(b))
    }

    pub fn commutator(&self, a: &NCElement, b: &NCElement) -> NCElement {
        self.normal_form(&a.mul_free(b).sub(&b.mul_free(a)))
    }

    /// Reports every overlap or inclusion ambiguity of total degree `<= max_degree`
    /// whose two resolutions reduce to different normal forms.
    pub fn check_confluence(&self, max_degree: usize) -> Vec<CriticalPair> {
        let mut failures = Vec::new();
        let mut probe = |word: Word, i: usize, j: usize, left: NCElement, right: NCElement| {
            let l = self.normal_form(&left);
            let r = self.normal_form(&right);
            if l != r {
                failures.push(CriticalPair { word, rules: (i, j), left: l, right: r });
            }
        };
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (a, b) = (&r1.lhs.0, &r2.lhs.0);
                // overlap: suffix of a == prefix of b
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] && a.len() + b.len() - k <= max_degree {
                        let prefix = Word(a[..a.len() - k].to_vec());
                        let suffix = Word(b[k..].to_vec());
                        let word = Word(a.iter().chain(&b[k..]).copied().collect());
                        let left = r1.rhs.mul_free(&NCElement::from_word(suffix));
                        let right = NCElement::from_word(prefix).mul_free(&r2.rhs);
                        probe(word, i, j, left, right);
                    }
                }
                // inclusion: a occurs inside b
                if i != j && a.len() <= b.len() && b.len() <= max_degree {
                    let bw = &r2.lhs;
                    for pos in 0..=b.len() - a.len() {
                        if b[pos..pos + a.len()] == a[..] {
                            let pre = NCElement::from_word(Word(b[..pos].to_vec()));
                            let post = NCElement::from_word(Word(b[pos + a.len()..].to_vec()));
                            let left = pre.mul_free(&r1.rhs).mul_free(&post);
                            probe(bw.clone(), i, j, left, r2.rhs.clone());
                        }
                    }
                }
            }
        }
        failures
    }

    /// All irreducible words of degree `<= max_degree`, ascending in the monomial order.
    pub fn basis_words(&self, max_degree: usize) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.gens.len() {
                    let mut v = w.0.clone();
                    v.push(g as u16);
                    let nw = Word(v);
                    // prefix is irreducible, so only suffixes can match
                    let reducible = self.rules.iter().any(|r| {
                        let l = &r.lhs.0;
                        l.len() <= nw.0.len() && nw.0[nw.0.len() - l.len()..] == l[..]
                    });
                    if !reducible {
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort();
        out
    }

    /// Turns a relation `r = 0` into a rule whose left side is the leading word.
    ///
    /// Without precision the leading word is the largest one and its
    /// coefficient must be a unit of `Q[q, q^-1]`. With precision `M` the
    /// leading word is the largest among terms not divisible by `q-1`.
    pub fn orient(&self, relation: &NCElement) -> Result<Option<Rule>, NcError> {
        let r = self.truncate(relation.clone());
        if r.is_zero() {
            return Ok(None);
        }
        let show = || r.display(&self.gens).to_string();
        let (lead_w, lead_c) = match self.precision {
            None => {
                let (w, c) = r.leading().unwrap();
                (w.clone(), c.clone())
            }
            Some(_) => {
                let (w, c) = r
                    .terms()
                    .rev()
                    .find(|(_, c)| c.q1_valuation() == Valuation::Finite(0))
                    .ok_or_else(|| NcError::NotOrientable(show()))?;
                (w.clone(), c.clone())
            }
        };
        let inv = match self.precision {
            None => lead_c.inverse(),
            Some(m) => lead_c.inverse_mod_q1(m),
        }
        .ok_or_else(|| NcError::NotOrientable(show()))?;
        if lead_w.is_unit() {
            return Err(NcError::NotOrientable(show()));
        }
        let mut rest = r.clone();
        rest.add_term(lead_w.clone(), -lead_c);
        let rhs = self.truncate(rest.scale(&-inv));
        Ok(Some(Rule { lhs: lead_w, rhs }))
    }

    /// Reduces a relation against the current rules and appends the oriented result.
    /// Returns `false` when the relation was already a consequence (reduced to zero).
    pub fn add_relation(&mut self, relation: &NCElement) -> Result<bool, NcError> {
        let reduced = self.normal_form(relation);
        match self.orient(&reduced)? {
            None => Ok(false),
            Some(rule) => {
                self.push_rule(rule)?;
                Ok(true)
            }
        }
    }

    /// Drops rules whose left side contains another left side (re-adding what
    /// they still say), then rewrites every right-hand side to normal form.
    pub fn interreduce(&mut self) -> Result<(), NcError> {
        while let Some(i) = (0..self.rules.len()).find(|&i| {
            let li = &self.rules[i].lhs;
            self.rules
                .iter()
                .enumerate()
                .any(|(j, r)| j != i && li.find(&r.lhs).is_some() && (r.lhs != *li || j < i))
        }) {
            let removed = self.rules.remove(i);
            self.rebuild_index();
            self.add_relation(&removed.relation())?;
        }
        let rhs: Vec<NCElement> = self.rules.iter().map(|r| self.normal_form(&r.rhs)).collect();
        for (rule, r) in self.rules.iter_mut().zip(rhs) {
            rule.rhs = r;
        }
        self.word_cache = Arc::default();
        Ok(())
    }

    fn rebuild_index(&mut self) {
        self.by_first.clear();
        for (k, r) in self.rules.iter().enumerate() {
            self.by_first.entry(r.lhs.0[0]).or_default().push(k);
        }
        self.word_cache = Arc::default();
    }

    /// Adds resolved critical pairs as new rules until no ambiguity of degree
    /// `<= max_degree` remains or `max_rounds` passes are exhausted.
    /// Returns whether the system ended confluent at that degree.
    pub fn complete(&mut self, max_degree: usize, max_rounds: usize) -> Result<bool, NcError> {
        for _ in 0..max_rounds {
            let pairs = self.check_confluence(max_degree);
            if pairs.is_empty() {
                return Ok(true);
            }
            for cp in pairs {
                self.add_relation(&cp.left.sub(&cp.right))?;
            }
            self.interreduce()?;
        }
        Ok(self.check_confluence(max_degree).is_empty())
    }

    /// Same system with every coefficient evaluated at `q = 1`.
    pub fn specialize(&self) -> Result<RewriteSystem, NcError> {
        let rules = self
            .rules
            .iter()
            .map(|r| Rule {
                lhs: r.lhs.clone(),
                rhs: r.rhs.evaluate_at_one(),
            })
            .collect();
        RewriteSystem::new(self.gens.clone(), rules)
    }

    /// Keeps all rules but changes precision (rules are re-validated).
    pub fn with_new_precision(&self, precision: Option<u32>) -> Result<RewriteSystem, NcError> {
        RewriteSystem::with_precision(self.gens.clone(), self.rules.clone(), precision)
    }

    pub fn scalar_rational(&self, c: Rational) -> NCElement {
        NCElement::scalar(LaurentScalar::constant(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gens(names: &[&str]) -> GeneratorSet {
        GeneratorSet::new(names.iter().copied()).unwrap()
    }

    fn w(ix: &[u16]) -> Word {
        Word(ix.to_vec())
    }

    fn q(e: i32) -> LaurentScalar {
        LaurentScalar::q_pow(e)
    }

    /// K*E -> q^2 E*K with K declared first.
    fn ke_system() -> RewriteSystem {
        let g = gens(&["K", "E"]);
        RewriteSystem::new(g, vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(2)) }]).unwrap()
    }

    #[test]
    fn deglex_prefers_earlier_generators() {
        assert!(w(&[0, 1]) > w(&[1, 0]));
        assert!(w(&[1, 1]) < w(&[0, 0]));
        assert!(w(&[1, 1, 1]) > w(&[0, 0]));
        assert!(Word::unit() < w(&[1]));
    }

    #[test]
    fn normal_form_examples() {
        let r = ke_system();
        let ke = NCElement::from_word(w(&[0, 1]));
        assert_eq!(r.normal_form(&ke), NCElement::term(w(&[1, 0]), q(2)));
        let ek = NCElement::from_word(w(&[1, 0]));
        assert_eq!(r.normal_form(&ek), ek);
        let kke = NCElement::from_word(w(&[0, 0, 1]));
        assert_eq!(r.normal_form(&kke), NCElement::term(w(&[1, 0, 0]), q(4)));
    }

    #[test]
    fn multiply_examples() {
        let g = gens(&["b", "a"]);
        let r = RewriteSystem::new(g, vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(-1)) }]).unwrap();
        let a = NCElement::generator(1);
        let b = NCElement::generator(0);
        assert_eq!(r.multiply(&NCElement::one(), &a), a);
        assert_eq!(r.multiply(&b, &a), NCElement::term(w(&[1, 0]), q(-1)));
        assert_eq!(r.multiply(&a, &NCElement::zero()), NCElement::zero());
    }

    #[test]
    fn commutator_examples() {
        let g = gens(&["a", "b"]);
        let r = RewriteSystem::new(g, vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(1)) }]).unwrap();
        let a = NCElement::generator(0);
        let b = NCElement::generator(1);
        assert_eq!(r.commutator(&a, &b), NCElement::term(w(&[1, 0]), LaurentScalar::q_minus_one()));
        assert!(r.commutator(&a, &a).is_zero());
        assert!(r.commutator(&NCElement::one(), &b).is_zero());
    }

    #[test]
    fn confluence_examples() {
        let g = gens(&["y", "x"]);
        let single = RewriteSystem::new(g.clone(), vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(1)) }]).unwrap();
        assert!(single.check_confluence(4).is_empty());

        // c > b > a, pairwise commuting
        let g3 = gens(&["c", "b", "a"]);
        let comm = |x: u16, y: u16| Rule { lhs: w(&[x, y]), rhs: NCElement::from_word(w(&[y, x])) };
        let three = RewriteSystem::new(g3, vec![comm(1, 2), comm(0, 1), comm(0, 2)]).unwrap();
        assert!(three.check_confluence(3).is_empty());

        let broken = RewriteSystem::new(
            g,
            vec![
                Rule { lhs: w(&[0, 1]), rhs: NCElement::from_word(w(&[1, 0])) },
                Rule { lhs: w(&[0, 1, 0]), rhs: NCElement::zero() },
            ],
        )
        .unwrap();
        assert!(!broken.check_confluence(3).is_empty());
    }

    #[test]
    fn basis_word_examples() {
        let g = gens(&["a", "b"]);
        let r = RewriteSystem::new(g.clone(), vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(1)) }]).unwrap();
        let got = r.basis_words(2);
        let mut want = vec![w(&[]), w(&[0]), w(&[1]), w(&[0, 0]), w(&[1, 0]), w(&[1, 1])];
        want.sort();
        assert_eq!(got, want);
        for d in 0..6 {
            assert_eq!(r.basis_words(d).len(), (d + 1) * (d + 2) / 2);
        }
        let free = RewriteSystem::free(gens(&["x"]));
        assert_eq!(free.basis_words(3), vec![w(&[]), w(&[0]), w(&[0, 0]), w(&[0, 0, 0])]);
        assert_eq!(r.basis_words(0), vec![Word::unit()]);
    }

    #[test]
    fn rejects_increasing_rule() {
        let g = gens(&["a", "b"]);
        let bad = RewriteSystem::new(g, vec![Rule { lhs: w(&[1, 0]), rhs: NCElement::from_word(w(&[0, 1])) }]);
        assert!(matches!(bad, Err(NcError::OrderViolation { .. })));
    }

    #[test]
    fn randomized_strategy_agrees_on_q_plane() {
        let g = gens(&["a", "b"]);
        let r = RewriteSystem::new(g, vec![Rule { lhs: w(&[0, 1]), rhs: NCElement::term(w(&[1, 0]), q(1)) }]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let e = NCElement::from_word(w(&[0, 1, 0, 1, 1, 0]));
        assert_eq!(r.normal_form(&e), r.normal_form_randomized(&e, &mut rng));
    }

    #[test]
    fn orient_picks_leading_unit_term() {
        let g = gens(&["a", "b"]);
        let sys = RewriteSystem::free(g);
        // a*b - q*b*a - b
        let rel = NCElement::from_terms([(w(&[0, 1]), q(0)), (w(&[1, 0]), -q(1)), (w(&[1]), -q(0))]);
        let rule = sys.orient(&rel).unwrap().unwrap();
        assert_eq!(rule.lhs, w(&[0, 1]));
        let nonunit = NCElement::from_terms([(w(&[0, 1]), LaurentScalar::q_minus_one()), (w(&[1]), q(0))]);
        assert!(matches!(sys.orient(&nonunit), Err(NcError::NotOrientable(_))));
        let trunc = sys.with_new_precision(Some(4)).unwrap();
        let rule = trunc.orient(&nonunit).unwrap().unwrap();
        assert_eq!(rule.lhs, w(&[1]));
    }
}
