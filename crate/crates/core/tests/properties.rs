use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qduality::catalog::{abelian_toy, borel_sl2, fq_sl, lops, CATALOG};
use qduality::coeff::{rat, LaurentScalar, Rational, Valuation};
use qduality::hopf::{HopfPresentation, TensorElement};
use qduality::liebialg::{LieBialgebra, Subspace};
use qduality::mpoly::MPoly;
use qduality::ncalg::{GeneratorSet, NCElement, RewriteSystem, Rule, Word};
use qduality::parse::{parse_classical, parse_expression};

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-3i32..=3, -5i64..=5), 0..4)
        .prop_map(|ts| LaurentScalar::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentScalar> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn element(ngens: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = NCElement> {
    let word = prop::collection::vec(0..ngens as u16, 0..=max_deg).prop_map(Word);
    prop::collection::vec((word, laurent()), 0..=max_terms).prop_map(NCElement::from_terms)
}

fn presentations() -> Vec<HopfPresentation> {
    vec![fq_sl(2).unwrap(), borel_sl2().unwrap(), abelian_toy().unwrap(), lops::l_operators(2).unwrap()]
}

/// `(id (x) Delta) Delta(e)`, built factor by factor.
fn coassoc_right(p: &HopfPresentation, e: &NCElement) -> TensorElement {
    let mut out = TensorElement::zero(3);
    for (fs, c) in p.coproduct(e).terms() {
        let d = p.coproduct(&NCElement::from_word(fs[1].clone()));
        for (ds, dc) in d.terms() {
            out.add_term(vec![fs[0].clone(), ds[0].clone(), ds[1].clone()], c * dc);
        }
    }
    out.normalize(p.relations())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuation_is_additive(f in nonzero_laurent(), g in nonzero_laurent()) {
        let (Valuation::Finite(a), Valuation::Finite(b)) = (f.q1_valuation(), g.q1_valuation()) else { panic!() };
        prop_assert_eq!((&f * &g).q1_valuation(), Valuation::Finite(a + b));
    }

    #[test]
    fn division_by_q1_inverts_multiplication(f in laurent(), n in 0u32..4) {
        let g = &f * &LaurentScalar::q_minus_one_pow(n);
        let back = g.divide_by_q1(n).unwrap();
        prop_assert_eq!(&(&back * &LaurentScalar::q_minus_one_pow(n)), &g);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn value_at_one_detects_valuation_zero(f in nonzero_laurent()) {
        let nonzero = !num_traits::Zero::is_zero(&f.evaluate_at_one());
        prop_assert_eq!(nonzero, f.q1_valuation() == Valuation::Finite(0));
    }

    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, LaurentScalar::zero());
    }

    #[test]
    fn scalar_text_round_trips(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentScalar>().unwrap(), a);
    }

    #[test]
    fn normal_form_idempotent_and_strategy_free(e in element(4, 3, 4), seed in any::<u64>()) {
        let p = fq_sl(2).unwrap();
        let nf = p.normal_form(&e);
        prop_assert_eq!(&p.normal_form(&nf), &nf);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(&p.relations().normal_form_randomized(&e, &mut rng), &nf);
    }

    #[test]
    fn multiplication_is_associative(a in element(4, 2, 3), b in element(4, 2, 3), c in element(4, 2, 3)) {
        let p = fq_sl(2).unwrap();
        prop_assert_eq!(p.multiply(&p.multiply(&a, &b), &c), p.multiply(&a, &p.multiply(&b, &c)));
    }

    #[test]
    fn coassociativity_and_counit(which in 0usize..4, e in element(6, 2, 3)) {
        let p = presentations().swap_remove(which);
        let n = p.generators().len() as u16;
        let e = NCElement::from_terms(e.terms().map(|(w, c)| (Word(w.0.iter().map(|g| g % n).collect()), c.clone())));
        prop_assert_eq!(p.iterated_coproduct(&e, 3), coassoc_right(&p, &e));
        let nf = p.normal_form(&e);
        let mut left = NCElement::zero();
        let mut right = NCElement::zero();
        for (fs, c) in p.coproduct(&e).terms() {
            let l = NCElement::from_word(fs[1].clone()).scale(&(c * &p.counit(&NCElement::from_word(fs[0].clone()))));
            let r = NCElement::from_word(fs[0].clone()).scale(&(c * &p.counit(&NCElement::from_word(fs[1].clone()))));
            left = left.add(&l);
            right = right.add(&r);
        }
        prop_assert_eq!(p.normal_form(&left), nf.clone());
        prop_assert_eq!(p.normal_form(&right), nf);
    }

    #[test]
    fn counit_is_multiplicative(a in element(4, 2, 3), b in element(4, 2, 3)) {
        let p = fq_sl(2).unwrap();
        prop_assert_eq!(p.counit(&p.multiply(&a, &b)), &p.counit(&a) * &p.counit(&b));
    }

    #[test]
    fn expressions_print_and_reparse(e in element(4, 3, 4)) {
        let p = fq_sl(2).unwrap();
        let text = e.display(p.generators()).to_string();
        prop_assert_eq!(parse_expression(&text, p.generators()).unwrap(), e);
    }

    #[test]
    fn mpoly_leibniz_and_reparse(a in mpoly(), b in mpoly(), i in 0usize..3) {
        let lhs = a.mul(&b).derivative(i);
        let rhs = a.derivative(i).mul(&b).add(&a.mul(&b.derivative(i)));
        prop_assert_eq!(lhs, rhs);
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let text = a.display(&names).to_string();
        prop_assert_eq!(parse_classical(&text, &names).unwrap(), a);
    }

    #[test]
    fn orthogonal_is_an_involution(rows in subspace_rows(8)) {
        let g = LieBialgebra::standard_sl(3).unwrap();
        let k = g.subspace(rows);
        let perp = k.orthogonal();
        prop_assert_eq!(perp.dim() + k.dim(), g.dim());
        prop_assert_eq!(perp.orthogonal(), k);
    }

    #[test]
    fn generated_subalgebra_is_a_closure(a in subspace_rows(8), b in subspace_rows(8)) {
        let g = LieBialgebra::standard_sl(3).unwrap();
        let s = g.subspace(a);
        let t = s.sum(&g.subspace(b));
        let cs = g.generated_subalgebra(&s);
        prop_assert!(s.is_within(&cs));
        prop_assert!(g.is_subalgebra(&cs));
        prop_assert_eq!(g.generated_subalgebra(&cs), cs.clone());
        prop_assert!(cs.is_within(&g.generated_subalgebra(&t)));
    }
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0i32..3, 3), -4i64..=4), 0..4).prop_map(|ts| {
        let mut p = MPoly::zero(3);
        for (e, c) in ts {
            p.add_term(e, rat(c));
        }
        p
    })
}

fn subspace_rows(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(rat), n), 0..4)
}

#[test]
fn q_plane_count_law() {
    let gens = GeneratorSet::new(["a", "b"]).unwrap();
    let ab = NCElement::from_word(Word(vec![1, 0])).scale(&LaurentScalar::q());
    let sys = RewriteSystem::new(gens, vec![Rule { lhs: Word(vec![0, 1]), rhs: ab }]).unwrap();
    for d in 0..8 {
        assert_eq!(sys.basis_words(d).len(), (d + 1) * (d + 2) / 2, "degree {d}");
    }
}

#[test]
fn group_like_generators_follow_delta_recursion() {
    let mut seen = 0;
    for p in presentations() {
        for i in 0..p.generators().len() {
            let x = NCElement::generator(i);
            if p.coproduct(&x) != TensorElement::tensor2(&x, &x) {
                continue;
            }
            seen += 1;
            let centered = x.sub(&NCElement::one());
            for n in 1..=3 {
                let mut expected = TensorElement::from_element(&centered);
                for _ in 1..n {
                    let mut next = TensorElement::zero(expected.arity() + 1);
                    for (fs, c) in expected.terms() {
                        for (w, d) in centered.terms() {
                            let mut f = fs.clone();
                            f.push(w.clone());
                            next.add_term(f, c * d);
                        }
                    }
                    expected = next;
                }
                assert_eq!(p.delta_n(&x, n), expected.normalize(p.relations()), "{} {n}", p.name);
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn coisotropy_matches_dual_subalgebra_criterion() {
    let g = LieBialgebra::standard_sl(2).unwrap();
    let dual = g.dual_bialgebra();
    // every subspace of sl2 spanned by vectors with entries in {-1, 0, 1}
    let vals = [rat(-1), rat(0), rat(1)];
    let mut vecs = Vec::new();
    for a in &vals {
        for b in &vals {
            for c in &vals {
                vecs.push(vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    let mut checked = 0;
    for u in &vecs {
        for v in &vecs {
            let k = Subspace::new(3, vec![u.clone(), v.clone()]);
            if !g.is_subalgebra(&k) {
                continue;
            }
            checked += 1;
            assert_eq!(g.is_coisotropic(&k).unwrap(), dual.is_subalgebra(&k.orthogonal()), "{:?}", k.basis());
        }
    }
    assert!(checked > 20);
}

#[test]
fn catalog_names_are_unique() {
    let mut names: Vec<_> = CATALOG.iter().map(|(n, _, _)| *n).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), CATALOG.len());
}
