//! Normal forms, confluence and a PBW-type basis for the quantum plane.
use qduality::coeff::LaurentScalar;
use qduality::ncalg::{GeneratorSet, NCElement, RewriteSystem, Rule, Word};
use qduality::parse::parse_expression;

fn main() {
    let gens = GeneratorSet::new(["a", "b"]).unwrap();
    let rule = Rule { lhs: Word(vec![0, 1]), rhs: NCElement::term(Word(vec![1, 0]), LaurentScalar::q()) };
    let sys = RewriteSystem::new(gens.clone(), vec![rule]).unwrap();
    let e = parse_expression("a*a*b + (q-1)*a*b*a", &gens).unwrap();
    println!("{}  ->  {}", e.display(&gens), sys.normal_form(&e).display(&gens));
    println!("unresolved overlaps up to degree 6: {}", sys.check_confluence(6).len());
    for d in 0..4 {
        println!("basis words of degree <= {d}: {}", sys.basis_words(d).len());
    }
}
