//! Validate the quantum function algebras of the catalog.
use qduality::catalog::{abelian_toy, borel_sl2, fq_sl};

fn main() {
    for p in [fq_sl(2).unwrap(), fq_sl(3).unwrap(), borel_sl2().unwrap(), abelian_toy().unwrap()] {
        let r = p.check_hopf_axioms(3);
        println!("{}: {} ({} checks)", p.name, r.verdict(), r.entries.len());
    }
    let p = fq_sl(2).unwrap();
    let a = p.generator("a").unwrap();
    println!("Delta(a) = {}", p.display_tensor(&p.coproduct(&a)));
    println!("delta_2(a) = {}", p.display_tensor(&p.delta_n(&a, 2)));
}
