//! Rescale a function algebra, read off its q = 1 limit, and test the
//! prime image on rescaled generators.
use qduality::catalog::fq_sl;
use qduality::drinfeld::{centered_generator, limit_lie_bialgebra, prime_membership, semiclassical_specialize, vee_functor};
use qduality::parse::print_bialgebra;

fn main() {
    let p = fq_sl(2).unwrap();
    let lim = semiclassical_specialize(&p).unwrap();
    println!("{} at q = 1: {:?}", p.name, lim.kind);
    for (i, j, b) in &lim.brackets {
        let g = lim.specialized.generators();
        println!("  {{{}, {}}} = {}", g.name(*i), g.name(*j), b.display(g));
    }
    let v = vee_functor(&p).unwrap();
    println!("{}: {} rules", v.name, v.relations().rules().len());
    let (g, _) = limit_lie_bialgebra(&v).unwrap();
    print!("{}", print_bialgebra(&g));
    for i in 0..v.generators().len() {
        let m = prime_membership(&centered_generator(i), &v, 4);
        println!("(q-1)*{}: {m:?}", v.generators().name(i));
    }
}
