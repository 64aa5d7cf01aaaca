//! Coisotropic subalgebras of sl3 and the Galois correspondence.
use qduality::liebialg::{census, coordinate_subalgebras, LieBialgebra};

fn main() {
    let g = LieBialgebra::standard_sl(3).unwrap();
    let dual = g.dual_bialgebra();
    for (ix, k) in coordinate_subalgebras(&g).into_iter().take(12) {
        let cois = g.is_coisotropic(&k).unwrap();
        let image = g.complementary_dual(&k).unwrap();
        let fixed = g.galois_composite(&k).unwrap() == k;
        println!(
            "{:<24} coisotropic {cois:<5} fixed {fixed:<5} image dim {}",
            k.describe(&g.labels).join(","),
            image.dim()
        );
        assert_eq!(cois, fixed, "{ix:?}");
        assert!(dual.is_coisotropic(&image).unwrap());
    }
    let sl2 = LieBialgebra::standard_sl(2).unwrap();
    let c = census(&[("sl2", &sl2), ("sl3", &g)], 100, 1);
    println!("census: {} subalgebras, {} exceptions", c.entries.len(), c.fixed_point_exceptions().len());
}
