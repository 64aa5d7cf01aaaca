//! The Poisson structure on 3x3 Stokes matrices and its quantization.
use qduality::catalog::stokes::{so_n_embedding_check, verify_stokes_quantization};

fn main() {
    let v = verify_stokes_quantization().unwrap();
    print!("{}", v.classical.render());
    for (pair, ok) in &v.matches {
        println!("{pair}: {}", if *ok { "match" } else { "MISMATCH" });
    }
    let q = &v.quantum;
    println!("quantum table digest {}", q.digest());
    let s = so_n_embedding_check(3).unwrap();
    println!("so3: coisotropic {}, sub-bialgebra {}", s.coisotropic, s.sub_bialgebra);
}
