//! Arithmetic in Q[q, q^-1] and the (q-1)-adic valuation.
use qduality::coeff::LaurentScalar;

fn main() {
    let f: LaurentScalar = "q^2 - 1".parse().unwrap();
    let g: LaurentScalar = "q - 2 + q^-1".parse().unwrap();
    println!("f = {f}, valuation {}", f.q1_valuation());
    println!("g = {g}, valuation {}", g.q1_valuation());
    println!("f*g = {}", &f * &g);
    println!("f / (q-1) = {}", f.divide_by_q1(1).unwrap());
    println!("g at q = 1: {}", g.evaluate_at_one());
}
