//! Print a catalog presentation as `.alg` text and parse it back.
use qduality::catalog::{load_example, Payload};
use qduality::parse::{parse_presentation, print_presentation};

fn main() {
    let Payload::Hopf(p) = load_example("borel_sl2").unwrap().payload else { unreachable!() };
    let text = print_presentation(&p);
    print!("{text}");
    let back = parse_presentation(&text).unwrap();
    println!("# round trip equal: {}", back == p);
    match parse_presentation("generators a b c\nrelation a+b = c\n") {
        Err(e) => println!("# diagnostic: {e}"),
        Ok(_) => unreachable!(),
    }
}
