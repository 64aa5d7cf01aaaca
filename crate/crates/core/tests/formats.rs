use std::path::Path;

use qduality::catalog::{load_example, Payload};
use qduality::parse::{parse_bialgebra, parse_bracket_table, parse_presentation, print_bialgebra, print_bracket_table, print_presentation, ParseError};

fn read(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)).unwrap()
}

#[test]
fn alg_files_round_trip_and_match_catalog() {
    for name in ["fq_sl2", "fq_sl3", "borel_sl2", "abelian_toy", "lop_gl2", "lop_gl3"] {
        let text = read(&format!("{name}.alg"));
        let p = parse_presentation(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(print_presentation(&p), text, "{name}");
        let Payload::Hopf(expected) = load_example(name).unwrap().payload else { panic!("{name}") };
        assert_eq!(p, expected, "{name}");
    }
}

#[test]
fn bialg_files_round_trip_and_match_catalog() {
    for name in ["sl2_std_bialg", "sl3_std_bialg"] {
        let text = read(&format!("{name}.bialg"));
        let g = parse_bialgebra(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(print_bialgebra(&g), text, "{name}");
        let Payload::Lie(expected) = load_example(name).unwrap().payload else { panic!("{name}") };
        assert_eq!(g, expected, "{name}");
    }
}

#[test]
fn table_file_round_trips() {
    let text = read("stokes3.table");
    let t = parse_bracket_table(&text).unwrap();
    let printed = print_bracket_table(&t);
    assert!(text.ends_with(&printed));
    assert_eq!(parse_bracket_table(&printed).unwrap(), t);
}

#[test]
fn diagnostics() {
    assert!(matches!(parse_presentation(""), Err(ParseError::Syntax { .. })));
    match parse_presentation("generators a b c\nrelation a+b = c\n") {
        Err(ParseError::Validation { context, .. }) => assert!(context.contains("a+b = c")),
        other => panic!("{other:?}"),
    }
    match parse_bialgebra("dim 2\nbasis x y\nbracket [x, z] = y\n") {
        Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
    assert!(parse_bialgebra("dim 3\nbasis x y\n").is_err());
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = read("fq_sl2.alg");
    let noisy: String = text.lines().map(|l| format!("\n# note\n  {l}   # trailing\n")).collect();
    assert_eq!(parse_presentation(&noisy).unwrap(), parse_presentation(&text).unwrap());
}
