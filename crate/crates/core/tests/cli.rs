use std::path::{Path, PathBuf};
use std::process::Command;

use qduality::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn qdp(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qdp").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn qdp_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = qdp(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

fn validator() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qdp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_hopf_passes_on_data_file() {
    let (code, v) = qdp_json(&["check-hopf", &data("fq_sl2.alg")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["operation"], "check-hopf");
}

#[test]
fn prime_test_witness_and_rescaled_element() {
    let (code, v) = qdp_json(&["prime-test", "@abelian_toy", "--expr", "t", "--bound", "4"]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["tables"]["membership"]["n"], 1, "{v}");
}

#[test]
fn prime_test_on_vee_of_toy() {
    let out = scratch("toy_v.alg");
    let (code, _, err) = qdp(&["vee", "@abelian_toy", "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let f = out.to_str().unwrap();
    assert_eq!(qdp(&["prime-test", f, "--expr", "t_v"]).0, 1);
    assert_eq!(qdp(&["prime-test", f, "--expr", "(q-1)*t_v"]).0, 0);
}

#[test]
fn stokes_verify_matches() {
    let (code, v) = qdp_json(&["catalog", "stokes3", "--verify"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["tables"]["match"], true);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(qdp(&["frobnicate"]).0, 2);
    assert_eq!(qdp(&["check-hopf"]).0, 2);
    assert_eq!(qdp(&["check-hopf", "/nonexistent/file.alg"]).0, 2);
    assert_eq!(qdp(&["check-hopf", "@nosuch"]).0, 2);
    assert_eq!(qdp(&["--degree", "0", "check-hopf", "@fq_sl2"]).0, 2);
    let empty = scratch("empty.alg");
    std::fs::write(&empty, "").unwrap();
    let (code, _, err) = qdp(&["check-hopf", empty.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(qdp(&["nf", "@fq_sl2", "--expr", "a*zz"]).0, 2);
    assert_eq!(qdp(&["--help"]).0, 0);
}

#[test]
fn reports_validate_against_schema() {
    let v = validator();
    let cases: Vec<Vec<&str>> = vec![
        vec!["check-hopf", "@borel_sl2"],
        vec!["confluence", "@fq_sl2"],
        vec!["semiclassical", "@fq_sl2"],
        vec!["vee", "@fq_sl2"],
        vec!["nf", "@fq_sl2", "--expr", "d*a"],
        vec!["prime-test", "@abelian_toy", "--expr", "t"],
        vec!["galois", "@fq_sl2", "--ideal", "c"],
        vec!["lie", "check", "@sl3_std_bialg"],
        vec!["lie", "coisotropy", "@sl2_std_bialg", "--sub", "e,h"],
        vec!["lie", "galois", "@sl2_std_bialg", "--sub", "h"],
        vec!["lie", "census", "--random", "5"],
        vec!["catalog", "list"],
        vec!["catalog", "show", "so3_in_sl3"],
        vec!["catalog", "stokes3"],
    ];
    for args in cases {
        let (_, report) = qdp_json(&args);
        let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn text_and_json_verdicts_agree() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["check-hopf", "@fq_sl2"],
        vec!["prime-test", "@abelian_toy", "--expr", "t"],
        vec!["lie", "coisotropy", "@sl3_std_bialg", "--sub", "E12,E13"],
        vec!["lie", "galois", "@sl2_std_bialg", "--sub", "e+f"],
        vec!["galois", "@fq_sl2", "--ideal", "c"],
    ];
    for args in cases {
        let (text_code, out, err) = qdp(&args);
        let (json_code, v) = qdp_json(&args);
        assert_eq!(text_code, json_code, "{args:?}");
        let verdict = v["verdict"].as_str().unwrap();
        let shown = format!("{out}{err}");
        assert!(shown.contains(&format!("verdict: {verdict}")), "{args:?}: {shown}");
    }
}

#[test]
fn json_is_deterministic_under_seed() {
    for args in [
        vec!["--seed", "17", "lie", "census", "--random", "20"],
        vec!["--seed", "5", "nf", "@fq_sl3", "--expr", "t33*t11*t21"],
        vec!["semiclassical", "@lop_gl2"],
    ] {
        let a = qdp(&[&["--json"], args.as_slice()].concat());
        let b = qdp(&[&["--json"], args.as_slice()].concat());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn coisotropy_of_so3() {
    let (code, v) = qdp_json(&["lie", "coisotropy", "@sl3_std_bialg", "--sub", "E12-E21,E13-E31,E23-E32"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["tables"]["sub_bialgebra"], false);
}

#[test]
fn vee_reports_limit_bialgebra() {
    let (code, v) = qdp_json(&["vee", "@borel_sl2"]);
    assert_eq!(code, 0);
    let lim = v["tables"]["limit_bialgebra"].as_str().unwrap();
    assert!(lim.contains("bracket [b_v, d_v] = b_v"), "{lim}");
}

#[test]
fn binary_matches_library_entry_point() {
    let exe = env!("CARGO_BIN_EXE_qdp");
    let o = Command::new(exe).args(["--json", "check-hopf", "@fq_sl2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let (_, lib_out, _) = qdp(&["--json", "check-hopf", "@fq_sl2"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), lib_out);
    let o = Command::new(exe).args(["catalog", "bogus"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
