//! Command-line front end shared by the `qdp` binary and the tests.
//!
//! Exit status: 0 when every check passes, 1 when a check fails or is
//! inconclusive, 2 for usage, input and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::catalog::stokes::{stokes_bracket, verify_stokes_with, BracketTable, StokesVerification};
use crate::catalog::{self, load_example, CatalogError, Payload, CATALOG};
use crate::drinfeld::{galois_map_quantum, limit_lie_bialgebra, prime_membership, semiclassical_specialize, vee_functor, LimitKind, PrimeMembership};
use crate::hopf::HopfPresentation;
use crate::liebialg::{census, LieBialgebra, Subspace};
use crate::ncalg::NCElement;
use crate::parse::{
    parse_bialgebra, parse_bracket_table, parse_classical, parse_expression, parse_presentation, print_bialgebra,
    print_bracket_table, print_presentation, ParseError,
};
use crate::report::Report;

/// Directory holding the golden bracket tables.
pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub const STOKES_GOLDEN: &str = "stokes3.table";

#[derive(Debug, Parser)]
#[command(name = "qdp", version, about = "Presented Hopf algebras, Drinfeld functors and coisotropic Galois maps")]
pub struct Cli {
    #[command(flatten)]
    pub config: SessionConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SessionConfig {
    /// Degree bound for bounded checks.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub degree: u64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized strategies and censuses.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory of golden files.
    #[arg(long, global = true)]
    pub golden_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression (checked against a seeded random strategy).
    Nf {
        file: String,
        #[arg(long)]
        expr: String,
    },
    /// Hopf axioms on all words up to the degree bound.
    CheckHopf { file: String },
    /// Overlap ambiguities up to twice the degree bound.
    Confluence { file: String },
    /// The q = 1 limit and its Poisson bracket or cobracket.
    Semiclassical { file: String },
    /// Rescaled presentation of a quantum function algebra.
    Vee {
        file: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Bounded membership test for the (q-1)-divisibility filtration.
    PrimeTest {
        file: String,
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Quantum Galois map on an ideal given by comma-separated generators.
    Galois {
        file: String,
        #[arg(long)]
        ideal: String,
    },
    #[command(subcommand)]
    Lie(LieCommand),
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
pub enum LieCommand {
    /// Jacobi, co-Jacobi and cocycle identities.
    Check { file: String },
    /// Subalgebra, coisotropy and sub-bialgebra tests for a subspace.
    Coisotropy {
        file: String,
        #[arg(long)]
        sub: String,
    },
    /// Complementary dual and Galois composite of a subalgebra.
    Galois {
        file: String,
        #[arg(long)]
        sub: String,
    },
    /// Coordinate subalgebras of standard sl2 and sl3 plus seeded random conjugates.
    Census {
        #[arg(long, default_value_t = 100)]
        random: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Published entries.
    List,
    /// File form of an entry.
    Show { name: String },
    /// Stokes bracket for n = 3.
    Stokes3 {
        /// Compare both oracles and the golden table.
        #[arg(long)]
        verify: bool,
        /// Rewrite the golden table from both oracles.
        #[arg(long)]
        regenerate_golden: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}

/// `@name` loads a catalog entry, anything else is a file path.
fn load_presentation(arg: &str) -> Result<HopfPresentation, CliError> {
    if let Some(name) = arg.strip_prefix('@') {
        return match load_example(name)?.payload {
            Payload::Hopf(p) => Ok(p),
            _ => Err(CliError::Usage(format!("catalog entry `{name}` is not a Hopf presentation"))),
        };
    }
    parse_presentation(&read(arg)?).map_err(|source| CliError::Parse { path: arg.to_string(), source })
}

fn load_bialgebra(arg: &str) -> Result<LieBialgebra, CliError> {
    if let Some(name) = arg.strip_prefix('@') {
        return match load_example(name)?.payload {
            Payload::Lie(g) => Ok(g),
            Payload::Subgroup { ambient, .. } => Ok(ambient),
            _ => Err(CliError::Usage(format!("catalog entry `{name}` is not a Lie bialgebra"))),
        };
    }
    parse_bialgebra(&read(arg)?).map_err(|source| CliError::Parse { path: arg.to_string(), source })
}

fn expr_in(p: &HopfPresentation, text: &str) -> Result<NCElement, CliError> {
    parse_expression(text, p.generators()).map_err(|source| CliError::Parse { path: "--expr".into(), source })
}

fn subspace(g: &LieBialgebra, text: &str) -> Result<Subspace, CliError> {
    let mut rows = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let p = parse_classical(item, &g.labels).map_err(|source| CliError::Parse { path: "--sub".into(), source })?;
        let mut row = vec![crate::coeff::rat(0); g.dim()];
        for (e, c) in p.terms() {
            match e.iter().position(|&x| x == 1) {
                Some(i) if e.iter().sum::<i32>() == 1 => row[i] = c.clone(),
                _ => return Err(CliError::Usage(format!("`{}` is not a linear combination of basis labels", item.trim()))),
            }
        }
        rows.push(row);
    }
    Ok(g.subspace(rows))
}

fn canonical(op: &str, parts: &[&str]) -> String {
    let mut s = op.to_string();
    for p in parts {
        s.push('\n');
        s.push_str(p);
    }
    s
}

fn stokes_golden_text(v: &StokesVerification) -> String {
    format!(
        "# Stokes bracket, n = 3\n# oracle A (r-matrix pushforward) sha256 {}\n# oracle B (quantum semiclassical limit) sha256 {}\n{}",
        v.classical.digest(),
        v.quantum.digest(),
        print_bracket_table(&v.classical)
    )
}

fn table_json(t: &BracketTable) -> serde_json::Value {
    let names = t.coordinates();
    let mut m = serde_json::Map::new();
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            m.insert(format!("{{{}, {}}}", names[a], names[b]), json!(t.get(a, b).display(names).to_string()));
        }
    }
    serde_json::Value::Object(m)
}

/// Output of one command: a report, plus raw text printed in text mode.
struct Outcome {
    report: Report,
    text: Option<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, text: None }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = &cli.config;
    let d = cfg.degree as usize;
    match &cli.command {
        Command::Nf { file, expr } => {
            let p = load_presentation(file)?;
            let e = expr_in(&p, expr)?;
            let nf = p.normal_form(&e);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let other = p.relations().normal_form_randomized(&e, &mut rng);
            let mut r = Report::new("nf", &canonical("nf", &[&print_presentation(&p), expr]));
            r.record(
                "strategy independence",
                (other != nf).then(|| format!("random strategy gave {}", p.display_element(&other))),
            );
            r.table("normal_form", p.display_element(&nf));
            Ok(r.into())
        }
        Command::CheckHopf { file } => {
            let p = load_presentation(file)?;
            let mut r = Report::new("check-hopf", &canonical("check-hopf", &[&print_presentation(&p)]));
            r.absorb(None, &p.check_hopf_axioms(d));
            r.table("degree", d);
            Ok(r.into())
        }
        Command::Confluence { file } => {
            let p = load_presentation(file)?;
            let mut r = Report::new("confluence", &canonical("confluence", &[&print_presentation(&p)]));
            let bad = p.relations().check_confluence(2 * d);
            let g = p.generators();
            r.record(
                format!("overlaps up to degree {}", 2 * d),
                bad.first().map(|c| {
                    format!(
                        "{}: {} vs {} ({} unresolved)",
                        c.word.display(g),
                        c.left.display(g),
                        c.right.display(g),
                        bad.len()
                    )
                }),
            );
            r.table("rules", p.relations().rules().len());
            Ok(r.into())
        }
        Command::Semiclassical { file } => {
            let p = load_presentation(file)?;
            let mut r = Report::new("semiclassical", &canonical("semiclassical", &[&print_presentation(&p)]));
            match semiclassical_specialize(&p) {
                Ok(lim) => {
                    let g = lim.specialized.generators();
                    r.record(
                        "commutative or cocommutative at q = 1",
                        (lim.kind == LimitKind::Neither).then(|| "neither".to_string()),
                    );
                    r.table("kind", lim.kind);
                    let brackets: serde_json::Map<_, _> = lim
                        .brackets
                        .iter()
                        .map(|(i, j, e)| (format!("{{{}, {}}}", g.name(*i), g.name(*j)), json!(e.display(g).to_string())))
                        .collect();
                    r.table("brackets", brackets);
                    let cobrackets: serde_json::Map<_, _> = lim
                        .cobrackets
                        .iter()
                        .map(|(i, t)| (g.name(*i).to_string(), json!(t.display(g).to_string())))
                        .collect();
                    if !cobrackets.is_empty() {
                        r.table("cobrackets", cobrackets);
                    }
                }
                Err(e) => r.record("semiclassical limit", Some(e.to_string())),
            }
            Ok(r.into())
        }
        Command::Vee { file, out } => {
            let p = load_presentation(file)?;
            let mut r = Report::new("vee", &canonical("vee", &[&print_presentation(&p)]));
            match vee_functor(&p) {
                Ok(v) => {
                    let text = print_presentation(&v);
                    let kind = semiclassical_specialize(&v).map(|l| l.kind);
                    r.record(
                        "cocommutative at q = 1",
                        match &kind {
                            Ok(LimitKind::CocommutativeWithCobracket) => None,
                            Ok(k) => Some(format!("{k:?}")),
                            Err(e) => Some(e.to_string()),
                        },
                    );
                    r.table("rules", v.relations().rules().len());
                    if let Ok((lim, _)) = limit_lie_bialgebra(&v) {
                        r.table("limit_bialgebra", print_bialgebra(&lim));
                    }
                    r.table("presentation", &text);
                    if let Some(path) = out {
                        std::fs::write(path, &text)
                            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                        return Ok(r.into());
                    }
                    Ok(Outcome { report: r, text: Some(text) })
                }
                Err(e) => {
                    r.record("vee construction", Some(e.to_string()));
                    Ok(r.into())
                }
            }
        }
        Command::PrimeTest { file, expr, bound } => {
            let p = load_presentation(file)?;
            let e = expr_in(&p, expr)?;
            let bound = *bound as usize;
            let mut r = Report::new("prime-test", &canonical("prime-test", &[&print_presentation(&p), expr, &bound.to_string()]));
            let m = prime_membership(&e, &p, bound);
            r.record(
                format!("delta_n divisible by (q-1)^n for n <= {bound}"),
                match &m {
                    PrimeMembership::TrueUpTo { .. } => None,
                    PrimeMembership::False { n, witness } => Some(format!("n = {n}: {witness}")),
                },
            );
            r.table("membership", &m);
            Ok(r.into())
        }
        Command::Galois { file, ideal } => {
            let p = load_presentation(file)?;
            let gens: Vec<NCElement> = ideal
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| expr_in(&p, s))
                .collect::<Result<_, _>>()?;
            let mut r = Report::new("galois", &canonical("galois", &[&print_presentation(&p), ideal]));
            match galois_map_quantum(&p, &gens, d) {
                Ok(img) => {
                    r.absorb(Some("input"), &img.input_check);
                    r.absorb(Some("output"), &img.output_check);
                    let targets: Vec<String> = img.targets.iter().map(|t| img.vee.display_element(t)).collect();
                    r.table("targets", targets);
                }
                Err(e) => r.record("galois map", Some(e.to_string())),
            }
            Ok(r.into())
        }
        Command::Lie(cmd) => lie(cmd, cfg),
        Command::Catalog(cmd) => catalog_cmd(cmd, cfg),
    }
}

fn lie(cmd: &LieCommand, cfg: &SessionConfig) -> Result<Outcome, CliError> {
    match cmd {
        LieCommand::Check { file } => {
            let g = load_bialgebra(file)?;
            let mut r = Report::new("lie check", &canonical("lie check", &[&print_bialgebra(&g)]));
            r.absorb(None, &g.check_bialgebra());
            Ok(r.into())
        }
        LieCommand::Coisotropy { file, sub } => {
            let g = load_bialgebra(file)?;
            let k = subspace(&g, sub)?;
            let mut r = Report::new("lie coisotropy", &canonical("lie coisotropy", &[&print_bialgebra(&g), sub]));
            r.table("dim", k.dim());
            if !g.is_subalgebra(&k) {
                r.record("subalgebra", Some("not closed under the bracket".into()));
                return Ok(r.into());
            }
            r.record("subalgebra", None);
            let cois = g.is_coisotropic(&k).map_err(|e| CliError::Usage(e.to_string()))?;
            r.record("coisotropic", (!cois).then(|| "cobracket leaves k ^ g".to_string()));
            let sub_bialg = g.is_sub_bialgebra(&k).map_err(|e| CliError::Usage(e.to_string()))?;
            r.table("sub_bialgebra", sub_bialg);
            Ok(r.into())
        }
        LieCommand::Galois { file, sub } => {
            let g = load_bialgebra(file)?;
            let k = subspace(&g, sub)?;
            let mut r = Report::new("lie galois", &canonical("lie galois", &[&print_bialgebra(&g), sub]));
            if !g.is_subalgebra(&k) {
                r.record("subalgebra", Some("not closed under the bracket".into()));
                return Ok(r.into());
            }
            let err = |e: crate::liebialg::LieError| CliError::Usage(e.to_string());
            let cois = g.is_coisotropic(&k).map_err(err)?;
            let image = g.complementary_dual(&k).map_err(err)?;
            let composite = g.galois_composite(&k).map_err(err)?;
            let fixed = composite == k;
            let dual = g.dual_bialgebra();
            let image_cois = dual.is_coisotropic(&image).map_err(err)?;
            r.record(
                "coisotropic iff fixed by the Galois composite",
                (cois != fixed).then(|| format!("coisotropic = {cois}, fixed = {fixed}")),
            );
            r.record("complementary dual is coisotropic", (!image_cois).then(|| image.describe(&dual.labels).join(", ")));
            r.table("coisotropic", cois);
            r.table("fixed", fixed);
            r.table("complementary_dual", image.describe(&dual.labels));
            r.table("composite", composite.describe(&g.labels));
            Ok(r.into())
        }
        LieCommand::Census { random } => {
            let sl2 = LieBialgebra::standard_sl(2).map_err(|e| CliError::Usage(e.to_string()))?;
            let sl3 = LieBialgebra::standard_sl(3).map_err(|e| CliError::Usage(e.to_string()))?;
            let c = census(&[("sl2", &sl2), ("sl3", &sl3)], *random, cfg.seed);
            let mut r = Report::new("lie census", &canonical("lie census", &[&random.to_string(), &cfg.seed.to_string()]));
            let fx = c.fixed_point_exceptions();
            r.record(
                "coisotropic iff Galois fixed",
                fx.first().map(|e| format!("{} {} ({} exceptions)", e.ambient, e.origin, fx.len())),
            );
            let ix = c.image_exceptions();
            r.record(
                "complementary duals coisotropic",
                ix.first().map(|e| format!("{} {} ({} exceptions)", e.ambient, e.origin, ix.len())),
            );
            r.table("subalgebras", c.entries.len());
            r.table("seed", c.seed);
            Ok(r.into())
        }
    }
}

fn catalog_cmd(cmd: &CatalogCommand, cfg: &SessionConfig) -> Result<Outcome, CliError> {
    match cmd {
        CatalogCommand::List => {
            let mut r = Report::new("catalog list", "catalog list");
            let list: Vec<_> = CATALOG.iter().map(|(n, k, note)| json!({"name": n, "kind": k, "provenance": note})).collect();
            r.table("entries", list);
            let text = CATALOG.iter().map(|(n, k, _)| format!("{n:<16} {k}\n")).collect();
            Ok(Outcome { report: r, text: Some(text) })
        }
        CatalogCommand::Show { name } => {
            let e = load_example(name)?;
            let text = match &e.payload {
                Payload::Hopf(p) => print_presentation(p),
                Payload::Lie(g) => print_bialgebra(g),
                Payload::Subgroup { ambient, sub } => {
                    format!("{}# subalgebra: {}\n", print_bialgebra(ambient), sub.describe(&ambient.labels).join(", "))
                }
                Payload::Stokes { classical, .. } => print_bracket_table(classical),
            };
            let mut r = Report::new("catalog show", &canonical("catalog show", &[name]));
            r.absorb(Some("validation"), &e.validation);
            r.table("kind", e.kind);
            r.table("provenance", e.provenance);
            r.table("text", &text);
            Ok(Outcome { report: r, text: Some(text) })
        }
        CatalogCommand::Stokes3 { verify, regenerate_golden } => {
            let dir = cfg.golden_dir.clone().unwrap_or_else(default_golden_dir);
            let path = dir.join(STOKES_GOLDEN);
            let mut r = Report::new("catalog stokes3", &canonical("catalog stokes3", &[&verify.to_string()]));
            if !verify && !regenerate_golden {
                let t = stokes_bracket(3)?;
                r.record("jacobi", t.jacobi_defect().map(|(a, b, c, _)| format!("coordinates {a}, {b}, {c}")));
                r.table("bracket", table_json(&t));
                r.table("digest", t.digest());
                return Ok(r.into());
            }
            let q = catalog::stokes::quantum_stokes()?;
            let v = verify_stokes_with(&q)?;
            for e in &v.report.entries {
                r.push(e.clone());
            }
            r.table("match", v.all_match());
            r.table("oracle_a", table_json(&v.classical));
            r.table("oracle_b", table_json(&v.quantum));
            r.table("oracle_a_digest", v.classical.digest());
            r.table("oracle_b_digest", v.quantum.digest());
            let golden_text = stokes_golden_text(&v);
            if *regenerate_golden {
                std::fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
                std::fs::write(&path, &golden_text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                r.table("golden_written", path.display().to_string());
            }
            if *verify {
                let witness = match std::fs::read_to_string(&path) {
                    Err(e) => Some(format!("{}: {e}", path.display())),
                    Ok(text) => match parse_bracket_table(&text) {
                        Err(e) => Some(format!("{}: {e}", path.display())),
                        Ok(g) if g != v.classical => Some(format!("golden digest {} differs from {}", g.digest(), v.classical.digest())),
                        Ok(_) => None,
                    },
                };
                r.record("golden table", witness);
            }
            Ok(r.into())
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            if cli.config.json {
                let _ = writeln!(out, "{}", o.report.to_json());
            } else if let Some(t) = o.text {
                let _ = write!(out, "{t}");
                let _ = writeln!(err, "verdict: {}", o.report.verdict);
            } else {
                let _ = write!(out, "{}", o.report);
            }
            o.report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
