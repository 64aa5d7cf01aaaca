use std::fmt::Write as _;

use super::{lex, nc_expr, tensor_expr, Cursor, Kind, Line, ParseError};
use crate::coeff::LaurentScalar;
use crate::hopf::{HopfPresentation, Role, TensorElement};
use crate::ncalg::{GeneratorSet, NCElement, RewriteSystem, Rule};

#[derive(Default)]
struct Draft {
    name: Option<String>,
    role: Option<Role>,
    dimension: Option<usize>,
    precision: Option<u32>,
    gens: Option<GeneratorSet>,
    rules: Vec<(Rule, String)>,
    defining: Vec<NCElement>,
    counit: Vec<Option<LaurentScalar>>,
    coproduct: Vec<Option<TensorElement>>,
    antipode: Vec<Option<NCElement>>,
}

fn gens_or_err<'a>(d: &'a Draft, cur: &Cursor<'_>) -> Result<&'a GeneratorSet, ParseError> {
    d.gens.as_ref().ok_or_else(|| cur.error("`generators` must come before this statement"))
}

fn small_number(cur: &mut Cursor<'_>, what: &str) -> Result<u64, ParseError> {
    let before = cur.pos;
    let n = cur.int(what)?;
    n.try_into().map_err(|_| {
        cur.pos = before;
        cur.error("number out of range")
    })
}

/// `g ->` for the per-generator sections; returns the generator index.
fn target(cur: &mut Cursor<'_>, gens: &GeneratorSet) -> Result<usize, ParseError> {
    let name = cur.ident("a generator name")?;
    let i = gens.index_of(name).ok_or_else(|| {
        cur.pos -= 1;
        cur.error(format!("unknown generator `{name}`"))
    })?;
    cur.expect(Kind::Arrow, "`->`")?;
    Ok(i)
}

fn statement(d: &mut Draft, line: &Line) -> Result<(), ParseError> {
    let mut cur = Cursor::new(line);
    let keyword = cur.ident("a statement keyword")?;
    match keyword {
        "algebra" => d.name = Some(cur.ident("an algebra name")?.to_string()),
        "role" => {
            d.role = Some(match cur.ident("a role")? {
                "function_algebra" => Role::FunctionAlgebra,
                "enveloping" => Role::Enveloping,
                "unspecified" => Role::Unspecified,
                _ => {
                    cur.pos -= 1;
                    return Err(cur.error("role must be function_algebra, enveloping or unspecified"));
                }
            })
        }
        "dimension" => d.dimension = Some(small_number(&mut cur, "a dimension")? as usize),
        "precision" => {
            let m = small_number(&mut cur, "a precision")?;
            if m == 0 || m > u32::MAX as u64 {
                cur.pos -= 1;
                return Err(cur.error("precision must be positive"));
            }
            d.precision = Some(m as u32);
        }
        "generators" => {
            if d.gens.is_some() {
                cur.pos -= 1;
                return Err(cur.error("generators declared twice"));
            }
            let mut names = Vec::new();
            while !cur.at_end() {
                let name = cur.ident("a generator name")?;
                if name == "q" {
                    cur.pos -= 1;
                    return Err(cur.error("`q` is reserved for the ring parameter"));
                }
                names.push(name.to_string());
            }
            if names.is_empty() {
                return Err(cur.error("expected at least one generator"));
            }
            let gens = GeneratorSet::new(names).map_err(|e| ParseError::validation(format!("line {}", line.no), e))?;
            let n = gens.len();
            d.gens = Some(gens);
            d.counit = vec![None; n];
            d.coproduct = vec![None; n];
            d.antipode = vec![None; n];
        }
        "relation" => {
            let gens = gens_or_err(d, &cur)?;
            let lhs = nc_expr(&mut cur, gens)?;
            cur.expect(Kind::Eq, "`=`")?;
            let rhs = nc_expr(&mut cur, gens)?;
            cur.expect_end()?;
            let context = format!("relation `{}` on line {}", line.text.trim_start_matches("relation").trim(), line.no);
            let mut terms = lhs.terms();
            let word = match (terms.next(), terms.next()) {
                (Some((w, c)), None) if c.is_one() && !w.is_unit() => w.clone(),
                _ => return Err(ParseError::validation(context, "left-hand side must be a single word with coefficient 1")),
            };
            d.rules.push((Rule { lhs: word, rhs }, context));
        }
        "defining" => {
            let gens = gens_or_err(d, &cur)?;
            let lhs = nc_expr(&mut cur, gens)?;
            cur.expect(Kind::Eq, "`=`")?;
            let rhs = nc_expr(&mut cur, gens)?;
            cur.expect_end()?;
            d.defining.push(lhs.sub(&rhs));
        }
        "counit" => {
            let gens = gens_or_err(d, &cur)?.clone();
            let i = target(&mut cur, &gens)?;
            let start = cur.pos;
            let e = nc_expr(&mut cur, &gens)?;
            cur.expect_end()?;
            let mut terms = e.terms();
            let c = match (terms.next(), terms.next()) {
                (None, _) => LaurentScalar::zero(),
                (Some((w, c)), None) if w.is_unit() => c.clone(),
                _ => {
                    cur.pos = start;
                    return Err(cur.error("counit value must be a scalar"));
                }
            };
            d.counit[i] = Some(c);
        }
        "coproduct" => {
            let gens = gens_or_err(d, &cur)?.clone();
            let i = target(&mut cur, &gens)?;
            let t = tensor_expr(&mut cur, &gens)?;
            cur.expect_end()?;
            if t.arity() != 2 && !t.is_zero() {
                return Err(ParseError::validation(format!("line {}", line.no), "coproduct must have two tensor factors"));
            }
            d.coproduct[i] = Some(if t.is_zero() { TensorElement::zero(2) } else { t });
        }
        "antipode" => {
            let gens = gens_or_err(d, &cur)?.clone();
            let i = target(&mut cur, &gens)?;
            let e = nc_expr(&mut cur, &gens)?;
            cur.expect_end()?;
            d.antipode[i] = Some(e);
        }
        _ => {
            cur.pos -= 1;
            return Err(cur.error("unknown statement"));
        }
    }
    cur.expect_end()
}

fn missing<T: Clone>(v: &[Option<T>], gens: &GeneratorSet, what: &str) -> Result<Vec<T>, ParseError> {
    v.iter()
        .enumerate()
        .map(|(i, x)| x.clone().ok_or_else(|| ParseError::validation(format!("generator `{}`", gens.name(i)), format!("missing {what}"))))
        .collect()
}

/// Parses a `.alg` presentation file.
pub fn parse_presentation(src: &str) -> Result<HopfPresentation, ParseError> {
    let lines = lex(src, true)?;
    if lines.is_empty() {
        return Err(ParseError::syntax(1, 1, "end of input", "empty presentation"));
    }
    let mut d = Draft::default();
    for line in &lines {
        statement(&mut d, line)?;
    }
    let last = lines.last().expect("nonempty");
    let gens = d
        .gens
        .clone()
        .ok_or_else(|| ParseError::syntax(last.no + 1, 1, "end of input", "missing `generators` statement"))?;
    let mut sys = RewriteSystem::with_precision(gens.clone(), Vec::new(), d.precision).expect("empty rule set is valid");
    for (rule, context) in std::mem::take(&mut d.rules) {
        sys.push_rule(rule).map_err(|e| ParseError::validation(context, e))?;
    }
    let counit = missing(&d.counit, &gens, "counit")?;
    let coproduct = missing(&d.coproduct, &gens, "coproduct")?;
    let antipode = missing(&d.antipode, &gens, "antipode")?;
    let name = d.name.unwrap_or_else(|| "unnamed".to_string());
    let mut p = HopfPresentation::new(name.clone(), sys, counit, coproduct, antipode)
        .map_err(|e| ParseError::validation(format!("algebra `{name}`"), e))?;
    if let Some(r) = d.role {
        p = p.with_role(r);
    }
    if let Some(k) = d.dimension {
        p = p.with_dimension(k);
    }
    if !d.defining.is_empty() {
        p = p.with_defining_relations(d.defining);
    }
    Ok(p)
}

/// Canonical `.alg` text; parses back to an equal presentation.
pub fn print_presentation(p: &HopfPresentation) -> String {
    let g = p.generators();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", p.name);
    let role = match p.role {
        Role::FunctionAlgebra => "function_algebra",
        Role::Enveloping => "enveloping",
        Role::Unspecified => "unspecified",
    };
    let _ = writeln!(out, "role {role}");
    if let Some(k) = p.dimension_hint {
        let _ = writeln!(out, "dimension {k}");
    }
    if let Some(m) = p.relations().precision() {
        let _ = writeln!(out, "precision {m}");
    }
    let _ = writeln!(out, "generators {}", g.names().join(" "));
    for r in p.relations().rules() {
        let _ = writeln!(out, "relation {} = {}", r.lhs.display(g), r.rhs.display(g));
    }
    if let Some(defs) = p.explicit_defining_relations() {
        for e in defs {
            let _ = writeln!(out, "defining {} = 0", e.display(g));
        }
    }
    for i in 0..g.len() {
        let _ = writeln!(out, "counit {} -> {}", g.name(i), p.generator_counit(i));
    }
    for i in 0..g.len() {
        let _ = writeln!(out, "coproduct {} -> {}", g.name(i), p.display_tensor(p.generator_coproduct(i)));
    }
    for i in 0..g.len() {
        let _ = writeln!(out, "antipode {} -> {}", g.name(i), p.display_element(p.generator_antipode(i)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian_toy, borel_sl2, fq_sl};

    #[test]
    fn round_trips() {
        for p in [fq_sl(2).unwrap(), fq_sl(3).unwrap(), borel_sl2().unwrap(), abelian_toy().unwrap()] {
            let text = print_presentation(&p);
            let back = parse_presentation(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
            assert_eq!(back, p, "{text}");
            assert_eq!(back.name, p.name);
            assert_eq!(print_presentation(&back), text);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_presentation(""), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_presentation("# only a comment\n"), Err(ParseError::Syntax { .. })));
        let src = "generators a b c\nrelation a+b = c\n";
        match parse_presentation(src) {
            Err(ParseError::Validation { context, .. }) => assert!(context.contains("a+b = c"), "{context}"),
            other => panic!("{other:?}"),
        }
        let src = "generators a b\nrelation b*a = a*b\n";
        assert!(matches!(parse_presentation(src), Err(ParseError::Validation { .. })));
        let src = "generators a\ncounit a -> 1\ncoproduct a -> a (x) 1 + 1 (x)\n";
        match parse_presentation(src) {
            Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 31)),
            other => panic!("{other:?}"),
        }
        let src = "generators a\ncounit a -> 0\ncoproduct a -> a (x) 1 + 1 (x) a\n";
        match parse_presentation(src) {
            Err(ParseError::Validation { context, message }) => {
                assert_eq!(context, "generator `a`");
                assert_eq!(message, "missing antipode");
            }
            other => panic!("{other:?}"),
        }
    }
}
