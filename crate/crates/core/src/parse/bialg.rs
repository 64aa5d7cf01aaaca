use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::{lex, parse_sum, Cursor, Kind, ParseError};
use crate::coeff::Rational;
use crate::liebialg::LieBialgebra;

/// Sparse linear combination; index pairs stand for wedges in cobrackets.
type Combo<K> = Vec<(K, Rational)>;

fn coefficient(cur: &mut Cursor<'_>) -> Result<Rational, ParseError> {
    if matches!(cur.peek(), Some(Kind::Int(_))) {
        let c = cur.rational()?;
        cur.expect(Kind::Star, "`*`")?;
        return Ok(c);
    }
    Ok(Rational::one())
}

fn label(cur: &mut Cursor<'_>, labels: &[String]) -> Result<usize, ParseError> {
    let name = cur.ident("a basis label")?;
    labels.iter().position(|l| l == name).ok_or_else(|| {
        cur.pos -= 1;
        cur.error(format!("unknown basis label `{name}`"))
    })
}

fn is_zero_literal(cur: &Cursor<'_>) -> bool {
    cur.toks.len() - cur.pos == 1 && matches!(cur.peek(), Some(Kind::Int(s)) if s == "0")
}

fn combo<K: Clone>(
    cur: &mut Cursor<'_>,
    mut item: impl FnMut(&mut Cursor<'_>) -> Result<K, ParseError>,
) -> Result<Combo<K>, ParseError> {
    if is_zero_literal(cur) {
        cur.pos += 1;
        return Ok(Vec::new());
    }
    parse_sum(
        cur,
        |c| {
            let k = coefficient(c)?;
            Ok(vec![(item(c)?, k)])
        },
        |mut a, b| {
            a.extend(b);
            a
        },
        |a| a.into_iter().map(|(k, c)| (k, -c)).collect(),
    )
}

/// Parses a `.bialg` file. Omitted brackets and cobrackets are zero.
pub fn parse_bialgebra(src: &str) -> Result<LieBialgebra, ParseError> {
    let lines = lex(src, false)?;
    if lines.is_empty() {
        return Err(ParseError::syntax(1, 1, "end of input", "empty bialgebra file"));
    }
    let mut dim: Option<(usize, usize)> = None;
    let mut g: Option<LieBialgebra> = None;
    for line in &lines {
        let mut cur = Cursor::new(line);
        match cur.ident("a statement keyword")? {
            "dim" => {
                let n = cur.int("a dimension")?;
                let n: usize = n.try_into().map_err(|_| cur.error("dimension out of range"))?;
                dim = Some((n, line.no));
            }
            "basis" => {
                let mut labels: Vec<String> = Vec::new();
                while !cur.at_end() {
                    let l = cur.ident("a basis label")?;
                    if labels.iter().any(|x| x == l) {
                        cur.pos -= 1;
                        return Err(cur.error(format!("duplicate label `{l}`")));
                    }
                    labels.push(l.to_string());
                }
                if let Some((n, no)) = dim {
                    if n != labels.len() {
                        return Err(ParseError::validation(
                            format!("line {}", line.no),
                            format!("basis has {} labels but line {no} declares dim {n}", labels.len()),
                        ));
                    }
                }
                g = Some(LieBialgebra::abelian(labels));
            }
            "bracket" => {
                let Some(alg) = g.as_mut() else { return Err(cur.error("`basis` must come first")) };
                let labels = alg.labels.clone();
                cur.expect(Kind::LBracket, "`[`")?;
                let i = label(&mut cur, &labels)?;
                cur.expect(Kind::Comma, "`,`")?;
                let j = label(&mut cur, &labels)?;
                cur.expect(Kind::RBracket, "`]`")?;
                cur.expect(Kind::Eq, "`=`")?;
                let terms = combo(&mut cur, |c| label(c, &labels))?;
                if i == j {
                    return Err(ParseError::validation(format!("line {}", line.no), "bracket of a label with itself is zero"));
                }
                let mut v = alg.bracket_of_basis(i, j).to_vec();
                for (k, c) in terms {
                    v[k] += c;
                }
                alg.set_bracket(i, j, v);
            }
            "cobracket" => {
                let Some(alg) = g.as_mut() else { return Err(cur.error("`basis` must come first")) };
                let labels = alg.labels.clone();
                match cur.ident("`d`")? {
                    "d" => {}
                    _ => {
                        cur.pos -= 1;
                        return Err(cur.error("expected `d`"));
                    }
                }
                cur.expect(Kind::LParen, "`(`")?;
                let i = label(&mut cur, &labels)?;
                cur.expect(Kind::RParen, "`)`")?;
                cur.expect(Kind::Eq, "`=`")?;
                let terms = combo(&mut cur, |c| {
                    let j = label(c, &labels)?;
                    c.expect(Kind::Caret, "`^`")?;
                    let k = label(c, &labels)?;
                    Ok((j, k))
                })?;
                for ((j, k), c) in terms {
                    if j == k {
                        continue;
                    }
                    let v = alg.cobracket_coeff(i, j, k) + &c;
                    alg.set_cobracket(i, j, k, v);
                }
            }
            _ => {
                cur.pos -= 1;
                return Err(cur.error("unknown statement"));
            }
        }
        cur.expect_end()?;
    }
    let g = g.ok_or_else(|| ParseError::syntax(lines.last().map_or(1, |l| l.no + 1), 1, "end of input", "missing `basis`"))?;
    if let Some((n, no)) = dim {
        if n != g.dim() {
            return Err(ParseError::validation(format!("line {no}"), "dim does not match the basis"));
        }
    }
    Ok(g)
}

fn write_combo(out: &mut String, terms: &[(String, Rational)]) {
    if terms.is_empty() {
        out.push('0');
        return;
    }
    for (k, (item, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            let _ = write!(out, "{mag}*");
        }
        out.push_str(item);
    }
}

/// Canonical `.bialg` text.
pub fn print_bialgebra(g: &LieBialgebra) -> String {
    let n = g.dim();
    let l = &g.labels;
    let mut out = String::new();
    let _ = writeln!(out, "dim {n}");
    let _ = writeln!(out, "basis {}", l.join(" "));
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<_> = (0..n)
                .filter(|&k| !g.bracket_coeff(i, j, k).is_zero())
                .map(|k| (l[k].clone(), g.bracket_coeff(i, j, k).clone()))
                .collect();
            if !terms.is_empty() {
                let _ = write!(out, "bracket [{}, {}] = ", l[i], l[j]);
                write_combo(&mut out, &terms);
                out.push('\n');
            }
        }
    }
    for i in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                let c = g.cobracket_coeff(i, j, k);
                if !c.is_zero() {
                    terms.push((format!("{}^{}", l[j], l[k]), c.clone()));
                }
            }
        }
        if !terms.is_empty() {
            let _ = write!(out, "cobracket d({}) = ", l[i]);
            write_combo(&mut out, &terms);
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for n in 2..=3 {
            let mut g = LieBialgebra::standard_sl(n).unwrap();
            let text = print_bialgebra(&g);
            let back = parse_bialgebra(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
            g.matrices = None;
            assert_eq!(back, g, "{text}");
            assert_eq!(print_bialgebra(&back), text);
        }
    }

    #[test]
    fn small_file() {
        let src = "dim 2\nbasis x y\nbracket [y, x] = -1/2*y + 0*x\ncobracket d(x) = 2*y^x\n";
        let g = parse_bialgebra(src).unwrap();
        assert_eq!(g.bracket_coeff(0, 1, 1), &Rational::new(1.into(), 2.into()));
        assert_eq!(g.cobracket_coeff(0, 0, 1), &Rational::from_integer((-2).into()));
        assert!(parse_bialgebra("dim 3\nbasis x y\n").is_err());
        assert!(matches!(parse_bialgebra("basis x\nbracket [x, z] = x\n"), Err(ParseError::Syntax { line: 2, column: 13, .. })));
    }
}
