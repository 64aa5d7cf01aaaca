//! Text formats: presentations (`.alg`), Lie bialgebras (`.bialg`) and
//! classical bracket tables. All three are line oriented; `#` starts a
//! comment. Grammars are documented in `docs/formats.md`.

mod alg;
mod bialg;
mod table;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{LaurentScalar, Rational};
use crate::hopf::TensorElement;
use crate::mpoly::MPoly;
use crate::ncalg::{GeneratorSet, NCElement, Word};

pub use alg::{parse_presentation, print_presentation};
pub use bialg::{parse_bialgebra, print_bialgebra};
pub use table::{parse_bracket_table, print_bracket_table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message} (at `{token}`)")]
    Syntax { line: usize, column: usize, token: String, message: String },
    #[error("{context}: {message}")]
    Validation { context: String, message: String },
}

impl ParseError {
    fn syntax(line: usize, column: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, column, token: token.into(), message: message.into() }
    }

    fn validation(context: impl Into<String>, message: impl ToString) -> Self {
        ParseError::Validation { context: context.into(), message: message.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// `(x)`, the tensor separator.
    Tensor,
    Arrow,
    Eq,
    Comma,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
}

#[derive(Debug, Clone)]
struct Tok {
    kind: Kind,
    /// 1-based.
    col: usize,
    text: String,
}

/// A nonblank, comment-stripped source line.
struct Line {
    no: usize,
    text: String,
    toks: Vec<Tok>,
}

/// `tensor` enables the `(x)` separator token.
fn lex_line(no: usize, src: &str, tensor: bool) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = |kind: Kind| Tok { kind, col, text: c.to_string() };
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok { kind: Kind::Ident(s.clone()), col, text: s });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok { kind: Kind::Int(s.clone()), col, text: s });
            continue;
        }
        if tensor && c == '(' && chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') {
            out.push(Tok { kind: Kind::Tensor, col, text: "(x)".into() });
            i += 3;
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Tok { kind: Kind::Arrow, col, text: "->".into() });
            i += 2;
            continue;
        }
        let kind = match c {
            '+' => Kind::Plus,
            '-' => Kind::Minus,
            '*' => Kind::Star,
            '/' => Kind::Slash,
            '^' => Kind::Caret,
            '(' => Kind::LParen,
            ')' => Kind::RParen,
            '=' => Kind::Eq,
            ',' => Kind::Comma,
            '[' => Kind::LBracket,
            ']' => Kind::RBracket,
            '{' => Kind::LBrace,
            '}' => Kind::RBrace,
            _ => return Err(ParseError::syntax(no, col, c.to_string(), "unexpected character")),
        };
        out.push(single(kind));
        i += 1;
    }
    Ok(out)
}

fn lex(src: &str, tensor: bool) -> Result<Vec<Line>, ParseError> {
    let mut out = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        let toks = lex_line(k + 1, text, tensor)?;
        out.push(Line { no: k + 1, text: text.trim().to_string(), toks });
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Tok],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a Line) -> Self {
        let end_col = line.toks.last().map_or(1, |t| t.col + t.text.chars().count());
        Cursor { toks: &line.toks, pos: 0, line: line.no, end_col }
    }

    fn peek(&self) -> Option<&'a Kind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn eat(&mut self, k: &Kind) -> bool {
        if self.peek() == Some(k) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        match self.toks.get(self.pos) {
            Some(t) => ParseError::syntax(self.line, t.col, t.text.clone(), message),
            None => ParseError::syntax(self.line, self.end_col, "end of line", message),
        }
    }

    fn expect(&mut self, k: Kind, what: &str) -> Result<(), ParseError> {
        if self.eat(&k) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<&'a str, ParseError> {
        match self.peek() {
            Some(Kind::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Kind::Int(s)) => {
                self.pos += 1;
                Ok(s.parse().expect("lexer yields digits"))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<i32, ParseError> {
        let neg = self.eat(&Kind::Minus);
        let before = self.pos;
        let n = self.int(what)?;
        let v: i32 = n.try_into().map_err(|_| {
            self.pos = before;
            self.error("exponent out of range")
        })?;
        Ok(if neg { -v } else { v })
    }

    /// `INT ["/" INT]`, the current token being an integer.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let n = self.int("a number")?;
        if self.eat(&Kind::Slash) {
            let before = self.pos;
            let d = self.int("a denominator")?;
            if d == BigInt::from(0) {
                self.pos = before;
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// Leading sign plus separating signs of a sum: `[+|-] t { (+|-) t }`.
fn parse_sum<T>(
    cur: &mut Cursor<'_>,
    mut term: impl FnMut(&mut Cursor<'_>) -> Result<T, ParseError>,
    add: impl Fn(T, T) -> T,
    neg: impl Fn(T) -> T,
) -> Result<T, ParseError> {
    let first_neg = if cur.eat(&Kind::Minus) {
        true
    } else {
        cur.eat(&Kind::Plus);
        false
    };
    let t = term(cur)?;
    let mut acc = if first_neg { neg(t) } else { t };
    loop {
        let negate = match cur.peek() {
            Some(Kind::Plus) => false,
            Some(Kind::Minus) => true,
            _ => break,
        };
        cur.pos += 1;
        let t = term(cur)?;
        acc = add(acc, if negate { neg(t) } else { t });
    }
    Ok(acc)
}

/// Noncommutative expressions in the free algebra on `gens`.
fn nc_expr(cur: &mut Cursor<'_>, gens: &GeneratorSet) -> Result<NCElement, ParseError> {
    parse_sum(cur, |c| nc_term(c, gens), |a, b| a.add(&b), |a| a.neg())
}

fn nc_term(cur: &mut Cursor<'_>, gens: &GeneratorSet) -> Result<NCElement, ParseError> {
    let mut acc = nc_factor(cur, gens)?;
    while cur.eat(&Kind::Star) {
        acc = acc.mul_free(&nc_factor(cur, gens)?);
    }
    Ok(acc)
}

fn nc_factor(cur: &mut Cursor<'_>, gens: &GeneratorSet) -> Result<NCElement, ParseError> {
    match cur.peek() {
        Some(Kind::Int(_)) => Ok(NCElement::scalar(LaurentScalar::constant(cur.rational()?))),
        Some(Kind::LParen) => {
            cur.pos += 1;
            let e = nc_expr(cur, gens)?;
            cur.expect(Kind::RParen, "`)`")?;
            Ok(e)
        }
        Some(Kind::Ident(name)) if name == "q" => {
            cur.pos += 1;
            let e = if cur.eat(&Kind::Caret) { cur.small_int("an exponent")? } else { 1 };
            Ok(NCElement::scalar(LaurentScalar::q_pow(e)))
        }
        Some(Kind::Ident(name)) => {
            let Some(i) = gens.index_of(name) else {
                return Err(cur.error(format!("unknown generator `{name}`")));
            };
            cur.pos += 1;
            let mut k = 1;
            if cur.eat(&Kind::Caret) {
                k = cur.small_int("an exponent")?;
                if k < 0 {
                    cur.pos -= 1;
                    return Err(cur.error("negative powers of generators are not allowed"));
                }
            }
            Ok(NCElement::from_word(Word(vec![i as u16; k as usize])))
        }
        _ => Err(cur.error("expected a generator, number, `q` or `(`")),
    }
}

/// Sums of `p1 (x) p2 (x) ...` with every summand of the same arity.
fn tensor_expr(cur: &mut Cursor<'_>, gens: &GeneratorSet) -> Result<TensorElement, ParseError> {
    let mut arity = None;
    let mut term = |c: &mut Cursor<'_>| -> Result<TensorElement, ParseError> {
        let start = c.pos;
        let mut factors = vec![nc_term(c, gens)?];
        while c.eat(&Kind::Tensor) {
            factors.push(nc_term(c, gens)?);
        }
        match arity {
            None => arity = Some(factors.len()),
            Some(a) if a != factors.len() => {
                c.pos = start;
                return Err(c.error(format!("tensor summand of arity {} where {a} was expected", factors.len())));
            }
            _ => {}
        }
        Ok(tensor_of(&factors))
    };
    parse_sum(cur, &mut term, |a, b| a.add(&b), |a| a.scale(&-LaurentScalar::one()))
}

fn tensor_of(factors: &[NCElement]) -> TensorElement {
    let mut acc: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::new(), LaurentScalar::one())];
    for f in factors {
        let mut next = Vec::new();
        for (ws, c) in &acc {
            for (w, d) in f.terms() {
                let mut ws = ws.clone();
                ws.push(w.clone());
                next.push((ws, c * d));
            }
        }
        acc = next;
    }
    let mut out = TensorElement::zero(factors.len());
    for (ws, c) in acc {
        out.add_term(ws, c);
    }
    out
}

/// Commutative polynomial expressions in named variables.
fn classical_expr(cur: &mut Cursor<'_>, names: &[String]) -> Result<MPoly, ParseError> {
    parse_sum(cur, |c| classical_term(c, names), |a, b| a.add(&b), |a| a.neg())
}

fn classical_term(cur: &mut Cursor<'_>, names: &[String]) -> Result<MPoly, ParseError> {
    let mut acc = classical_factor(cur, names)?;
    while cur.eat(&Kind::Star) {
        acc = acc.mul(&classical_factor(cur, names)?);
    }
    Ok(acc)
}

fn classical_factor(cur: &mut Cursor<'_>, names: &[String]) -> Result<MPoly, ParseError> {
    let n = names.len();
    match cur.peek() {
        Some(Kind::Int(_)) => Ok(MPoly::constant(n, cur.rational()?)),
        Some(Kind::LParen) => {
            cur.pos += 1;
            let e = classical_expr(cur, names)?;
            cur.expect(Kind::RParen, "`)`")?;
            Ok(e)
        }
        Some(Kind::Ident(name)) => {
            let Some(i) = names.iter().position(|x| x == name) else {
                return Err(cur.error(format!("unknown variable `{name}`")));
            };
            cur.pos += 1;
            let e = if cur.eat(&Kind::Caret) { cur.small_int("an exponent")? } else { 1 };
            Ok(MPoly::var_pow(n, i, e))
        }
        _ => Err(cur.error("expected a variable, number or `(`")),
    }
}

/// Parses a noncommutative expression over `gens`, e.g. for `--expr`.
pub fn parse_expression(src: &str, gens: &GeneratorSet) -> Result<NCElement, ParseError> {
    let toks = lex_line(1, src, false)?;
    let line = Line { no: 1, text: src.to_string(), toks };
    let mut cur = Cursor::new(&line);
    if cur.at_end() {
        return Err(cur.error("empty expression"));
    }
    let e = nc_expr(&mut cur, gens)?;
    cur.expect_end()?;
    Ok(e)
}

/// Parses a commutative polynomial in the named variables.
pub fn parse_classical(src: &str, names: &[String]) -> Result<MPoly, ParseError> {
    let toks = lex_line(1, src, false)?;
    let line = Line { no: 1, text: src.to_string(), toks };
    let mut cur = Cursor::new(&line);
    if cur.at_end() {
        return Err(cur.error("empty expression"));
    }
    let e = classical_expr(&mut cur, names)?;
    cur.expect_end()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> GeneratorSet {
        GeneratorSet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn expressions() {
        let g = gens();
        let e = parse_expression("(q - q^-1)*a*b - 1/2*b^2 + 3", &g).unwrap();
        assert_eq!(e.display(&g).to_string(), "(-q^-1 + q)*a*b - 1/2*b*b + 3");
        assert_eq!(parse_expression(&e.display(&g).to_string(), &g).unwrap(), e);
        let err = parse_expression("a + c", &g).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { column: 5, ref token, .. } if token == "c"), "{err}");
        assert!(parse_expression("", &g).is_err());
        assert!(parse_expression("a +", &g).is_err());
        assert!(parse_expression("1/0", &g).is_err());
    }

    #[test]
    fn tensors() {
        let g = gens();
        let toks = lex_line(1, "a (x) b - (q - 1)*1 (x) a*b", true).unwrap();
        let line = Line { no: 1, text: String::new(), toks };
        let mut cur = Cursor::new(&line);
        let t = tensor_expr(&mut cur, &g).unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.len(), 2);
        let toks = lex_line(1, "a (x) b + a", true).unwrap();
        let line = Line { no: 1, text: String::new(), toks };
        assert!(tensor_expr(&mut Cursor::new(&line), &g).is_err());
    }

    #[test]
    fn classical() {
        let names = ["x", "y"].map(String::from).to_vec();
        let p = parse_classical("x*y - 2*y^2 + 1/3", &names).unwrap();
        assert_eq!(p.display(&names).to_string(), "x*y - 2*y^2 + 1/3");
        assert!(parse_classical("x*z", &names).is_err());
    }
}
