use std::fmt::Write as _;

use super::{classical_expr, lex, Cursor, Kind, ParseError};
use crate::catalog::stokes::BracketTable;

/// `coordinates x y ...` followed by one `{x, y} = expr` line per pair.
pub fn parse_bracket_table(src: &str) -> Result<BracketTable, ParseError> {
    let lines = lex(src, false)?;
    let Some(first) = lines.first() else {
        return Err(ParseError::syntax(1, 1, "end of input", "empty bracket table"));
    };
    let mut cur = Cursor::new(first);
    match cur.ident("`coordinates`")? {
        "coordinates" => {}
        _ => {
            cur.pos -= 1;
            return Err(cur.error("expected `coordinates`"));
        }
    }
    let mut names = Vec::new();
    while !cur.at_end() {
        names.push(cur.ident("a coordinate name")?.to_string());
    }
    let mut table = BracketTable::new(names.clone());
    let index = |cur: &mut Cursor<'_>| -> Result<usize, ParseError> {
        let n = cur.ident("a coordinate")?;
        names.iter().position(|x| x == n).ok_or_else(|| {
            cur.pos -= 1;
            cur.error(format!("unknown coordinate `{n}`"))
        })
    };
    for line in &lines[1..] {
        let mut cur = Cursor::new(line);
        cur.expect(Kind::LBrace, "`{`")?;
        let a = index(&mut cur)?;
        cur.expect(Kind::Comma, "`,`")?;
        let b = index(&mut cur)?;
        cur.expect(Kind::RBrace, "`}`")?;
        cur.expect(Kind::Eq, "`=`")?;
        let e = classical_expr(&mut cur, &names)?;
        cur.expect_end()?;
        if a == b {
            if !e.is_zero() {
                return Err(ParseError::validation(format!("line {}", line.no), "diagonal bracket must be zero"));
            }
            continue;
        }
        table.set(a, b, e);
    }
    Ok(table)
}

pub fn print_bracket_table(t: &BracketTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "coordinates {}", t.coordinates().join(" "));
    out.push_str(&t.render());
    out
}
