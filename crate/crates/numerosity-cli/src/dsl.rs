//! Recursive-descent parser for the point-set expression DSL.
//!
//! ```text
//! expr  := term (('|' | '&' | '\') term)*        union / intersection / difference
//! term  := atom ('*' atom)*                      concatenation product
//! atom  := '{' tuple (',' tuple)* '}'
//!        | 'N^' int | 'diag(' int ')'
//!        | 'evens' | 'odds' | 'squares' | 'affine(' a ',' b ')'
//!        | 'perm(' expr ',' spec ')'
//!        | 'copy(' expr ',' m ',' h ',' n ',' k ')'
//!        | '(' expr ')'
//! tuple := '(' int (',' int)* ')'
//! spec  := arity ':' pos (',' pos)* (';' arity ':' pos (',' pos)*)*
//! ```
//!
//! The set operators share one precedence level and associate to the left;
//! `*` binds tighter. Printing an expression (its `Display`) yields a
//! string this parser maps back to the same tree.

use std::fmt;

use numerosity_core::counting::Chain;
use numerosity_core::pointset::{
    FinitePointSet, MonotoneMap, PermutationSpec, PointSetExpr,
};
use numerosity_core::Tuple;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, msg: impl fmt::Display) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            // keywords must not run into a longer identifier
            let after = self.bytes.get(self.pos + word.len());
            if !matches!(after, Some(c) if c.is_ascii_alphanumeric()) {
                self.pos += word.len();
                return true;
            }
        }
        false
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }

    fn small_integer(&mut self) -> Result<u32, ParseError> {
        let v = self.integer()?;
        u32::try_from(v).map_err(|_| self.error("value out of range"))
    }
}

/// Parses a complete expression; trailing input is an error. The result is
/// validated (finitary certificate derivable, permutation specs bijective).
pub fn parse_expr(text: &str) -> Result<PointSetExpr, ParseError> {
    let mut cur = Cursor::new(text);
    let expr = expression(&mut cur)?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    expr.validate().map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })?;
    Ok(expr)
}

fn expression(cur: &mut Cursor<'_>) -> Result<PointSetExpr, ParseError> {
    let mut left = term(cur)?;
    loop {
        match cur.peek() {
            Some(b'|') => {
                cur.pos += 1;
                left = PointSetExpr::union(left, term(cur)?);
            }
            Some(b'&') => {
                cur.pos += 1;
                left = PointSetExpr::intersection(left, term(cur)?);
            }
            Some(b'\\') => {
                cur.pos += 1;
                left = PointSetExpr::difference(left, term(cur)?);
            }
            _ => return Ok(left),
        }
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<PointSetExpr, ParseError> {
    let mut left = atom(cur)?;
    while cur.peek() == Some(b'*') {
        cur.pos += 1;
        left = PointSetExpr::product(left, atom(cur)?);
    }
    Ok(left)
}

fn atom(cur: &mut Cursor<'_>) -> Result<PointSetExpr, ParseError> {
    match cur.peek() {
        Some(b'{') => finite_set(cur),
        Some(b'(') => {
            cur.pos += 1;
            let inner = expression(cur)?;
            cur.expect(b')')?;
            Ok(inner)
        }
        Some(b'N') => {
            cur.pos += 1;
            cur.expect(b'^')?;
            let d = cur.small_integer()?;
            Ok(PointSetExpr::FullSpace(d))
        }
        Some(_) => keyword_atom(cur),
        None => Err(cur.error("expected an expression")),
    }
}

fn keyword_atom(cur: &mut Cursor<'_>) -> Result<PointSetExpr, ParseError> {
    if cur.eat_keyword("diag") {
        cur.expect(b'(')?;
        let d = cur.small_integer()?;
        cur.expect(b')')?;
        return Ok(PointSetExpr::Diagonal(d));
    }
    if cur.eat_keyword("evens") {
        return Ok(PointSetExpr::MonotoneImage(MonotoneMap::evens()));
    }
    if cur.eat_keyword("odds") {
        return Ok(PointSetExpr::MonotoneImage(MonotoneMap::odds()));
    }
    if cur.eat_keyword("squares") {
        return Ok(PointSetExpr::MonotoneImage(MonotoneMap::Squares));
    }
    if cur.eat_keyword("affine") {
        cur.expect(b'(')?;
        let slope = cur.integer()?;
        cur.expect(b',')?;
        let offset = cur.integer()?;
        cur.expect(b')')?;
        return Ok(PointSetExpr::MonotoneImage(MonotoneMap::Affine {
            slope,
            offset,
        }));
    }
    if cur.eat_keyword("perm") {
        cur.expect(b'(')?;
        let inner = expression(cur)?;
        cur.expect(b',')?;
        let spec = permutation_spec(cur)?;
        cur.expect(b')')?;
        return PointSetExpr::permute_transform(inner, spec)
            .map_err(|e| cur.error(e.to_string()));
    }
    if cur.eat_keyword("copy") {
        cur.expect(b'(')?;
        let inner = expression(cur)?;
        cur.expect(b',')?;
        let m = cur.integer()?;
        cur.expect(b',')?;
        let h = cur.small_integer()?;
        cur.expect(b',')?;
        let n = cur.integer()?;
        cur.expect(b',')?;
        let k = cur.small_integer()?;
        cur.expect(b')')?;
        return Ok(PointSetExpr::shifted_copy(inner, m, h, n, k));
    }
    Err(cur.error("expected an atom: a finite set, N^d, diag(d), evens, odds, squares, affine(a,b), perm(..), copy(..) or a parenthesized expression"))
}

fn finite_set(cur: &mut Cursor<'_>) -> Result<PointSetExpr, ParseError> {
    cur.expect(b'{')?;
    let mut tuples = Vec::new();
    loop {
        tuples.push(tuple(cur)?);
        match cur.peek() {
            Some(b',') => cur.pos += 1,
            Some(b'}') => {
                cur.pos += 1;
                return Ok(PointSetExpr::Finite(FinitePointSet::from_tuples(tuples)));
            }
            _ => return Err(cur.error("expected ',' or '}' in a finite set")),
        }
    }
}

fn tuple(cur: &mut Cursor<'_>) -> Result<Tuple, ParseError> {
    cur.expect(b'(')?;
    let mut entries = vec![cur.integer()?];
    loop {
        match cur.peek() {
            Some(b',') => {
                cur.pos += 1;
                entries.push(cur.integer()?);
            }
            Some(b')') => {
                cur.pos += 1;
                return Tuple::new(entries).map_err(|e| cur.error(e.to_string()));
            }
            _ => return Err(cur.error("expected ',' or ')' in a tuple")),
        }
    }
}

/// `spec := arity ':' positions (';' arity ':' positions)*`
fn permutation_spec(cur: &mut Cursor<'_>) -> Result<PermutationSpec, ParseError> {
    let mut spec = PermutationSpec::identity();
    loop {
        let arity = cur.small_integer()?;
        cur.expect(b':')?;
        let mut positions = vec![cur.small_integer()?];
        while cur.peek() == Some(b',') {
            cur.pos += 1;
            positions.push(cur.small_integer()?);
        }
        spec = spec.with_arity(arity, positions);
        if cur.peek() == Some(b';') {
            cur.pos += 1;
        } else {
            return Ok(spec);
        }
    }
}

/// Parses a standalone permutation spec (used by the axiom catalog).
pub fn parse_permutation_spec(text: &str) -> Result<PermutationSpec, ParseError> {
    let mut cur = Cursor::new(text);
    let spec = permutation_spec(&mut cur)?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    spec.check().map_err(|arity| cur.error(format!(
        "permutation spec for arity {arity} is not a bijection"
    )))?;
    Ok(spec)
}

/// `identity` or `perm:<comma-separated prefix>`, e.g. `perm:0,2,4`.
pub fn parse_chain(text: &str) -> Result<Chain, ParseError> {
    if text == "identity" {
        return Ok(Chain::identity());
    }
    if let Some(list) = text.strip_prefix("perm:") {
        let mut prefix = Vec::new();
        for (i, part) in list.split(',').enumerate() {
            let value = part.trim().parse::<u64>().map_err(|_| ParseError {
                pos: i,
                msg: format!("bad chain entry `{part}`"),
            })?;
            prefix.push(value);
        }
        return Chain::with_prefix(prefix).map_err(|e| ParseError {
            pos: 0,
            msg: e.to_string(),
        });
    }
    Err(ParseError {
        pos: 0,
        msg: format!("unknown chain `{text}`; use `identity` or `perm:<comma list>`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use numerosity_core::catalog;

    #[test]
    fn parses_the_grammar() {
        let e = parse_expr("N^2 \\ diag(2)").unwrap();
        assert_eq!(
            e,
            PointSetExpr::difference(PointSetExpr::FullSpace(2), PointSetExpr::Diagonal(2))
        );

        let e = parse_expr("evens | odds").unwrap();
        assert_eq!(e, PointSetExpr::union(catalog::evens(), catalog::odds()));

        let e = parse_expr("{(1,2),(1,2,3)} * {(3,4,5),(4,5)}").unwrap();
        assert!(matches!(e, PointSetExpr::Product(..)));

        let e = parse_expr("affine(3,1)").unwrap();
        assert_eq!(
            e,
            PointSetExpr::MonotoneImage(MonotoneMap::Affine { slope: 3, offset: 1 })
        );

        let e = parse_expr("copy(N^1, 1, 2, 2, 3)").unwrap();
        assert!(matches!(e, PointSetExpr::ShiftedCopy { .. }));

        let e = parse_expr("perm(N^3, 3:2,0,1)").unwrap();
        assert!(matches!(e, PointSetExpr::Permute(..)));

        // operators associate left at one precedence level; '*' binds tighter
        let e = parse_expr("evens | odds & N^1").unwrap();
        assert_eq!(
            e,
            PointSetExpr::intersection(
                PointSetExpr::union(catalog::evens(), catalog::odds()),
                catalog::naturals()
            )
        );
        let e = parse_expr("evens | diag(2) * N^1").unwrap();
        assert_eq!(
            e,
            PointSetExpr::union(
                catalog::evens(),
                PointSetExpr::product(PointSetExpr::Diagonal(2), catalog::naturals())
            )
        );
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_expr("N^2 \\").unwrap_err();
        assert_eq!(err.pos, 5);

        let err = parse_expr("diag(0)").unwrap_err();
        assert!(err.msg.contains("arity"));

        let err = parse_expr("{(1,2) (3)}").unwrap_err();
        assert_eq!(err.pos, 7);

        assert!(parse_expr("perm(N^2, 2:0,0)").is_err());
        assert!(parse_expr("N^2 junk").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for (_, expr) in catalog::standard() {
            let printed = expr.to_string();
            let reparsed = parse_expr(&printed).unwrap();
            assert_eq!(reparsed, expr, "round trip failed for `{printed}`");
        }
        // a nested composite
        let text = "copy((evens | odds) & N^1, 1, 2, 2, 1) * {(7)}";
        let expr = parse_expr(text).unwrap();
        assert_eq!(parse_expr(&expr.to_string()).unwrap(), expr);
    }

    #[test]
    fn chain_specs() {
        assert_eq!(parse_chain("identity").unwrap(), Chain::identity());
        assert_eq!(
            parse_chain("perm:0,2,4").unwrap(),
            Chain::with_prefix(vec![0, 2, 4]).unwrap()
        );
        assert!(parse_chain("perm:2,2").is_err());
        assert!(parse_chain("bogus").is_err());
    }
}
