//! Text form of monomial ideals: `ideal(x^2, x*y^4) in [x,y]`.
//!
//! The leading `ideal` keyword is optional, `1` denotes the unit monomial and
//! `0` contributes nothing, so `ideal(0) in [x]` is the zero ideal. Inputs
//! starting with `{` are read as the JSON form instead.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let first = rest.chars().next()?;
        if !(first.is_alphabetic() || first == '_') {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        rest[..len]
            .parse()
            .map_err(|_| self.error_at(start, "exponent out of range"))
    }
}

/// A generator as written: `(position, [(variable, exponent)])`, or `None`
/// for the literal `0`.
type RawTerm<'a> = (usize, Option<Vec<(usize, &'a str, u32)>>);

fn term<'a>(c: &mut Cursor<'a>) -> Result<RawTerm<'a>> {
    c.skip_ws();
    let start = c.pos;
    if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        return match c.number()? {
            0 => Ok((start, None)),
            1 => Ok((start, Some(Vec::new()))),
            _ => Err(c.error_at(start, "only the constants 0 and 1 are allowed")),
        };
    }
    let mut factors = Vec::new();
    loop {
        let (at, name) = c.ident().ok_or_else(|| c.error("expected a variable"))?;
        let exp = if c.eat('^') { c.number()? } else { 1 };
        factors.push((at, name, exp));
        if !c.eat('*') {
            break;
        }
    }
    Ok((start, Some(factors)))
}

/// Parses the text form of an ideal.
pub fn parse_ideal_text(src: &str) -> Result<MonomialIdeal> {
    let mut c = Cursor { src, pos: 0 };
    let save = c.pos;
    match c.ident() {
        Some((_, "ideal")) => {}
        Some((at, _)) => return Err(c.error_at(at, "expected '(' or 'ideal'")),
        None => c.pos = save,
    }
    c.expect('(')?;
    let mut terms = Vec::new();
    if !c.eat(')') {
        loop {
            terms.push(term(&mut c)?);
            if c.eat(')') {
                break;
            }
            c.expect(',')?;
        }
    }
    match c.ident() {
        Some((_, "in")) => {}
        _ => return Err(c.error("expected 'in'")),
    }
    c.expect('[')?;
    let mut names = Vec::new();
    if !c.eat(']') {
        loop {
            let (at, name) = c
                .ident()
                .ok_or_else(|| c.error("expected a variable name"))?;
            if names.iter().any(|(_, n)| *n == name) {
                return Err(c.error_at(at, format!("duplicate variable {name:?}")));
            }
            names.push((at, name));
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.skip_ws();
    if c.pos != src.len() {
        return Err(c.error("trailing input"));
    }

    let ring = RingContext::new(names.iter().map(|(_, n)| n.to_string()))?;
    let dim = ring.dim();
    let mut gens = Vec::new();
    for (_, factors) in terms {
        let Some(factors) = factors else { continue };
        let mut e = vec![0u32; dim];
        for (at, name, exp) in factors {
            let i = ring
                .index_of(name)
                .ok_or_else(|| c.error_at(at, format!("variable {name:?} is not in the ring")))?;
            e[i] = e[i]
                .checked_add(exp)
                .ok_or_else(|| c.error_at(at, "exponent out of range"))?;
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(ring, gens)
}

/// Parses either the JSON form or the text form of an ideal.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    if src.trim_start().starts_with('{') {
        serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    } else {
        parse_ideal_text(src)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        let i = parse_ideal("ideal(x^2, x*y^4) in [x,y]").unwrap();
        assert_eq!(i.to_string(), "ideal(x^2, x*y^4) in [x,y]");
        let j = parse_ideal("(x1*x2,x1*x3,x2*x3) in [x1,x2,x3]").unwrap();
        assert_eq!(j.generators().len(), 3);
        assert!(parse_ideal("(1) in [x]").unwrap().is_unit());
        assert!(parse_ideal("ideal(0) in [x,y]").unwrap().is_zero());
        assert!(parse_ideal("() in [x]").unwrap().is_zero());
        assert_eq!(
            parse_ideal("(x*x) in [x]").unwrap(),
            parse_ideal("(x^2) in [x]").unwrap()
        );
    }

    #[test]
    fn round_trips() {
        for s in [
            "ideal(x^2, x*y^4) in [x,y]",
            "ideal(0) in [a]",
            "ideal(1) in [a,b]",
        ] {
            let i = parse_ideal(s).unwrap();
            assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
            let json = serde_json::to_string(&i).unwrap();
            assert_eq!(parse_ideal(&json).unwrap(), i);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let pos = |s: &str| match parse_ideal(s) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(pos("(x, z) in [x,y]"), (1, 5));
        assert_eq!(pos("(x^) in [x]"), (1, 4));
        assert_eq!(pos("(x)\nin [x,,y]"), (2, 7));
        assert_eq!(pos("(x) in [x] extra"), (1, 12));
        assert_eq!(pos("(2) in [x]"), (1, 2));
        assert_eq!(pos("(x) in [x, x]"), (1, 12));
        assert!(matches!(
            parse_ideal("{\"variables\":[\"x\"]"),
            Err(Error::Parse { .. })
        ));
    }
}
