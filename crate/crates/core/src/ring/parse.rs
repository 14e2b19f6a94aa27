//! Text forms: `3*x^2*y - y + 1`, lists `[f, g]`, matrices `[[x, y],[0, x*y]]`.

use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

/// A parse failure at a byte column (0-based) of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
}

type PResult<T> = std::result::Result<T, SyntaxError>;

struct Cursor<'s> {
    text: &'s str,
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(SyntaxError { column: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn number(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos].parse::<u64>().or_else(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    fn ident(&mut self) -> PResult<&'s str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += self.peek_raw().unwrap().len_utf8();
        }
        if start == self.pos {
            self.err("expected variable")
        } else {
            Ok(&self.text[start..self.pos])
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn expr(ring: &PolyRing, cur: &mut Cursor) -> PResult<Polynomial> {
    let mut acc = Polynomial::zero();
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let t = term(ring, cur)?;
        acc = if negative { ring.sub(&acc, &t) } else { ring.add(&acc, &t) };
        match cur.peek() {
            Some('+') | Some('-') => continue,
            _ => break,
        }
    }
    Ok(acc)
}

fn term(ring: &PolyRing, cur: &mut Cursor) -> PResult<Polynomial> {
    let mut acc = factor(ring, cur)?;
    while cur.eat('*') {
        let f = factor(ring, cur)?;
        acc = ring.mul(&acc, &f);
    }
    Ok(acc)
}

fn factor(ring: &PolyRing, cur: &mut Cursor) -> PResult<Polynomial> {
    let base = match cur.peek() {
        Some('(') => {
            cur.expect('(')?;
            let e = expr(ring, cur)?;
            cur.expect(')')?;
            e
        }
        Some(c) if c.is_ascii_digit() => {
            let n = cur.number()?;
            let p = ring.field().characteristic() as u64;
            ring.constant((n % p) as u32)
        }
        Some(c) if c.is_alphabetic() => {
            let start = cur.pos;
            let name = cur.ident()?;
            match ring.variable_index(name) {
                Some(i) => ring.term(1, Monomial::var(ring.nvars(), i)),
                None => {
                    cur.pos = start;
                    return cur.err(format!("unknown variable `{name}`"));
                }
            }
        }
        _ => return cur.err("expected coefficient, variable or `(`"),
    };
    if cur.eat('^') {
        let e = cur.number()?;
        let e = u32::try_from(e).or_else(|_| cur.err("exponent too large"))?;
        Ok(ring.pow(&base, e))
    } else {
        Ok(base)
    }
}

fn poly_list(ring: &PolyRing, cur: &mut Cursor) -> PResult<Vec<Polynomial>> {
    cur.expect('[')?;
    let mut out = Vec::new();
    if cur.eat(']') {
        return Ok(out);
    }
    loop {
        out.push(expr(ring, cur)?);
        if cur.eat(']') {
            return Ok(out);
        }
        cur.expect(',')?;
    }
}

fn finish<T>(cur: &mut Cursor, value: T) -> PResult<T> {
    if cur.at_end() {
        Ok(value)
    } else {
        cur.err("unexpected trailing input")
    }
}

pub fn parse_polynomial(ring: &PolyRing, text: &str) -> PResult<Polynomial> {
    let mut cur = Cursor { text, pos: 0 };
    let p = expr(ring, &mut cur)?;
    finish(&mut cur, p)
}

pub fn parse_polynomial_list(ring: &PolyRing, text: &str) -> PResult<Vec<Polynomial>> {
    let mut cur = Cursor { text, pos: 0 };
    let p = poly_list(ring, &mut cur)?;
    finish(&mut cur, p)
}

/// Parses a matrix as a list of rows. `[]` is the empty matrix and `[[],[]]`
/// has two rows and no columns.
pub fn parse_matrix_rows(ring: &PolyRing, text: &str) -> PResult<Vec<Vec<Polynomial>>> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect('[')?;
    let mut rows = Vec::new();
    if !cur.eat(']') {
        loop {
            let start = cur.pos;
            let row = poly_list(ring, &mut cur)?;
            if let Some(first) = rows.first() {
                let first: &Vec<Polynomial> = first;
                if first.len() != row.len() {
                    cur.pos = start;
                    return cur.err("rows of unequal length");
                }
            }
            rows.push(row);
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
    }
    finish(&mut cur, rows)
}
