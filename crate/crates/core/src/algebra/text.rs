//! Parser for the polynomial text grammar.
//!
//! ```text
//! poly     := term (('+'|'-') term)*
//! term     := [rational] factor*
//! factor   := ('a'int | 'c'int | "c'"int | 's[' int (',' int)* ']' | 's[]' | 't[' name ']') ['^' int]
//! rational := int ['/' posint]
//! ```
//! Factors are separated by whitespace or `*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::GradedPoly;
use super::var::{Monomial, SIndex, Var, VarSpace};
use super::Rational;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_whitespace() || self.src[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.pos;
        self.digits()
            .ok_or_else(|| Error::parse(at, "expected integer"))?
            .parse()
            .map_err(|_| Error::parse(at, "integer out of range"))
    }
}

/// Parses `text` into a polynomial of `space`.
pub fn parse_poly(text: &str, space: VarSpace) -> Result<GradedPoly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    cur.skip_ws();
    let mut sign = Rational::one();
    if cur.eat(b'-') {
        sign = -sign;
    } else {
        cur.eat(b'+');
    }
    loop {
        cur.skip_ws();
        let (m, c) = parse_term(&mut cur, space)?;
        terms.push((m, c * &sign));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                sign = Rational::one();
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -Rational::one();
            }
            Some(b) => return Err(Error::parse(cur.pos, format!("unexpected '{}'", b as char))),
        }
    }
    GradedPoly::from_terms(space, terms)
}

fn parse_term(cur: &mut Cursor, space: VarSpace) -> Result<(Monomial, Rational)> {
    let start = cur.pos;
    let mut coeff = Rational::one();
    if let Some(num) = cur.digits() {
        let n: BigInt = num.parse().map_err(|_| Error::parse(start, "bad integer"))?;
        let mut d = BigInt::one();
        if cur.eat(b'/') {
            let at = cur.pos;
            let den = cur.digits().ok_or_else(|| Error::parse(at, "expected denominator"))?;
            d = den.parse().map_err(|_| Error::parse(at, "bad denominator"))?;
            if d.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
        }
        coeff = Rational::new(n, d);
    }
    let mut mono = Monomial::one();
    let mut any = cur.pos > start;
    loop {
        cur.skip_ws();
        let at = cur.pos;
        let v = match cur.peek() {
            Some(b'a') => {
                cur.pos += 1;
                Var::Torus(cur.small_int()?)
            }
            Some(b'c') => {
                cur.pos += 1;
                if cur.eat(b'\'') {
                    Var::CPrime(cur.small_int()?)
                } else {
                    Var::C(cur.small_int()?)
                }
            }
            Some(b's') => {
                cur.pos += 1;
                cur.expect(b'[')?;
                let mut exps = Vec::new();
                if !cur.eat(b']') {
                    loop {
                        exps.push(cur.small_int()?);
                        if cur.eat(b']') {
                            break;
                        }
                        cur.expect(b',')?;
                    }
                }
                Var::S(SIndex::new(exps))
            }
            Some(b't') => {
                cur.pos += 1;
                cur.expect(b'[')?;
                let s = cur.pos;
                while cur.peek().is_some_and(|b| b != b']') {
                    cur.pos += 1;
                }
                let name = String::from_utf8_lossy(&cur.src[s..cur.pos]).into_owned();
                cur.expect(b']')?;
                Var::Marker(name)
            }
            _ => break,
        };
        space
            .check(&v)
            .map_err(|e| Error::parse(at, e.to_string()))?;
        let mut e = 1;
        if cur.eat(b'^') {
            e = cur.small_int()?;
        }
        mono.mul_var(v, e);
        any = true;
    }
    if !any {
        return Err(Error::parse(start, "expected a term"));
    }
    Ok((mono, coeff))
}
