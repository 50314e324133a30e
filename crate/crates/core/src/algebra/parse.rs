//! Polynomial text grammar:
//!
//! ```text
//! poly     := ["+" | "-"] term (("+" | "-") term)*
//! term     := rational | [rational "*"] factor ("*" factor)*
//! factor   := name ["^" integer]
//! rational := integer ["/" integer]
//! ```
//!
//! Names may end in primes (`x'`, `y''`). Factors are multiplied left to
//! right, so `y'*y` parses to `-y*y'` for odd `y`, `y'`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::{FreeAlgebra, Polynomial};
use super::{AlgebraError, Rational};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
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

    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn name(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.pos += 1,
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        while self.peek() == Some('\'') {
            self.pos += 1;
        }
        Some(&self.text[start..self.pos])
    }

    fn rational(&mut self) -> Result<Option<Rational>, AlgebraError> {
        let Some(numer) = self.digits() else {
            return Ok(None);
        };
        let numer: BigInt = numer.parse().expect("digits parse");
        if self.eat('/') {
            let at = self.pos;
            let denom: BigInt = self
                .digits()
                .ok_or_else(|| self.error("expected denominator"))?
                .parse()
                .expect("digits parse");
            if denom.is_zero() {
                return Err(AlgebraError::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            return Ok(Some(Rational::new(numer, denom)));
        }
        Ok(Some(Rational::from_integer(numer)))
    }
}

pub fn parse_polynomial(text: &str, algebra: &FreeAlgebra) -> Result<Polynomial, AlgebraError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut result = Polynomial::zero(algebra.len());
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.error("empty polynomial"));
            }
            break;
        }
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.error("expected '+' or '-'"));
        };
        first = false;
        let term = parse_term(&mut cur, algebra)?;
        let term = if negative {
            term.scale(&-Rational::one())
        } else {
            term
        };
        result = result.add(&term)?;
    }
    Ok(result)
}

fn parse_term(cur: &mut Cursor<'_>, algebra: &FreeAlgebra) -> Result<Polynomial, AlgebraError> {
    let mut product = Polynomial::monomial(algebra.unit());
    if let Some(c) = cur.rational()? {
        product = product.scale(&c);
        if !cur.eat('*') {
            return Ok(product);
        }
    }
    loop {
        let at = {
            cur.skip_ws();
            cur.pos
        };
        let name = cur
            .name()
            .ok_or_else(|| cur.error("expected generator name"))?;
        let index = algebra
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator {
                name: name.to_string(),
                position: at,
            })?;
        let exponent = if cur.eat('^') {
            let digits = cur.digits().ok_or_else(|| cur.error("expected exponent"))?;
            digits
                .parse::<u32>()
                .ok()
                .filter(|&e| e >= 1)
                .ok_or_else(|| cur.error("exponent must be a positive integer"))?
        } else {
            1
        };
        let factor = algebra
            .power(index, exponent)
            .ok_or_else(|| AlgebraError::OddPower {
                name: name.to_string(),
                exponent,
                position: at,
            })?;
        product = algebra.multiply(&product, &Polynomial::monomial(factor))?;
        if !cur.eat('*') {
            break;
        }
    }
    Ok(product)
}
