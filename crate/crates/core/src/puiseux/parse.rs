//! Literal grammar (whitespace ignored):
//!
//! ```text
//! series := ["-"] term (("+" | "-") term)*
//! term   := coeff | coeff "*" mono | mono
//! mono   := "t" | "t^" exp
//! coeff  := int | int "/" int
//! exp    := int | "-" int | "(" ["-"] int ["/" int] ")"
//! ```

use num::{BigInt, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::valuation::Rational;

use super::PuiseuxPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    /// Largest admissible common denominator of the exponents.
    pub max_denominator: u64,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_denominator: 1 << 20,
        }
    }
}

pub fn parse_puiseux(text: &str) -> Result<PuiseuxPoly> {
    parse_puiseux_with(text, &ParseOptions::default())
}

pub fn parse_puiseux_with(text: &str, options: &ParseOptions) -> Result<PuiseuxPoly> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    parser.skip_ws();
    let mut negative = parser.eat(b'-');
    loop {
        let (coeff, exp) = parser.term()?;
        let denom = exp.denom();
        if denom.to_u64().map_or(true, |d| d > options.max_denominator) {
            return Err(Error::DenominatorOverflow {
                denominator: denom.to_string(),
                bound: options.max_denominator,
            });
        }
        terms.push((if negative { -coeff } else { coeff }, exp));
        parser.skip_ws();
        if parser.eat(b'+') {
            negative = false;
        } else if parser.eat(b'-') {
            negative = true;
        } else if parser.at_end() {
            break;
        } else {
            return Err(parser.error("expected '+', '-' or end of input"));
        }
    }
    let poly = PuiseuxPoly::from_terms(terms);
    let common = poly.exponent_denominator();
    if common.to_u64().map_or(true, |d| d > options.max_denominator) {
        return Err(Error::DenominatorOverflow {
            denominator: common.to_string(),
            bound: options.max_denominator,
        });
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.bytes.len()
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
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
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string parses"))
    }

    fn fraction(&mut self) -> Result<Rational> {
        let num = self.int()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.int()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn term(&mut self) -> Result<(Rational, Rational)> {
        match self.peek() {
            Some(b't') => Ok((Rational::one(), self.mono()?)),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.fraction()?;
                if self.eat(b'*') {
                    Ok((coeff, self.mono()?))
                } else {
                    Ok((coeff, Rational::zero()))
                }
            }
            _ => Err(self.error("expected a coefficient or 't'")),
        }
    }

    fn mono(&mut self) -> Result<Rational> {
        self.expect(b't')?;
        if !self.eat(b'^') {
            return Ok(Rational::one());
        }
        if self.eat(b'(') {
            let negative = self.eat(b'-');
            let e = self.fraction()?;
            self.expect(b')')?;
            Ok(if negative { -e } else { e })
        } else if self.eat(b'-') {
            Ok(-Rational::from_integer(self.int()?))
        } else {
            Ok(Rational::from_integer(self.int()?))
        }
    }
}
