//! Rational numbers and valuations in `ℚ ∪ {∞}`.
//!
//! Magnitudes of real tropical numbers are stored additively: a multiplicative
//! absolute value `a = exp(-v)` is represented by its valuation `v`, and the
//! zero magnitude by [`Valuation::Infinite`]. Larger magnitude therefore means
//! *smaller* valuation.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Parses `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |message: &str| Error::Syntax {
        position: 0,
        message: format!("{message}: {text:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad("invalid rational numerator"))?;
    let den = BigInt::from_str(den).map_err(|_| bad("invalid rational denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of `ℚ ∪ {∞}` ordered with `∞` on top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn zero() -> Self {
        Valuation::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Valuation::Finite(integer(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    /// Valuation of a product; `∞` absorbs.
    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }

    /// Valuation of a quotient. The divisor must be finite.
    pub fn sub(&self, divisor: &Valuation) -> Valuation {
        match (self, divisor) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
            (Valuation::Infinite, Valuation::Finite(_)) => Valuation::Infinite,
            (_, Valuation::Infinite) => panic!("division by an element of infinite valuation"),
        }
    }

    pub fn neg(&self) -> Valuation {
        match self {
            Valuation::Finite(a) => Valuation::Finite(-a),
            Valuation::Infinite => panic!("negating an infinite valuation"),
        }
    }

    pub fn parse(text: &str) -> Result<Valuation> {
        let s = text.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            Ok(Valuation::Infinite)
        } else {
            parse_rational(s).map(Valuation::Finite)
        }
    }

    /// The multiplicative magnitude `exp(-v)` rendered symbolically.
    pub fn multiplicative(&self) -> String {
        match self {
            Valuation::Infinite => "0".to_string(),
            Valuation::Finite(q) if q.is_zero() => "1".to_string(),
            Valuation::Finite(q) => {
                let neg = -q;
                if neg.is_negative() || !neg.denom().is_one() {
                    format!("e^{{{}}}", format_rational(&neg))
                } else {
                    format!("e^{}", format_rational(&neg))
                }
            }
        }
    }
}

impl From<Rational> for Valuation {
    fn from(q: Rational) -> Self {
        Valuation::Finite(q)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => f.write_str(&format_rational(q)),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Valuation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Valuation::parse(s)
    }
}
