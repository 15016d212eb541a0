use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hyperfield::{RealTropVal, Sign};
use crate::valuation::{format_rational, Rational, Valuation};

use super::fval::FineValue;

/// A single monomial `coeff · t^exp` with nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub exp: Rational,
}

/// Canonical element of `ℚ[t^ℚ]`: strictly increasing exponents, nonzero
/// coefficients, zero is the empty term list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PuiseuxPoly {
    terms: Vec<Term>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// The uniformizer `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    pub fn monomial(coeff: Rational, exp: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            PuiseuxPoly {
                terms: vec![Term { coeff, exp }],
            }
        }
    }

    /// Builds the canonical form of an arbitrary (coefficient, exponent) list.
    pub fn from_terms<I: IntoIterator<Item = (Rational, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (c, e) in terms {
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        PuiseuxPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exp, coeff)| Term { coeff, exp })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of the trivially valued subfield `ℚ`.
    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.exp.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn valuation(&self) -> Valuation {
        match self.leading_term() {
            Some(t) => Valuation::Finite(t.exp.clone()),
            None => Valuation::Infinite,
        }
    }

    pub fn sign(&self) -> Sign {
        match self.leading_term() {
            None => Sign::Zero,
            Some(t) if t.coeff.is_positive() => Sign::Plus,
            Some(_) => Sign::Minus,
        }
    }

    /// The signed absolute value into the real tropical hyperfield.
    pub fn signed_value(&self) -> RealTropVal {
        RealTropVal::new(self.sign(), self.valuation())
            .expect("sign and valuation of a ring element are consistent")
    }

    /// Leading coefficient together with the valuation.
    pub fn fval(&self) -> FineValue {
        match self.leading_term() {
            None => FineValue::zero(),
            Some(t) => FineValue::new(t.coeff.clone(), t.exp.clone()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by `t^q`.
    pub fn shift(&self, q: &Rational) -> Self {
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    exp: &t.exp + q,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Least common denominator of the exponents (1 for zero).
    pub fn exponent_denominator(&self) -> num::BigInt {
        self.terms.iter().fold(num::BigInt::one(), |acc, t| {
            num::integer::lcm(acc, t.exp.denom().clone())
        })
    }
}

impl Ord for PuiseuxPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Zero => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
            Sign::Minus => Ordering::Less,
        }
    }
}

impl PartialOrd for PuiseuxPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn merge(a: &[Term], b: &[Term], negate_b: bool) -> PuiseuxPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.exp.cmp(&y.exp),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(Term {
                    coeff: fix(&b[j].coeff),
                    exp: b[j].exp.clone(),
                });
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].coeff + fix(&b[j].coeff);
                if !c.is_zero() {
                    out.push(Term {
                        coeff: c,
                        exp: a[i].exp.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    PuiseuxPoly { terms: out }
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        if self.is_zero() || rhs.is_zero() {
            return PuiseuxPoly::zero();
        }
        if rhs.terms.len() == 1 && rhs.terms[0].exp.is_zero() {
            return self.scale(&rhs.terms[0].coeff);
        }
        PuiseuxPoly::from_terms(self.terms.iter().flat_map(|x| {
            rhs.terms
                .iter()
                .map(move |y| (&x.coeff * &y.coeff, &x.exp + &y.exp))
        }))
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $m(self, rhs: PuiseuxPoly) -> PuiseuxPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PuiseuxPoly> for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $m(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        -&self
    }
}

impl Zero for PuiseuxPoly {
    fn zero() -> Self {
        PuiseuxPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PuiseuxPoly {
    fn one() -> Self {
        PuiseuxPoly::one()
    }
}

impl From<Rational> for PuiseuxPoly {
    fn from(c: Rational) -> Self {
        PuiseuxPoly::constant(c)
    }
}

impl From<i64> for PuiseuxPoly {
    fn from(n: i64) -> Self {
        PuiseuxPoly::from_int(n)
    }
}

fn format_exponent(e: &Rational) -> String {
    if e.denom().is_one() && !e.is_negative() {
        format_rational(e)
    } else {
        format!("({})", format_rational(e))
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let magnitude = t.coeff.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = if t.exp.is_zero() {
                None
            } else if t.exp.is_one() {
                Some("t".to_string())
            } else {
                Some(format!("t^{}", format_exponent(&t.exp)))
            };
            match mono {
                None => f.write_str(&format_rational(&magnitude))?,
                Some(m) if magnitude.is_one() => f.write_str(&m)?,
                Some(m) => write!(f, "{}*{}", format_rational(&magnitude), m)?,
            }
        }
        Ok(())
    }
}

impl FromStr for PuiseuxPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse_puiseux(s)
    }
}
