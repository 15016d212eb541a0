use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::valuation::{Rational, Valuation};

use super::{Hyperfield, Sign};

/// Element of the real tropical hyperfield ℝ𝕋: a sign together with a
/// magnitude in valuation form. Zero is `(0, ∞)` and nothing else has sign 0.
///
/// The derived `Ord` is a storage order used for sorting and deduplication;
/// the order of the underlying real numbers is [`RealTropVal::real_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealTropVal {
    sign: Sign,
    val: Valuation,
}

impl RealTropVal {
    pub fn new(sign: Sign, val: Valuation) -> Result<Self> {
        if (sign == Sign::Zero) != val.is_infinite() {
            return Err(Error::Invalid(format!(
                "sign {sign} is inconsistent with valuation {val}"
            )));
        }
        Ok(RealTropVal { sign, val })
    }

    pub fn plus(val: Rational) -> Self {
        RealTropVal {
            sign: Sign::Plus,
            val: Valuation::Finite(val),
        }
    }

    pub fn minus(val: Rational) -> Self {
        RealTropVal {
            sign: Sign::Minus,
            val: Valuation::Finite(val),
        }
    }

    /// Nonzero element with the given sign (which must not be zero) and finite valuation.
    pub fn signed(sign: Sign, val: Rational) -> Self {
        assert!(sign != Sign::Zero, "signed() needs a nonzero sign");
        RealTropVal {
            sign,
            val: Valuation::Finite(val),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn val(&self) -> &Valuation {
        &self.val
    }

    /// Comparison of the represented real numbers `sgn · exp(-val)`.
    pub fn real_cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                Sign::Zero => Ordering::Equal,
                Sign::Plus => other.val.cmp(&self.val),
                Sign::Minus => self.val.cmp(&other.val),
            },
            ord => ord,
        }
    }

    /// Quotient `self / other`; `other` must be nonzero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::Invalid("division by zero".into()))?;
        Ok(self.mul(&inv))
    }

    /// Parses the compact form `s:v`, e.g. `+:1/2`, `-:0`, `0:inf`.
    pub fn parse_pair(text: &str) -> Result<Self> {
        let (s, v) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Invalid(format!("expected sign:valuation, got {text:?}")))?;
        RealTropVal::new(Sign::parse(s)?, Valuation::parse(v)?)
    }

    pub fn to_pair_string(&self) -> String {
        format!("{}:{}", self.sign, self.val)
    }

    /// Symbolic multiplicative rendering, e.g. `+e^{-1/2}`, `-1`, `0`.
    pub fn multiplicative(&self) -> String {
        match self.sign {
            Sign::Zero => "0".to_string(),
            s => format!("{}{}", s, self.val.multiplicative()),
        }
    }
}

impl fmt::Display for RealTropVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sign, self.val)
    }
}

impl Hyperfield for RealTropVal {
    const TAG: &'static str = "RT";
    const IDEMPOTENT: bool = true;

    fn zero() -> Self {
        RealTropVal {
            sign: Sign::Zero,
            val: Valuation::Infinite,
        }
    }
    fn one() -> Self {
        RealTropVal {
            sign: Sign::Plus,
            val: Valuation::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }
    fn mul(&self, other: &Self) -> Self {
        RealTropVal {
            sign: self.sign * other.sign,
            val: self.val.add(&other.val),
        }
    }
    fn neg(&self) -> Self {
        RealTropVal {
            sign: -self.sign,
            val: self.val.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        self.val.finite().map(|q| RealTropVal {
            sign: self.sign,
            val: Valuation::Finite(-q),
        })
    }
    fn valuation(&self) -> Valuation {
        self.val.clone()
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    sign: String,
    val: String,
}

impl Serialize for RealTropVal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            sign: self.sign.to_string(),
            val: self.val.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealTropVal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Form {
            Object(Wire),
            Pair(String, String),
            Compact(String),
        }
        let parsed = match Form::deserialize(deserializer)? {
            Form::Object(w) => Sign::parse(&w.sign)
                .and_then(|s| RealTropVal::new(s, Valuation::parse(&w.val)?)),
            Form::Pair(s, v) => {
                Sign::parse(&s).and_then(|s| RealTropVal::new(s, Valuation::parse(&v)?))
            }
            Form::Compact(text) => RealTropVal::parse_pair(&text),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}
