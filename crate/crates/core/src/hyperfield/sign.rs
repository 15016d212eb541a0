use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::valuation::Valuation;

use super::Hyperfield;

/// Element of the sign hyperfield 𝕊 = {0, +, −}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            _ => Err(Error::Invalid(format!("invalid sign character {c:?}"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn parse(s: &str) -> Result<Sign> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Sign::from_char(c),
            _ => Err(Error::Invalid(format!("invalid sign {s:?}"))),
        }
    }

    pub fn from_rational(q: &crate::valuation::Rational) -> Sign {
        use num::Signed;
        if q.is_positive() {
            Sign::Plus
        } else if q.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn of_parity(k: usize) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl Hyperfield for Sign {
    const TAG: &'static str = "S";
    const IDEMPOTENT: bool = true;

    fn zero() -> Self {
        Sign::Zero
    }
    fn one() -> Self {
        Sign::Plus
    }
    fn is_zero(&self) -> bool {
        *self == Sign::Zero
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then_some(*self)
    }
    fn valuation(&self) -> Valuation {
        if self.is_zero() {
            Valuation::Infinite
        } else {
            Valuation::zero()
        }
    }
}
