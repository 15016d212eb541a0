use std::fmt;
use std::ops::Mul;

use num::Zero;

use crate::valuation::{format_rational, Rational, Valuation};

/// Leading term of a Puiseux element: `(leading coefficient, valuation)`.
/// The zero element has no coefficient and infinite valuation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FineValue {
    leading_coeff: Option<Rational>,
    valuation: Valuation,
}

impl FineValue {
    pub fn zero() -> Self {
        FineValue {
            leading_coeff: None,
            valuation: Valuation::Infinite,
        }
    }

    pub fn new(coeff: Rational, exp: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            FineValue {
                leading_coeff: Some(coeff),
                valuation: Valuation::Finite(exp),
            }
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading_coeff.as_ref()
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn is_zero(&self) -> bool {
        self.leading_coeff.is_none()
    }
}

impl Mul for &FineValue {
    type Output = FineValue;
    fn mul(self, rhs: &FineValue) -> FineValue {
        match (&self.leading_coeff, &rhs.leading_coeff) {
            (Some(a), Some(b)) => FineValue {
                leading_coeff: Some(a * b),
                valuation: self.valuation.add(&rhs.valuation),
            },
            _ => FineValue::zero(),
        }
    }
}

impl fmt::Display for FineValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.leading_coeff {
            None => f.write_str("(0, inf)"),
            Some(c) => write!(f, "({}, {})", format_rational(c), self.valuation),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::PuiseuxPoly;
    use crate::valuation::{integer, rational};

    #[test]
    fn leading_terms() {
        let f: PuiseuxPoly = "3*t^(1/2) + t".parse().unwrap();
        assert_eq!(f.fval(), FineValue::new(integer(3), rational(1, 2)));
        assert_eq!(PuiseuxPoly::from_int(5).fval(), FineValue::new(integer(5), integer(0)));
        assert!(PuiseuxPoly::zero().fval().is_zero());
        let g: PuiseuxPoly = "-t^(-1) + 4".parse().unwrap();
        assert_eq!(&f.fval() * &g.fval(), (&f * &g).fval());
        assert!((&f.fval() * &FineValue::zero()).is_zero());
    }
}
