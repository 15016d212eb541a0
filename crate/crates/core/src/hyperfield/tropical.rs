use std::fmt;

use crate::valuation::Valuation;

use super::Hyperfield;

/// Element of the tropical hyperfield 𝕋, stored as a valuation (`0 ↦ ∞`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TropVal(pub Valuation);

impl fmt::Display for TropVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Hyperfield for TropVal {
    const TAG: &'static str = "T";
    const IDEMPOTENT: bool = false;

    fn zero() -> Self {
        TropVal(Valuation::Infinite)
    }
    fn one() -> Self {
        TropVal(Valuation::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_infinite()
    }
    fn mul(&self, other: &Self) -> Self {
        TropVal(self.0.add(&other.0))
    }
    fn neg(&self) -> Self {
        self.clone()
    }
    fn inv(&self) -> Option<Self> {
        self.0.finite().map(|q| TropVal(Valuation::Finite(-q)))
    }
    fn valuation(&self) -> Valuation {
        self.0.clone()
    }
}
