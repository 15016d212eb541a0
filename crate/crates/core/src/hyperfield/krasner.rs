use std::fmt;

use crate::valuation::Valuation;

use super::Hyperfield;

/// Element of the Krasner hyperfield 𝕂 = {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Krasner(pub bool);

impl fmt::Display for Krasner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Hyperfield for Krasner {
    const TAG: &'static str = "K";
    const IDEMPOTENT: bool = false;

    fn zero() -> Self {
        Krasner(false)
    }
    fn one() -> Self {
        Krasner(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn mul(&self, other: &Self) -> Self {
        Krasner(self.0 && other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
    fn valuation(&self) -> Valuation {
        if self.0 {
            Valuation::zero()
        } else {
            Valuation::Infinite
        }
    }
}
