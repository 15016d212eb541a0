use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::valuation::Valuation;

use super::{HyperSet, Hyperfield, Krasner, RealTropVal, Sign, TropVal};

/// The hyperfield homomorphisms out of ℝ𝕋 (and into 𝕂 from anywhere).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hom {
    /// ℝ𝕋 → 𝕋, forgetting the sign.
    Abs,
    /// ℝ𝕋 → 𝕊, forgetting the magnitude.
    Sgn,
    /// Any hyperfield → 𝕂, remembering only whether the element is zero.
    ToKrasner,
}

impl Hom {
    pub fn name(self) -> &'static str {
        match self {
            Hom::Abs => "abs",
            Hom::Sgn => "sgn",
            Hom::ToKrasner => "to-krasner",
        }
    }
}

impl FromStr for Hom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Hom> {
        match s {
            "abs" => Ok(Hom::Abs),
            "sgn" => Ok(Hom::Sgn),
            "to-krasner" | "krasner" => Ok(Hom::ToKrasner),
            _ => Err(Error::Invalid(format!("unknown homomorphism {s:?}"))),
        }
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn abs(x: &RealTropVal) -> TropVal {
    TropVal(x.val().clone())
}

pub fn sgn(x: &RealTropVal) -> Sign {
    x.sign()
}

pub fn to_krasner<H: Hyperfield>(x: &H) -> Krasner {
    Krasner(!x.is_zero())
}

/// Image of a hypersum outcome under a homomorphism that keeps magnitudes
/// (`abs`), or flattens them to `{0, 1}` (`sgn`, `to-krasner`).
pub fn map_set<H: Hyperfield, G: Hyperfield>(set: &HyperSet<H>, f: impl Fn(&H) -> G, keeps_magnitude: bool) -> HyperSet<G> {
    match set {
        HyperSet::Singleton(x) => HyperSet::Singleton(f(x)),
        HyperSet::Ball(v) if keeps_magnitude => HyperSet::Ball(v.clone()),
        HyperSet::Ball(_) => HyperSet::Ball(Valuation::zero()),
    }
}
