//! The hyperfields 𝕂, 𝕊, 𝕋 and ℝ𝕋 with multivalued addition.
//!
//! Every magnitude is kept in valuation form: the element of absolute value
//! `exp(-v)` carries `v`, so `|a| > |b|` exactly when `val(a) < val(b)`.
//! Iterated hypersums of these four hyperfields are always either a single
//! element or a closed "ball" `{x : val(x) ≥ v}` around zero, which is what
//! [`HyperSet`] stores.

mod hom;
mod hyperset;
mod krasner;
mod real_tropical;
mod sign;
mod tropical;

pub use hom::{abs, map_set, sgn, to_krasner, Hom};
pub use hyperset::{hyper_sum, HyperSet};
pub use krasner::Krasner;
pub use real_tropical::RealTropVal;
pub use sign::Sign;
pub use tropical::TropVal;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::valuation::Valuation;

/// Common interface of the four hyperfields.
pub trait Hyperfield: Clone + Eq + Ord + Hash + Debug + Display {
    /// Short tag used in JSON documents.
    const TAG: &'static str;
    /// Whether `x ⊕ x = {x}` for nonzero `x`.
    const IDEMPOTENT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    /// The unique additive hyperinverse.
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Magnitude in valuation form: `∞` for zero, `0` for every nonzero
    /// element of a trivially valued hyperfield.
    fn valuation(&self) -> Valuation;

    fn minus_one() -> Self {
        Self::one().neg()
    }

    /// `(-1)^k · self`.
    fn signed_by_parity(&self, k: usize) -> Self {
        if k % 2 == 0 {
            self.clone()
        } else {
            self.neg()
        }
    }
}

mod json;
pub use json::ElementJson;

/// Rescales a nonzero vector so that its first nonzero entry is `(+, 0)`.
pub fn normalize_projective(v: &[RealTropVal]) -> crate::error::Result<Vec<RealTropVal>> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or(crate::error::Error::AllZero)?;
    let scale = lead.inv().expect("nonzero element is invertible");
    Ok(v.iter().map(|x| x.mul(&scale)).collect())
}
