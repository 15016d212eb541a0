use crate::error::{Error, Result};
use crate::hyperfield::{abs, hyper_sum, Hyperfield, RealTropVal, TropVal};

use super::{LinearEmbedding, RealTropProjPoint};

/// `0 ∈ ⊕_{e ∈ Supp C} y_e · C_e`, over any of the hyperfields.
pub fn hyperplane_member<H: Hyperfield>(y: &[H], circuit: &[H]) -> Result<bool> {
    if y.len() != circuit.len() {
        return Err(Error::DimensionMismatch {
            expected: circuit.len(),
            found: y.len(),
        });
    }
    let terms: Vec<H> = y
        .iter()
        .zip(circuit)
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| a.mul(c))
        .collect();
    if terms.is_empty() {
        return Ok(true);
    }
    Ok(hyper_sum(&terms)?.contains_zero())
}

/// Membership in the real tropical linear space: every circuit hyperplane.
pub fn linear_space_member(y: &RealTropProjPoint, embedding: &LinearEmbedding) -> Result<bool> {
    if y.len() != embedding.num_functionals() {
        return Err(Error::DimensionMismatch {
            expected: embedding.num_functionals(),
            found: y.len(),
        });
    }
    for c in embedding.circuits() {
        if !hyperplane_member(y.coords(), c.entries())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of `|y|` in the ordinary tropical linear space cut out by the
/// absolute values of the circuits (minimum attained at least twice).
pub fn unsigned_linear_space_member(y: &[RealTropVal], embedding: &LinearEmbedding) -> Result<bool> {
    let y_abs: Vec<TropVal> = y.iter().map(abs).collect();
    for c in embedding.circuits() {
        let c_abs: Vec<TropVal> = c.entries().iter().map(abs).collect();
        if !hyperplane_member(&y_abs, &c_abs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
