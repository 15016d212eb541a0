use crate::error::Result;
use crate::hyperfield::{Hyperfield, RealTropVal, Sign};
use crate::puiseux::{det, Matrix, PuiseuxPoly};
use crate::valuation::Valuation;

use super::DiagonalSignedSeminorm;

/// A scalar multiple of the cocircuit seminorm `f ↦ sv det(f, μ_1, …, μ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocircuitPiece {
    pub scalar: RealTropVal,
    pub mu: Vec<Vec<PuiseuxPoly>>,
}

impl CocircuitPiece {
    /// The unscaled value `sv det(f, μ_1, …, μ_n)`.
    pub fn cocircuit_value(&self, f: &[PuiseuxPoly]) -> Result<RealTropVal> {
        let mut cols = vec![f.to_vec()];
        cols.extend(self.mu.iter().cloned());
        Ok(det(&Matrix::from_columns(&cols)?)?.signed_value())
    }

    pub fn eval(&self, f: &[PuiseuxPoly]) -> Result<RealTropVal> {
        Ok(self.scalar.mul(&self.cocircuit_value(f)?))
    }
}

/// Writes `‖·‖_{B,c}` as a composition, in order, of scalar multiples of the
/// cocircuit seminorms of `μ_i = (b_0, …, b̂_i, …, b_n)`. Basis vectors of
/// infinite weight contribute nothing and are skipped.
pub fn cocircuit_decomposition(d: &DiagonalSignedSeminorm) -> Vec<CocircuitPiece> {
    let det_b = d.det().signed_value();
    let n = d.dim();
    (0..n)
        .filter(|&i| !d.weights()[i].is_infinite())
        .map(|i| {
            let sign = Sign::of_parity(i) * det_b.sign();
            let val = d.weights()[i].sub(det_b.val());
            let scalar = RealTropVal::new(sign, val).expect("finite weight and nonzero determinant");
            let mu = (0..n).filter(|&k| k != i).map(|k| d.basis()[k].clone()).collect();
            CocircuitPiece { scalar, mu }
        })
        .collect()
}

/// Evaluates the composition of the pieces, ties going to the earlier one.
pub fn eval_pieces(pieces: &[CocircuitPiece], f: &[PuiseuxPoly]) -> Result<RealTropVal> {
    let mut best = RealTropVal::zero();
    let mut best_val = Valuation::Infinite;
    for piece in pieces {
        let v = piece.eval(f)?;
        if v.val() < &best_val {
            best_val = v.val().clone();
            best = v;
        }
    }
    Ok(best)
}
