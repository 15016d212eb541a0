use num::Zero;

use crate::error::{Error, Result};
use crate::hyperfield::{Hyperfield, RealTropVal};
use crate::puiseux::{det, inverse_rational, Matrix, PuiseuxPoly};
use crate::valuation::{Rational, Valuation};

/// The diagonal signed seminorm `‖·‖_{B,c}`: writing `f = Σ λ_j b_j`, its
/// value is `(sgn λ_j, val λ_j + c_j)` for the smallest `j` minimizing
/// `val λ_j + c_j`, and zero if every level is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSignedSeminorm {
    basis: Vec<Vec<PuiseuxPoly>>,
    weights: Vec<Valuation>,
    det: PuiseuxPoly,
    /// `B^{-1}` when every basis entry is a rational constant.
    inverse: Option<Matrix<Rational>>,
}

impl DiagonalSignedSeminorm {
    /// `basis[j]` is the basis vector `b_j`; `weights` must be nondecreasing
    /// and not all infinite.
    pub fn new(basis: Vec<Vec<PuiseuxPoly>>, weights: Vec<Valuation>) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::Invalid("empty basis".into()));
        }
        if weights.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: weights.len() });
        }
        if let Some(b) = basis.iter().find(|b| b.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: b.len() });
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeights("weights must be nondecreasing in valuation form".into()));
        }
        if weights.iter().all(Valuation::is_infinite) {
            return Err(Error::InvalidWeights("all weights are infinite".into()));
        }
        let matrix = Matrix::from_columns(&basis)?;
        let det = det(&matrix)?;
        if det.is_zero() {
            return Err(Error::SingularBasis);
        }
        let inverse = match matrix.as_rational() {
            Some(q) => Some(inverse_rational(&q)?),
            None => None,
        };
        Ok(DiagonalSignedSeminorm { basis, weights, det, inverse })
    }

    /// Convenience constructor for rational bases.
    pub fn from_rational(basis: &[Vec<Rational>], weights: Vec<Valuation>) -> Result<Self> {
        let basis = basis
            .iter()
            .map(|b| b.iter().cloned().map(PuiseuxPoly::constant).collect())
            .collect();
        DiagonalSignedSeminorm::new(basis, weights)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<PuiseuxPoly>] {
        &self.basis
    }

    pub fn weights(&self) -> &[Valuation] {
        &self.weights
    }

    pub fn det(&self) -> &PuiseuxPoly {
        &self.det
    }

    pub fn is_trivially_valued(&self) -> bool {
        self.inverse.is_some()
    }

    /// The basis as rational vectors, when trivially valued.
    pub fn rational_basis(&self) -> Option<Vec<Vec<Rational>>> {
        self.basis
            .iter()
            .map(|b| b.iter().map(PuiseuxPoly::constant_value).collect::<Option<Vec<_>>>())
            .collect()
    }

    /// Signed values of the coordinates `λ_j` of `f` in the basis.
    pub fn coordinates(&self, f: &[PuiseuxPoly]) -> Result<Vec<RealTropVal>> {
        let n = self.dim();
        if f.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.len() });
        }
        if let Some(inv) = &self.inverse {
            return Ok((0..n)
                .map(|j| {
                    (0..n)
                        .fold(PuiseuxPoly::zero(), |acc, k| &acc + &f[k].scale(inv.get(j, k)))
                        .signed_value()
                })
                .collect());
        }
        let denominator = self.det.signed_value();
        (0..n)
            .map(|j| {
                let mut cols = self.basis.clone();
                cols[j] = f.to_vec();
                let numerator = det(&Matrix::from_columns(&cols)?)?.signed_value();
                numerator.div(&denominator)
            })
            .collect()
    }

    pub fn eval(&self, f: &[PuiseuxPoly]) -> Result<RealTropVal> {
        let lambda = self.coordinates(f)?;
        let mut best: Option<(Valuation, usize)> = None;
        for (j, l) in lambda.iter().enumerate() {
            let level = l.val().add(&self.weights[j]);
            if level.is_infinite() {
                continue;
            }
            if best.as_ref().map_or(true, |(b, _)| level < *b) {
                best = Some((level, j));
            }
        }
        Ok(match best {
            None => RealTropVal::zero(),
            Some((level, j)) => RealTropVal::new(lambda[j].sign(), level)?,
        })
    }

    /// Homothetic representative whose first finite weight is `0`.
    pub fn normalized(&self) -> Self {
        let shift = self.weights.iter().find_map(|w| w.finite().cloned()).unwrap_or_else(Rational::zero);
        let mut out = self.clone();
        out.weights = self
            .weights
            .iter()
            .map(|w| w.add(&Valuation::Finite(-shift.clone())))
            .collect();
        out
    }

    /// The rank-one pieces `‖·‖_{B_j, (c_j, ∞, …, ∞)}` with
    /// `B_j = (b_j, b_0, …, b̂_j, …)`, one per finite weight. Composing them in
    /// order gives back `self`.
    pub fn rank_one_pieces(&self) -> Vec<DiagonalSignedSeminorm> {
        let n = self.dim();
        (0..n)
            .filter(|&j| !self.weights[j].is_infinite())
            .map(|j| {
                let mut basis = vec![self.basis[j].clone()];
                basis.extend((0..n).filter(|&k| k != j).map(|k| self.basis[k].clone()));
                let mut weights = vec![Valuation::Infinite; n];
                weights[0] = self.weights[j].clone();
                DiagonalSignedSeminorm::new(basis, weights).expect("reordering keeps the basis valid")
            })
            .collect()
    }
}
