use crate::error::{Error, Result};
use crate::puiseux::{inverse_rational, Matrix};
use crate::valuation::{Rational, Valuation};

use super::linalg::{span_rank, unit};
use super::{DiagonalSignedSeminorm, SeminormExpr};

/// Rewrites a trivially valued finite-level seminorm as a single diagonal
/// one agreeing with it on every rational functional.
///
/// Every leaf contributes its dual functionals `u` (rows of `B^{-1}`) with
/// their weights, in tree order. Over a trivially valued field the value at
/// `f` is decided by the first of these, after a stable sort by weight, that
/// does not vanish on `f`. Functionals dependent on earlier ones can never be
/// that first one, so the independent ones (completed at weight `∞`) form the
/// dual basis of the answer.
pub fn diagonalize(s: &SeminormExpr) -> Result<DiagonalSignedSeminorm> {
    let n = s.dim();
    let mut pieces: Vec<(Vec<Rational>, Valuation)> = Vec::new();
    for leaf in s.leaves() {
        let basis = leaf.rational_basis().ok_or_else(|| {
            Error::NotTriviallyValued("diagonalization needs rational bases".into())
        })?;
        let inverse = inverse_rational(&Matrix::from_columns(&basis)?)?;
        for (j, w) in leaf.weights().iter().enumerate() {
            if !w.is_infinite() {
                pieces.push((inverse.row(j), w.clone()));
            }
        }
    }
    pieces.sort_by(|a, b| a.1.cmp(&b.1));

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut weights = Vec::new();
    for (u, w) in pieces {
        rows.push(u);
        if span_rank(&rows) == rows.len() {
            weights.push(w);
        } else {
            rows.pop();
        }
        if rows.len() == n {
            break;
        }
    }
    if rows.is_empty() {
        return Err(Error::Diagonalization("the seminorm vanishes identically".into()));
    }
    for i in 0..n {
        if rows.len() == n {
            break;
        }
        rows.push(unit(n, i));
        if span_rank(&rows) == rows.len() {
            weights.push(Valuation::Infinite);
        } else {
            rows.pop();
        }
    }
    let dual = Matrix::from_rows(rows)?;
    let basis = inverse_rational(&dual)?.columns();
    Ok(DiagonalSignedSeminorm::from_rational(&basis, weights)?.normalized())
}
