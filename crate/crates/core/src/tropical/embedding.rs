use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{circuits_from_matrix, gp_from_matrix, GrassmannPluecker, SignedValuatedCircuit};
use crate::hyperfield::RealTropVal;
use crate::puiseux::{rank, Matrix, PuiseuxPoly};
use crate::Limits;

/// A linear embedding `x ↦ (f_0(x) : … : f_m(x))` given by a full-rank
/// matrix whose columns are the functionals `f_i`, with its circuits cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEmbedding {
    matrix: Matrix<PuiseuxPoly>,
    circuits: Vec<SignedValuatedCircuit>,
}

impl LinearEmbedding {
    pub fn new(matrix: Matrix<PuiseuxPoly>, limits: &Limits) -> Result<Self> {
        let circuits = circuits_from_matrix(&matrix, limits)?;
        Ok(LinearEmbedding { matrix, circuits })
    }

    /// Builds the embedding from its functionals.
    pub fn from_columns(columns: &[Vec<PuiseuxPoly>], limits: &Limits) -> Result<Self> {
        LinearEmbedding::new(Matrix::from_columns(columns)?, limits)
    }

    pub fn matrix(&self) -> &Matrix<PuiseuxPoly> {
        &self.matrix
    }

    pub fn circuits(&self) -> &[SignedValuatedCircuit] {
        &self.circuits
    }

    /// Dimension `n + 1` of the source space.
    pub fn source_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Number `m + 1` of functionals.
    pub fn num_functionals(&self) -> usize {
        self.matrix.cols()
    }

    pub fn functional(&self, i: usize) -> Vec<PuiseuxPoly> {
        self.matrix.column(i)
    }

    pub fn functionals(&self) -> Vec<Vec<PuiseuxPoly>> {
        self.matrix.columns()
    }

    /// Image `(f_0(x), …, f_m(x))` of a vector of the source space.
    pub fn apply(&self, x: &[PuiseuxPoly]) -> Result<Vec<PuiseuxPoly>> {
        if x.len() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                found: x.len(),
            });
        }
        Ok((0..self.num_functionals())
            .map(|c| {
                (0..self.source_dim()).fold(PuiseuxPoly::zero(), |acc, r| &acc + &(&x[r] * self.matrix.get(r, c)))
            })
            .collect())
    }

    pub fn oriented_matroid(&self, limits: &Limits) -> Result<GrassmannPluecker<RealTropVal>> {
        gp_from_matrix(&self.matrix, None, limits)
    }

    pub fn is_trivially_valued(&self) -> bool {
        self.matrix.as_rational().is_some()
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            matrix: self.matrix.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn from_json(doc: &EmbeddingJson, limits: &Limits) -> Result<Self> {
        let rows = doc
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<PuiseuxPoly>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(rows)?;
        if rank(&m) != m.rows() {
            return Err(Error::RankDeficient { rank: rank(&m), expected: m.rows() });
        }
        LinearEmbedding::new(m, limits)
    }
}

/// Wire form: the matrix as rows of Puiseux literals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub matrix: Vec<Vec<String>>,
}
