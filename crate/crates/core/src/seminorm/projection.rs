use crate::error::{Error, Result};
use crate::tropical::{LinearEmbedding, RealTropProjPoint};

use super::SeminormExpr;

/// `π_ι(‖·‖) = (‖f_0‖ : … : ‖f_m‖)` for the functionals `f_i` of `ι`.
pub fn project_pi(s: &SeminormExpr, embedding: &LinearEmbedding) -> Result<RealTropProjPoint> {
    if embedding.source_dim() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), found: embedding.source_dim() });
    }
    let values = embedding
        .functionals()
        .iter()
        .map(|f| s.eval(f))
        .collect::<Result<Vec<_>>>()?;
    RealTropProjPoint::new(&values)
}

/// A coordinate projection between embeddings: functional `k` of `target`
/// is functional `map[k]` of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub target: LinearEmbedding,
    pub map: Vec<usize>,
}

impl Morphism {
    pub fn check_against(&self, source: &LinearEmbedding) -> Result<()> {
        if self.map.len() != self.target.num_functionals() {
            return Err(Error::InconsistentMorphism(format!(
                "map has {} entries but the target has {} functionals",
                self.map.len(),
                self.target.num_functionals()
            )));
        }
        for (k, &i) in self.map.iter().enumerate() {
            if i >= source.num_functionals() || source.functional(i) != self.target.functional(k) {
                return Err(Error::InconsistentMorphism(format!(
                    "target functional {k} is not source functional {i}"
                )));
            }
        }
        Ok(())
    }
}

/// Whether projecting first and then forgetting coordinates agrees with
/// projecting to the target directly.
pub fn check_diagram_commutes(s: &SeminormExpr, source: &LinearEmbedding, morphism: &Morphism) -> Result<bool> {
    morphism.check_against(source)?;
    let via_source = project_pi(s, source)?.select(&morphism.map);
    let direct = project_pi(s, &morphism.target);
    match (via_source, direct) {
        (Ok(a), Ok(b)) => Ok(a == b),
        (Err(Error::AllZero), Err(Error::AllZero)) => Ok(true),
        (Err(Error::AllZero), Ok(_)) | (Ok(_), Err(Error::AllZero)) => Ok(false),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
