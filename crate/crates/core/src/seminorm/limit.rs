use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hyperfield::{Hyperfield, RealTropVal};
use crate::puiseux::PuiseuxPoly;
use crate::tropical::{EmbeddingJson, LinearEmbedding, RealTropProjPoint};
use crate::Limits;

use super::{project_pi, Morphism, SeminormExpr};

/// One linear tropicalization together with a point in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub embedding: LinearEmbedding,
    pub point: RealTropProjPoint,
}

/// A coordinate projection between two members of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMorphism {
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

/// A finite system of points in linear tropicalizations, indexed by
/// embeddings and related by coordinate projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleFamily {
    pub members: Vec<FamilyMember>,
    pub morphisms: Vec<FamilyMorphism>,
}

#[derive(Serialize, Deserialize)]
struct MemberJson {
    embedding: EmbeddingJson,
    point: RealTropProjPoint,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    members: Vec<MemberJson>,
    #[serde(default)]
    morphisms: Vec<FamilyMorphism>,
}

impl CompatibleFamily {
    /// The family of projections of one seminorm.
    pub fn from_seminorm(
        s: &SeminormExpr,
        embeddings: Vec<LinearEmbedding>,
        morphisms: Vec<FamilyMorphism>,
    ) -> Result<Self> {
        let members = embeddings
            .into_iter()
            .map(|embedding| Ok(FamilyMember { point: project_pi(s, &embedding)?, embedding }))
            .collect::<Result<Vec<_>>>()?;
        Ok(CompatibleFamily { members, morphisms })
    }

    pub fn source_dim(&self) -> Result<usize> {
        let first = self
            .members
            .first()
            .ok_or_else(|| Error::NoApplicableEmbedding("the family is empty".into()))?
            .embedding
            .source_dim();
        if let Some(m) = self.members.iter().find(|m| m.embedding.source_dim() != first) {
            return Err(Error::DimensionMismatch { expected: first, found: m.embedding.source_dim() });
        }
        Ok(first)
    }

    /// Checks every morphism: the embeddings must match (otherwise
    /// `InconsistentMorphism`) and the points must correspond (otherwise
    /// `InconsistentFamily`).
    pub fn validate(&self) -> Result<()> {
        self.source_dim()?;
        for (k, m) in self.morphisms.iter().enumerate() {
            let (Some(src), Some(dst)) = (self.members.get(m.source), self.members.get(m.target)) else {
                return Err(Error::InconsistentMorphism(format!("morphism {k} refers to a missing member")));
            };
            if src.point.len() != src.embedding.num_functionals() || dst.point.len() != dst.embedding.num_functionals() {
                return Err(Error::InconsistentFamily(format!("morphism {k}: point length differs from its embedding")));
            }
            Morphism { target: dst.embedding.clone(), map: m.map.clone() }.check_against(&src.embedding)?;
            let agrees = match src.point.select(&m.map) {
                Ok(p) => p == dst.point,
                Err(Error::AllZero) => false,
                Err(e) => return Err(e),
            };
            if !agrees {
                return Err(Error::InconsistentFamily(format!(
                    "morphism {k}: member {} does not project onto member {}",
                    m.source, m.target
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let doc = FamilyJson {
            members: self
                .members
                .iter()
                .map(|m| MemberJson { embedding: m.embedding.to_json(), point: m.point.clone() })
                .collect(),
            morphisms: self.morphisms.clone(),
        };
        serde_json::to_value(doc).expect("family serializes")
    }

    pub fn from_json(doc: &Value, limits: &Limits) -> Result<Self> {
        let parsed: FamilyJson =
            serde_json::from_value(doc.clone()).map_err(|e| Error::Invalid(format!("family: {e}")))?;
        let members = parsed
            .members
            .into_iter()
            .map(|m| Ok(FamilyMember { embedding: LinearEmbedding::from_json(&m.embedding, limits)?, point: m.point }))
            .collect::<Result<Vec<_>>>()?;
        Ok(CompatibleFamily { members, morphisms: parsed.morphisms })
    }
}

fn unit(n: usize, k: usize) -> Vec<PuiseuxPoly> {
    (0..n).map(|j| PuiseuxPoly::from_int((j == k) as i64)).collect()
}

fn position(member: &FamilyMember, f: &[PuiseuxPoly]) -> Option<usize> {
    (0..member.embedding.num_functionals()).find(|&i| member.embedding.functional(i) == f)
}

/// Recovers the values of the underlying signed seminorm on `probes`, up to
/// one global homothety, from a compatible family.
///
/// Values are normalized so that the first standard dual vector `e_k^*`
/// occurring with a nonzero coordinate has value `(+,0)`. A probe is read
/// off every member containing both it and that reference; all readings must
/// agree.
pub fn reconstruct_from_family(family: &CompatibleFamily, probes: &[Vec<PuiseuxPoly>]) -> Result<Vec<RealTropVal>> {
    family.validate()?;
    let n = family.source_dim()?;
    let reference = (0..n)
        .map(|k| unit(n, k))
        .find(|e| {
            family
                .members
                .iter()
                .any(|m| position(m, e).is_some_and(|i| !m.point.coords()[i].is_zero()))
        })
        .ok_or_else(|| Error::NoApplicableEmbedding("no member contains a standard dual vector with nonzero value".into()))?;

    probes
        .iter()
        .map(|f| {
            if f.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: f.len() });
            }
            let mut value: Option<RealTropVal> = None;
            for m in &family.members {
                let (Some(i), Some(r)) = (position(m, f), position(m, &reference)) else {
                    continue;
                };
                let denominator = &m.point.coords()[r];
                if denominator.is_zero() {
                    return Err(Error::InconsistentFamily(
                        "the reference functional vanishes in one member but not in another".into(),
                    ));
                }
                let reading = m.point.coords()[i].div(denominator)?;
                match &value {
                    Some(v) if *v != reading => {
                        return Err(Error::InconsistentFamily(format!("members disagree: {v} vs {reading}")))
                    }
                    _ => value = Some(reading),
                }
            }
            value.ok_or_else(|| {
                Error::NoApplicableEmbedding("no member contains both the probe and the reference".into())
            })
        })
        .collect()
}
