use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{binomial, check_cap, combinations, sort_with_parity};
use crate::error::{Error, Result};
use crate::hyperfield::{
    abs, hyper_sum, sgn, to_krasner, ElementJson, Hom, Hyperfield, Krasner, RealTropVal, Sign, TropVal,
};
use crate::puiseux::{det_bounded, rank, Matrix, PuiseuxPoly};
use crate::Limits;

/// Alternating function on `rank`-tuples of a finite ground set with values
/// in a hyperfield. Only nonzero values on strictly increasing tuples are
/// stored; everything else follows from the alternating rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannPluecker<H> {
    rank: usize,
    ground: Vec<String>,
    values: BTreeMap<Vec<usize>, H>,
}

impl<H: Hyperfield> GrassmannPluecker<H> {
    pub fn new(
        rank: usize,
        ground: Vec<String>,
        entries: impl IntoIterator<Item = (Vec<usize>, H)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        let mut seen = ground.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != ground.len() {
            return Err(Error::Invalid("ground set labels must be distinct".into()));
        }
        let mut values = BTreeMap::new();
        for (tuple, value) in entries {
            if tuple.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: tuple.len(),
                });
            }
            if tuple.windows(2).any(|w| w[0] >= w[1]) || tuple.iter().any(|&i| i >= ground.len()) {
                return Err(Error::Invalid(format!(
                    "tuple {tuple:?} is not strictly increasing within the ground set"
                )));
            }
            if !value.is_zero() && values.insert(tuple.clone(), value).is_some() {
                return Err(Error::Invalid(format!("tuple {tuple:?} given twice")));
            }
        }
        if values.is_empty() {
            return Err(Error::Invalid("Grassmann-Plücker function is identically zero".into()));
        }
        Ok(GrassmannPluecker { rank, ground, values })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    /// Value on an arbitrary tuple via the alternating rule.
    pub fn value(&self, tuple: &[usize]) -> H {
        assert_eq!(tuple.len(), self.rank, "tuple length must equal the rank");
        let mut sorted = tuple.to_vec();
        match sort_with_parity(&mut sorted) {
            None => H::zero(),
            Some(parity) => self
                .values
                .get(&sorted)
                .map_or_else(H::zero, |v| v.signed_by_parity(parity)),
        }
    }

    /// Nonzero values on strictly increasing tuples.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Vec<usize>, &H)> {
        self.values.iter()
    }

    pub fn map<G: Hyperfield>(&self, f: impl Fn(&H) -> G) -> GrassmannPluecker<G> {
        GrassmannPluecker {
            rank: self.rank,
            ground: self.ground.clone(),
            values: self
                .values
                .iter()
                .map(|(t, v)| (t.clone(), f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Pointwise multiplication of every value by a nonzero scalar.
    pub fn scaled(&self, c: &H) -> GrassmannPluecker<H> {
        self.map(|v| v.mul(c))
    }

    pub fn underlying(&self) -> GrassmannPluecker<Krasner> {
        self.map(to_krasner)
    }

    pub fn is_basis(&self, set: &[usize]) -> bool {
        set.len() == self.rank && !self.value(set).is_zero()
    }

    /// Rank of a subset in the underlying matroid: the largest intersection
    /// with a basis.
    pub fn rank_of(&self, subset: &[usize]) -> usize {
        self.values
            .keys()
            .map(|b| b.iter().filter(|i| subset.contains(i)).count())
            .max()
            .unwrap_or(0)
    }

    /// Closure in the underlying matroid.
    pub fn closure(&self, subset: &[usize]) -> Vec<usize> {
        let r = self.rank_of(subset);
        (0..self.ground.len())
            .filter(|e| {
                subset.contains(e) || {
                    let mut s = subset.to_vec();
                    s.push(*e);
                    self.rank_of(&s) == r
                }
            })
            .collect()
    }
}

/// Outcome of an exhaustive Grassmann–Plücker relation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpReport {
    pub ok: bool,
    pub relations_checked: u128,
    /// First violating pair `(X, Y)` with `|X| = rank + 1`, `|Y| = rank - 1`.
    pub violation: Option<(Vec<usize>, Vec<usize>)>,
}

/// Verifies `0 ∈ ⊕_k (-1)^k φ(X ∖ x_k) · φ(x_k, Y)` for every strictly
/// increasing `X` of size `rank + 1` and `Y` of size `rank - 1`.
pub fn check_gp_relations<H: Hyperfield>(phi: &GrassmannPluecker<H>, cap: u128) -> Result<GpReport> {
    let n = phi.ground_size();
    let r = phi.rank;
    let required = binomial(n, r + 1) * binomial(n, r - 1);
    check_cap(required, cap)?;
    let mut checked = 0;
    let mut terms = Vec::with_capacity(r + 1);
    let mut tuple = vec![0; r];
    for x in combinations(n, r + 1) {
        for y in combinations(n, r - 1) {
            checked += 1;
            terms.clear();
            for k in 0..=r {
                let rest: Vec<usize> = x.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
                tuple[0] = x[k];
                tuple[1..].copy_from_slice(&y);
                let term = phi.value(&rest).mul(&phi.value(&tuple));
                terms.push(term.signed_by_parity(k));
            }
            if !hyper_sum(&terms)?.contains_zero() {
                return Ok(GpReport {
                    ok: false,
                    relations_checked: checked,
                    violation: Some((x, y)),
                });
            }
        }
    }
    Ok(GpReport {
        ok: true,
        relations_checked: checked,
        violation: None,
    })
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The oriented valuated matroid of the row space of a full-rank matrix:
/// `φ(tuple) = signed value of the maximal minor on those columns`.
pub fn gp_from_matrix(
    m: &Matrix<PuiseuxPoly>,
    labels: Option<Vec<String>>,
    limits: &Limits,
) -> Result<GrassmannPluecker<RealTropVal>> {
    let r = m.rows();
    let n = m.cols();
    let labels = labels.unwrap_or_else(|| default_labels(n));
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: labels.len(),
        });
    }
    if r == 0 {
        return Err(Error::Invalid("matrix has no rows".into()));
    }
    let found = rank(m);
    if found != r {
        return Err(Error::RankDeficient { rank: found, expected: r });
    }
    check_cap(binomial(n, r), limits.enumeration_cap)?;
    let mut entries = Vec::new();
    for tuple in combinations(n, r) {
        let d = det_bounded(&m.select_columns(&tuple), limits.max_det_size)?;
        entries.push((tuple, d.signed_value()));
    }
    GrassmannPluecker::new(r, labels, entries)
}

/// A Grassmann–Plücker function over one of the four hyperfields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGp {
    RealTropical(GrassmannPluecker<RealTropVal>),
    Tropical(GrassmannPluecker<TropVal>),
    Sign(GrassmannPluecker<Sign>),
    Krasner(GrassmannPluecker<Krasner>),
}

/// Applies a hyperfield homomorphism pointwise.
pub fn pushforward_gp(phi: &AnyGp, hom: Hom) -> Result<AnyGp> {
    match (phi, hom) {
        (AnyGp::RealTropical(p), Hom::Abs) => Ok(AnyGp::Tropical(p.map(abs))),
        (AnyGp::RealTropical(p), Hom::Sgn) => Ok(AnyGp::Sign(p.map(sgn))),
        (_, Hom::ToKrasner) => Ok(AnyGp::Krasner(phi.underlying())),
        (other, h) => Err(Error::HyperfieldMismatch(format!(
            "{} cannot be applied to a function over {}",
            h,
            other.tag()
        ))),
    }
}

fn gp_to_json<H: Hyperfield + ElementJson>(phi: &GrassmannPluecker<H>) -> Value {
    let values: Vec<Value> = phi
        .values
        .iter()
        .map(|(t, v)| json!({"tuple": t, "value": v.to_json()}))
        .collect();
    json!({
        "rank": phi.rank,
        "ground": phi.ground,
        "hyperfield": H::TAG,
        "values": values,
    })
}

fn gp_from_json<H: Hyperfield + ElementJson>(v: &Value) -> Result<GrassmannPluecker<H>> {
    let bad = |what: &str| Error::Invalid(format!("Grassmann-Plücker JSON: {what}"));
    let rank = v["rank"].as_u64().ok_or_else(|| bad("missing rank"))? as usize;
    let ground: Vec<String> = match &v["ground"] {
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect(),
        Value::Number(n) => default_labels(n.as_u64().ok_or_else(|| bad("ground"))? as usize),
        _ => return Err(bad("missing ground")),
    };
    let items = v["values"].as_array().ok_or_else(|| bad("missing values"))?;
    let mut entries = Vec::with_capacity(items.len());
    for item in items {
        let tuple = item["tuple"]
            .as_array()
            .ok_or_else(|| bad("missing tuple"))?
            .iter()
            .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| bad("tuple entry")))
            .collect::<Result<Vec<_>>>()?;
        entries.push((tuple, H::from_json(&item["value"])?));
    }
    GrassmannPluecker::new(rank, ground, entries)
}

impl AnyGp {
    pub fn tag(&self) -> &'static str {
        match self {
            AnyGp::RealTropical(_) => RealTropVal::TAG,
            AnyGp::Tropical(_) => TropVal::TAG,
            AnyGp::Sign(_) => Sign::TAG,
            AnyGp::Krasner(_) => Krasner::TAG,
        }
    }

    pub fn underlying(&self) -> GrassmannPluecker<Krasner> {
        match self {
            AnyGp::RealTropical(p) => p.underlying(),
            AnyGp::Tropical(p) => p.underlying(),
            AnyGp::Sign(p) => p.underlying(),
            AnyGp::Krasner(p) => p.clone(),
        }
    }

    pub fn check_relations(&self, cap: u128) -> Result<GpReport> {
        match self {
            AnyGp::RealTropical(p) => check_gp_relations(p, cap),
            AnyGp::Tropical(p) => check_gp_relations(p, cap),
            AnyGp::Sign(p) => check_gp_relations(p, cap),
            AnyGp::Krasner(p) => check_gp_relations(p, cap),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyGp::RealTropical(p) => gp_to_json(p),
            AnyGp::Tropical(p) => gp_to_json(p),
            AnyGp::Sign(p) => gp_to_json(p),
            AnyGp::Krasner(p) => gp_to_json(p),
        }
    }

    pub fn from_json(v: &Value) -> Result<AnyGp> {
        match v["hyperfield"].as_str() {
            Some("RT") => gp_from_json(v).map(AnyGp::RealTropical),
            Some("T") => gp_from_json(v).map(AnyGp::Tropical),
            Some("S") => gp_from_json(v).map(AnyGp::Sign),
            Some("K") => gp_from_json(v).map(AnyGp::Krasner),
            other => Err(Error::Invalid(format!("unknown hyperfield tag {other:?}"))),
        }
    }
}
