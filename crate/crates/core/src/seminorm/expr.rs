use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hyperfield::RealTropVal;
use crate::puiseux::PuiseuxPoly;
use crate::valuation::Valuation;

use super::DiagonalSignedSeminorm;

/// A finite-level signed seminorm: a diagonal leaf or a composition.
///
/// `Compose(a, b)` evaluates to `a(f)` unless `b(f)` is strictly larger in
/// absolute value, i.e. ties go to the left operand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeminormExpr {
    Leaf(DiagonalSignedSeminorm),
    Compose(Box<SeminormExpr>, Box<SeminormExpr>),
}

impl From<DiagonalSignedSeminorm> for SeminormExpr {
    fn from(d: DiagonalSignedSeminorm) -> Self {
        SeminormExpr::Leaf(d)
    }
}

impl SeminormExpr {
    pub fn compose(left: SeminormExpr, right: SeminormExpr) -> Result<SeminormExpr> {
        if left.dim() != right.dim() {
            return Err(Error::DimensionMismatch { expected: left.dim(), found: right.dim() });
        }
        Ok(SeminormExpr::Compose(Box::new(left), Box::new(right)))
    }

    /// Left-nested composition `((s_0 ∘ s_1) ∘ s_2) ∘ …`.
    pub fn compose_all<I: IntoIterator<Item = SeminormExpr>>(parts: I) -> Result<SeminormExpr> {
        let mut it = parts.into_iter();
        let first = it.next().ok_or_else(|| Error::Invalid("nothing to compose".into()))?;
        it.try_fold(first, SeminormExpr::compose)
    }

    pub fn dim(&self) -> usize {
        match self {
            SeminormExpr::Leaf(d) => d.dim(),
            SeminormExpr::Compose(a, _) => a.dim(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&DiagonalSignedSeminorm> {
        match self {
            SeminormExpr::Leaf(d) => vec![d],
            SeminormExpr::Compose(a, b) => {
                let mut out = a.leaves();
                out.extend(b.leaves());
                out
            }
        }
    }

    pub fn eval(&self, f: &[PuiseuxPoly]) -> Result<RealTropVal> {
        match self {
            SeminormExpr::Leaf(d) => d.eval(f),
            SeminormExpr::Compose(a, b) => {
                let left = a.eval(f)?;
                let right = b.eval(f)?;
                Ok(if left.val() <= right.val() { left } else { right })
            }
        }
    }

    pub fn is_trivially_valued(&self) -> bool {
        self.leaves().iter().all(|d| d.is_trivially_valued())
    }

    pub fn to_json(&self) -> Value {
        match self {
            SeminormExpr::Leaf(d) => json!({
                "kind": "leaf",
                "basis": d.basis().iter()
                    .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "c": d.weights().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            }),
            SeminormExpr::Compose(a, b) => json!({
                "kind": "compose",
                "left": a.to_json(),
                "right": b.to_json(),
            }),
        }
    }

    pub fn from_json(doc: &Value) -> Result<SeminormExpr> {
        let kind = doc.get("kind").and_then(Value::as_str).unwrap_or("leaf");
        match kind {
            "leaf" => {
                let basis = doc
                    .get("basis")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Invalid("leaf needs a \"basis\" array".into()))?
                    .iter()
                    .map(|b| {
                        b.as_array()
                            .ok_or_else(|| Error::Invalid("basis vectors must be arrays".into()))?
                            .iter()
                            .map(parse_entry)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let weights = doc
                    .get("c")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Invalid("leaf needs a \"c\" array".into()))?
                    .iter()
                    .map(parse_weight)
                    .collect::<Result<Vec<_>>>()?;
                Ok(DiagonalSignedSeminorm::new(basis, weights)?.into())
            }
            "compose" => {
                let part = |key: &str| {
                    doc.get(key)
                        .ok_or_else(|| Error::Invalid(format!("compose needs \"{key}\"")))
                        .and_then(SeminormExpr::from_json)
                };
                SeminormExpr::compose(part("left")?, part("right")?)
            }
            other => Err(Error::Invalid(format!("unknown seminorm kind {other:?}"))),
        }
    }
}

fn parse_entry(v: &Value) -> Result<PuiseuxPoly> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n.to_string().parse(),
        _ => Err(Error::Invalid(format!("expected a Puiseux entry, found {v}"))),
    }
}

fn parse_weight(v: &Value) -> Result<Valuation> {
    match v {
        Value::String(s) => Valuation::parse(s),
        Value::Number(n) => Valuation::parse(&n.to_string()),
        Value::Null => Ok(Valuation::Infinite),
        _ => Err(Error::Invalid(format!("expected a weight, found {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Hyperfield;

    fn leaf(doc: &str) -> SeminormExpr {
        SeminormExpr::from_json(&serde_json::from_str(doc).unwrap()).unwrap()
    }

    fn pv(xs: &[&str]) -> Vec<PuiseuxPoly> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn json_round_trip() {
        let a = leaf(r#"{"kind":"leaf","basis":[["1","t"],["0","1"]],"c":["0","1/2"]}"#);
        let b = leaf(r#"{"basis":[[1,0],[0,1]],"c":["0","inf"]}"#);
        let c = SeminormExpr::compose(a, b).unwrap();
        let back = SeminormExpr::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.leaves().len(), 2);
    }

    #[test]
    fn composition_prefers_the_left_on_ties() {
        let a = leaf(r#"{"basis":[["1","0"],["0","1"]],"c":["0","0"]}"#);
        let b = leaf(r#"{"basis":[["0","1"],["1","0"]],"c":["0","0"]}"#);
        let f = pv(&["1", "-1"]);
        let ab = SeminormExpr::compose(a.clone(), b.clone()).unwrap();
        let ba = SeminormExpr::compose(b, a).unwrap();
        assert_eq!(ab.eval(&f).unwrap(), RealTropVal::parse_pair("+:0").unwrap());
        assert_eq!(ba.eval(&f).unwrap(), RealTropVal::parse_pair("-:0").unwrap());
    }

    #[test]
    fn rank_one_pieces_recompose_the_diagonal() {
        let d = DiagonalSignedSeminorm::new(
            vec![pv(&["t", "1", "1"]), pv(&["0", "1", "0"]), pv(&["0", "0", "1"])],
            vec![Valuation::zero(), Valuation::from_int(1), Valuation::from_int(1)],
        )
        .unwrap();
        let pieces = SeminormExpr::compose_all(d.rank_one_pieces().into_iter().map(SeminormExpr::from)).unwrap();
        let whole = SeminormExpr::from(d);
        for f in [
            pv(&["1", "0", "0"]),
            pv(&["0", "1", "0"]),
            pv(&["t", "1", "1"]),
            pv(&["t^2", "-1", "t"]),
            pv(&["1", "t", "-t"]),
            pv(&["0", "0", "0"]),
        ] {
            assert_eq!(whole.eval(&f).unwrap(), pieces.eval(&f).unwrap(), "{f:?}");
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = leaf(r#"{"basis":[["1"]],"c":["0"]}"#);
        let b = leaf(r#"{"basis":[["1","0"],["0","1"]],"c":["0","0"]}"#);
        assert!(matches!(SeminormExpr::compose(a, b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn zero_functional_has_zero_value() {
        let a = leaf(r#"{"basis":[["1","0"],["0","1"]],"c":["0","inf"]}"#);
        assert!(a.eval(&pv(&["0", "0"])).unwrap().is_zero());
        assert!(a.eval(&pv(&["0", "5"])).unwrap().is_zero());
    }
}
