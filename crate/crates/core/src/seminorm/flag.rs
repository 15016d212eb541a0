use num::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hyperfield::Sign;
use crate::puiseux::PuiseuxPoly;
use crate::valuation::{format_rational, parse_rational, Rational, Valuation};

use super::linalg::{same_span, solve, span_rank};
use super::{diagonalize, DiagonalSignedSeminorm, SeminormExpr};

/// A signed flag `V_0 ⊊ V_1 ⊊ … ⊊ V_l = V` over ℚ: the kernel `V_0`, step
/// vectors `a_i ∈ V_i ∖ V_{i-1}`, a sign `ε_i` choosing a side of
/// `V_{i-1}` in `V_i`, and weights `d_1 ≥ … ≥ d_{l-1} ≥ 0` (valuation form;
/// the last weight is pinned to `0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedFlag {
    dim: usize,
    kernel: Vec<Vec<Rational>>,
    steps: Vec<Vec<Rational>>,
    signs: Vec<Sign>,
    weights: Vec<Rational>,
}

impl SignedFlag {
    pub fn new(
        kernel: Vec<Vec<Rational>>,
        steps: Vec<Vec<Rational>>,
        signs: Vec<Sign>,
        weights: Vec<Rational>,
    ) -> Result<Self> {
        let dim = kernel.len() + steps.len();
        if steps.is_empty() {
            return Err(Error::Invalid("a signed flag needs at least one step".into()));
        }
        if let Some(v) = kernel.iter().chain(&steps).find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        if signs.len() != steps.len() || signs.contains(&Sign::Zero) {
            return Err(Error::Invalid("one nonzero sign per step is required".into()));
        }
        if weights.len() + 1 != steps.len() {
            return Err(Error::DimensionMismatch { expected: steps.len() - 1, found: weights.len() });
        }
        if weights.windows(2).any(|w| w[0] < w[1]) || weights.iter().any(Signed::is_negative) {
            return Err(Error::InvalidWeights("step weights must be nonincreasing and nonnegative".into()));
        }
        let all: Vec<Vec<Rational>> = kernel.iter().chain(&steps).cloned().collect();
        if span_rank(&all) != dim {
            return Err(Error::SingularBasis);
        }
        Ok(SignedFlag { dim, kernel, steps, signs, weights })
    }

    /// The flag of a trivially valued diagonal seminorm.
    pub fn from_diagonal(d: &DiagonalSignedSeminorm) -> Result<Self> {
        let basis = d.rational_basis().ok_or_else(|| {
            Error::NotTriviallyValued("signed flags need a rational basis".into())
        })?;
        let d = d.normalized();
        let first_infinite = d.weights().iter().position(Valuation::is_infinite).unwrap_or(d.dim());
        let steps = (1..=first_infinite).map(|i| basis[first_infinite - i].clone()).collect();
        let weights = (1..first_infinite)
            .map(|i| d.weights()[first_infinite - i].finite().cloned().expect("finite weight"))
            .collect();
        SignedFlag::new(
            basis[first_infinite..].to_vec(),
            steps,
            vec![Sign::Plus; first_infinite],
            weights,
        )
    }

    pub fn to_diagonal(&self) -> Result<DiagonalSignedSeminorm> {
        let l = self.steps.len();
        let mut basis = Vec::with_capacity(self.dim);
        let mut weights = Vec::with_capacity(self.dim);
        for j in 0..l {
            let i = l - j;
            let sign = self.signs[i - 1];
            basis.push(self.steps[i - 1].iter().map(|x| if sign == Sign::Minus { -x } else { x.clone() }).collect());
            weights.push(if j == 0 { Valuation::zero() } else { Valuation::Finite(self.weights[i - 1].clone()) });
        }
        basis.extend(self.kernel.iter().cloned());
        weights.extend(std::iter::repeat(Valuation::Infinite).take(self.kernel.len()));
        DiagonalSignedSeminorm::from_rational(&basis, weights)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    fn subspace(&self, i: usize) -> Vec<Vec<Rational>> {
        self.kernel.iter().chain(&self.steps[..i]).cloned().collect()
    }

    /// Whether both flags define the same signed seminorm up to homothety.
    pub fn equivalent(&self, other: &SignedFlag) -> bool {
        if self.dim != other.dim || self.steps.len() != other.steps.len() || self.weights != other.weights {
            return false;
        }
        if !same_span(&self.kernel, &other.kernel) {
            return false;
        }
        let mut common: Option<Sign> = None;
        for i in 0..self.steps.len() {
            let below = self.subspace(i);
            if !same_span(&self.subspace(i + 1), &other.subspace(i + 1)) {
                return false;
            }
            // a_i = κ a'_i modulo V_{i-1}.
            let mut columns = vec![other.steps[i].clone()];
            columns.extend(below.iter().cloned());
            let independent: Vec<Vec<Rational>> = reduce_to_basis(columns);
            let Some(coeffs) = solve(&independent, &self.steps[i]) else {
                return false;
            };
            let kappa = Sign::from_rational(&coeffs[0]);
            let delta = kappa * self.signs[i] * other.signs[i];
            match common {
                None => common = Some(delta),
                Some(c) if c != delta => return false,
                _ => {}
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        let vec = |v: &Vec<Rational>| v.iter().map(format_rational).collect::<Vec<_>>();
        json!({
            "dim": self.dim,
            "kernel": self.kernel.iter().map(vec).collect::<Vec<_>>(),
            "steps": self.steps.iter().zip(&self.signs)
                .map(|(a, s)| json!({"vector": vec(a), "sign": s.to_string()}))
                .collect::<Vec<_>>(),
            "weights": self.weights.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(doc: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Invalid(format!("signed flag: bad {what}"));
        let vector = |v: &Value| -> Result<Vec<Rational>> {
            v.as_array()
                .ok_or_else(|| bad("vector"))?
                .iter()
                .map(|x| parse_rational(&json_scalar(x).ok_or_else(|| bad("entry"))?))
                .collect()
        };
        let kernel = match doc.get("kernel") {
            None => Vec::new(),
            Some(k) => k.as_array().ok_or_else(|| bad("kernel"))?.iter().map(vector).collect::<Result<_>>()?,
        };
        let mut steps = Vec::new();
        let mut signs = Vec::new();
        for s in doc.get("steps").and_then(Value::as_array).ok_or_else(|| bad("steps"))? {
            steps.push(vector(s.get("vector").ok_or_else(|| bad("step"))?)?);
            let sign = s.get("sign").and_then(Value::as_str).unwrap_or("+");
            signs.push(Sign::parse(sign)?);
        }
        let weights = match doc.get("weights") {
            None => Vec::new(),
            Some(w) => vector(w)?,
        };
        SignedFlag::new(kernel, steps, signs, weights)
    }
}

fn json_scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Keeps the first column and then a maximal independent subset of the rest.
fn reduce_to_basis(columns: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for c in columns {
        out.push(c);
        if span_rank(&out) < out.len() {
            out.pop();
        }
    }
    out
}

/// The unsigned flag of `|‖·‖|`: the kernel, then the subspaces
/// `{f : ‖f‖ has valuation ≥ u}` for each finite level `u`, from the
/// smallest to the whole space.
#[derive(Clone, Debug)]
pub struct UnsignedFlag {
    dim: usize,
    kernel: Vec<Vec<Rational>>,
    levels: Vec<(Vec<Vec<Rational>>, Valuation)>,
}

impl PartialEq for UnsignedFlag {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && same_span(&self.kernel, &other.kernel)
            && self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|((a, u), (b, v))| u == v && same_span(a, b))
    }
}

impl UnsignedFlag {
    pub fn from_diagonal(d: &DiagonalSignedSeminorm) -> Result<Self> {
        let basis = d.rational_basis().ok_or_else(|| {
            Error::NotTriviallyValued("unsigned flags need a rational basis".into())
        })?;
        let d = d.normalized();
        let w = d.weights();
        let kernel = (0..d.dim()).filter(|&j| w[j].is_infinite()).map(|j| basis[j].clone()).collect();
        let mut finite: Vec<Valuation> = w.iter().filter(|x| !x.is_infinite()).cloned().collect();
        finite.dedup();
        let levels = finite
            .into_iter()
            .rev()
            .map(|u| {
                let space = (0..d.dim()).filter(|&j| w[j] >= u).map(|j| basis[j].clone()).collect();
                (space, u)
            })
            .collect();
        Ok(UnsignedFlag { dim: d.dim(), kernel, levels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kernel_dim(&self) -> usize {
        span_rank(&self.kernel)
    }

    /// Dimensions of the chain, kernel first.
    pub fn dimensions(&self) -> Vec<usize> {
        std::iter::once(self.kernel_dim())
            .chain(self.levels.iter().map(|(s, _)| span_rank(s)))
            .collect()
    }

    pub fn levels(&self) -> Vec<Valuation> {
        self.levels.iter().map(|(_, u)| u.clone()).collect()
    }

    /// Every step of the chain raises the dimension by one.
    pub fn is_complete(&self) -> bool {
        self.dimensions().windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn to_json(&self) -> Value {
        let vec = |v: &Vec<Rational>| v.iter().map(format_rational).collect::<Vec<_>>();
        json!({
            "dim": self.dim,
            "kernel": self.kernel.iter().map(vec).collect::<Vec<_>>(),
            "levels": self.levels.iter()
                .map(|(s, u)| json!({"span": s.iter().map(vec).collect::<Vec<_>>(), "weight": u.to_string()}))
                .collect::<Vec<_>>(),
            "complete": self.is_complete(),
        })
    }
}

/// The image of a signed seminorm under forgetting signs.
#[derive(Clone, Debug)]
pub struct PhiAbs {
    expr: SeminormExpr,
}

pub fn phi_abs(s: &SeminormExpr) -> PhiAbs {
    PhiAbs { expr: s.clone() }
}

impl PhiAbs {
    pub fn eval(&self, f: &[PuiseuxPoly]) -> Result<Valuation> {
        Ok(self.expr.eval(f)?.val().clone())
    }

    pub fn flag(&self) -> Result<UnsignedFlag> {
        UnsignedFlag::from_diagonal(&diagonalize(&self.expr)?)
    }
}

/// All signed seminorms, up to homothety, over a given unsigned one.
///
/// A complete flag of length `l` has `2^{l-1}` preimages; an incomplete
/// flag has infinitely many, reported as `InfiniteFiber`.
pub fn phi_fiber(flag: &UnsignedFlag) -> Result<Vec<SignedFlag>> {
    if !flag.is_complete() {
        return Err(Error::InfiniteFiber(format!(
            "flag dimensions {:?} skip a step",
            flag.dimensions()
        )));
    }
    let l = flag.levels.len();
    let mut steps = Vec::with_capacity(l);
    let mut below: Vec<Vec<Rational>> = flag.kernel.clone();
    for (space, _) in &flag.levels {
        let base = span_rank(&below);
        let a = space
            .iter()
            .find(|v| {
                let mut t = below.clone();
                t.push((*v).clone());
                span_rank(&t) > base
            })
            .expect("complete flags grow at each step")
            .clone();
        below.push(a.clone());
        steps.push(a);
    }
    let weights: Vec<Rational> = flag.levels[..l - 1]
        .iter()
        .map(|(_, u)| u.finite().cloned().expect("finite level"))
        .collect();
    if l > 20 {
        return Err(Error::CapExceeded { required: 1u128 << l, cap: 1 << 20 });
    }
    let mut classes: Vec<SignedFlag> = Vec::new();
    for mask in 0..(1usize << l) {
        let signs = (0..l).map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
        let candidate = SignedFlag::new(flag.kernel.clone(), steps.clone(), signs, weights.clone())?;
        if !classes.iter().any(|c| c.equivalent(&candidate)) {
            classes.push(candidate);
        }
    }
    Ok(classes)
}
