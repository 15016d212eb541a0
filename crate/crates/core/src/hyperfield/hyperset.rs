use std::fmt;

use crate::error::{Error, Result};
use crate::valuation::Valuation;

use super::Hyperfield;

/// Outcome of an iterated hypersum: a single element, or the ball
/// `{0} ∪ {x : val(x) ≥ v}` of all elements of magnitude at most `exp(-v)`.
/// `Ball(∞)` is never constructed; it is the singleton zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HyperSet<H> {
    Singleton(H),
    Ball(Valuation),
}

impl<H: Hyperfield> HyperSet<H> {
    pub fn ball(v: Valuation) -> Self {
        if v.is_infinite() {
            HyperSet::Singleton(H::zero())
        } else {
            HyperSet::Ball(v)
        }
    }

    pub fn contains_zero(&self) -> bool {
        match self {
            HyperSet::Singleton(x) => x.is_zero(),
            HyperSet::Ball(_) => true,
        }
    }

    pub fn contains(&self, x: &H) -> bool {
        match self {
            HyperSet::Singleton(y) => x == y,
            HyperSet::Ball(v) => x.is_zero() || x.valuation() >= *v,
        }
    }

    /// The hypersum of two sets, `⋃ {x ⊕ y : x ∈ self, y ∈ other}`.
    pub fn hyper_add(&self, other: &Self) -> Self {
        match (self, other) {
            (HyperSet::Singleton(x), HyperSet::Singleton(y)) => sum_nonempty(&[x.clone(), y.clone()]),
            (HyperSet::Ball(v), HyperSet::Singleton(x)) | (HyperSet::Singleton(x), HyperSet::Ball(v)) => {
                if !x.is_zero() && x.valuation() < *v {
                    HyperSet::Singleton(x.clone())
                } else {
                    HyperSet::Ball(v.clone())
                }
            }
            (HyperSet::Ball(a), HyperSet::Ball(b)) => HyperSet::Ball(a.min(b).clone()),
        }
    }

    /// Elementwise product `c · S`.
    pub fn scale(&self, c: &H) -> Self {
        match self {
            HyperSet::Singleton(x) => HyperSet::Singleton(x.mul(c)),
            HyperSet::Ball(v) => HyperSet::ball(v.add(&c.valuation())),
        }
    }
}

impl<H: fmt::Display> fmt::Display for HyperSet<H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperSet::Singleton(x) => write!(f, "{{{x}}}"),
            HyperSet::Ball(v) => write!(f, "ball({v})"),
        }
    }
}

/// Iterated hypersum `x₁ ⊕ … ⊕ x_k`. The empty sum is rejected.
pub fn hyper_sum<H: Hyperfield>(xs: &[H]) -> Result<HyperSet<H>> {
    if xs.is_empty() {
        return Err(Error::Invalid("hypersum of an empty list".into()));
    }
    Ok(sum_nonempty(xs))
}

fn sum_nonempty<H: Hyperfield>(xs: &[H]) -> HyperSet<H> {
    let Some(v_min) = xs.iter().filter(|x| !x.is_zero()).map(H::valuation).min() else {
        return HyperSet::Singleton(H::zero());
    };
    let mut dominant = xs.iter().filter(|x| !x.is_zero() && x.valuation() == v_min);
    let first = dominant.next().expect("minimum is attained");
    let mut count = 1;
    for x in dominant {
        if x != first {
            return HyperSet::Ball(v_min);
        }
        count += 1;
    }
    if count == 1 || H::IDEMPOTENT {
        HyperSet::Singleton(first.clone())
    } else {
        HyperSet::Ball(v_min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::{Krasner, RealTropVal, Sign, TropVal};
    use crate::valuation::integer;

    fn rt(s: &str) -> RealTropVal {
        RealTropVal::parse_pair(s).unwrap()
    }

    #[test]
    fn real_tropical_sums() {
        assert_eq!(hyper_sum(&[rt("+:0"), rt("-:0")]).unwrap(), HyperSet::Ball(Valuation::zero()));
        assert_eq!(
            hyper_sum(&[rt("+:0"), rt("+:0"), rt("-:1")]).unwrap(),
            HyperSet::Singleton(rt("+:0"))
        );
        assert_eq!(
            hyper_sum(&[RealTropVal::zero()]).unwrap(),
            HyperSet::Singleton(RealTropVal::zero())
        );
        assert!(hyper_sum::<RealTropVal>(&[]).is_err());
    }

    #[test]
    fn other_hyperfields() {
        let k1 = Krasner(true);
        assert_eq!(hyper_sum(&[k1, k1]).unwrap(), HyperSet::Ball(Valuation::zero()));
        assert_eq!(hyper_sum(&[k1, Krasner(false)]).unwrap(), HyperSet::Singleton(k1));
        assert_eq!(hyper_sum(&[Sign::Plus, Sign::Plus]).unwrap(), HyperSet::Singleton(Sign::Plus));
        assert!(hyper_sum(&[Sign::Plus, Sign::Minus]).unwrap().contains_zero());
        let a = TropVal(Valuation::from_int(1));
        let b = TropVal(Valuation::from_int(2));
        assert_eq!(hyper_sum(&[a.clone(), b.clone()]).unwrap(), HyperSet::Singleton(a.clone()));
        let ball = hyper_sum(&[a.clone(), a.clone()]).unwrap();
        assert!(ball.contains(&b) && ball.contains(&a) && ball.contains(&TropVal::zero()));
        assert!(!ball.contains(&TropVal(Valuation::zero())));
    }

    #[test]
    fn ball_semantics() {
        let ball: HyperSet<RealTropVal> = HyperSet::Ball(Valuation::from_int(1));
        assert!(ball.contains_zero());
        assert!(ball.contains(&rt("-:2")));
        assert!(!ball.contains(&rt("+:0")));
        assert!(!HyperSet::Singleton(rt("+:0")).contains_zero());
        assert_eq!(ball.hyper_add(&HyperSet::Singleton(rt("+:0"))), HyperSet::Singleton(rt("+:0")));
        assert_eq!(ball.hyper_add(&HyperSet::Singleton(rt("+:1"))), ball);
        assert_eq!(ball.scale(&RealTropVal::plus(integer(2))), HyperSet::Ball(Valuation::from_int(3)));
        assert_eq!(HyperSet::<RealTropVal>::ball(Valuation::Infinite), HyperSet::Singleton(RealTropVal::zero()));
    }
}
