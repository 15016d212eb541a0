mod common;

use common::*;

use realtrop::hyperfield::{
    abs, hyper_sum, map_set, sgn, to_krasner, HyperSet, Hyperfield, Krasner, RealTropVal, Sign, TropVal,
};
use realtrop::valuation::Valuation;

fn grid() -> Vec<RealTropVal> {
    rt_grid(&[Valuation::from_int(0), Valuation::from_int(1), Valuation::from_int(2)])
}

fn subset<H: Hyperfield>(a: &HyperSet<H>, b: &HyperSet<H>) -> bool {
    match (a, b) {
        (HyperSet::Singleton(x), _) => b.contains(x),
        (HyperSet::Ball(v), HyperSet::Ball(w)) => v >= w,
        (HyperSet::Ball(_), HyperSet::Singleton(_)) => false,
    }
}

/// Every way of bracketing the list, as a set of outcomes.
fn bracketings(xs: &[RealTropVal]) -> Vec<HyperSet<RealTropVal>> {
    if xs.len() == 1 {
        return vec![HyperSet::Singleton(xs[0].clone())];
    }
    let mut out = Vec::new();
    for split in 1..xs.len() {
        for l in bracketings(&xs[..split]) {
            for r in bracketings(&xs[split..]) {
                out.push(l.hyper_add(&r));
            }
        }
    }
    out
}

#[test]
fn every_bracketing_agrees_with_the_flat_sum() {
    let g = grid();
    for n in 1..=4 {
        for xs in all_vectors(&g, n) {
            let flat = hyper_sum(&xs).unwrap();
            for b in bracketings(&xs) {
                assert_eq!(b, flat, "{xs:?}");
            }
        }
    }
    for n in 5..=6 {
        for xs in all_vectors(&g, n) {
            let flat = hyper_sum(&xs).unwrap();
            let left = xs[1..].iter().fold(HyperSet::Singleton(xs[0].clone()), |acc, x| acc.hyper_add(&HyperSet::Singleton(x.clone())));
            let right = xs[..n - 1].iter().rev().fold(HyperSet::Singleton(xs[n - 1].clone()), |acc, x| HyperSet::Singleton(x.clone()).hyper_add(&acc));
            assert_eq!(left, flat);
            assert_eq!(right, flat);
        }
    }
}

#[test]
fn additive_inverses() {
    for x in grid() {
        assert!(hyper_sum(&[x.clone(), x.mul(&RealTropVal::minus_one())]).unwrap().contains_zero());
        let s = sgn(&x);
        assert!(hyper_sum(&[s, s.neg()]).unwrap().contains_zero());
        let k = to_krasner(&x);
        assert!(hyper_sum(&[k, k.neg()]).unwrap().contains_zero());
        let a = abs(&x);
        assert!(hyper_sum(&[a.clone(), a.neg()]).unwrap().contains_zero());
    }
}

#[test]
fn homomorphisms_respect_hypersums() {
    let g = grid();
    for x in &g {
        for y in &g {
            let xy = hyper_sum(&[x.clone(), y.clone()]).unwrap();
            let a: HyperSet<TropVal> = map_set(&xy, abs, true);
            assert!(subset(&a, &hyper_sum(&[abs(x), abs(y)]).unwrap()), "{x} {y}");
            let s: HyperSet<Sign> = map_set(&xy, sgn, false);
            assert!(subset(&s, &hyper_sum(&[sgn(x), sgn(y)]).unwrap()), "{x} {y}");
            let k: HyperSet<Krasner> = map_set(&xy, to_krasner, false);
            assert!(subset(&k, &hyper_sum(&[to_krasner(x), to_krasner(y)]).unwrap()));
            // Multiplicativity.
            assert_eq!(abs(&x.mul(y)), abs(x).mul(&abs(y)));
            assert_eq!(sgn(&x.mul(y)), sgn(x).mul(&sgn(y)));
        }
    }
}

#[test]
fn krasner_and_sign_tables() {
    let one = Krasner(true);
    assert_eq!(hyper_sum(&[one, one]).unwrap(), HyperSet::Ball(Valuation::zero()));
    assert_eq!(one.neg(), one);
    assert_eq!(hyper_sum(&[Sign::Plus, Sign::Plus]).unwrap(), HyperSet::Singleton(Sign::Plus));
    assert!(hyper_sum(&[Sign::Plus, Sign::Minus]).unwrap().contains(&Sign::Zero));
    assert_eq!(Sign::Zero.neg(), Sign::Zero);
}
