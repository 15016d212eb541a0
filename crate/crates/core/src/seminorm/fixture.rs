use crate::hyperfield::Sign;
use crate::puiseux::PuiseuxPoly;

/// A signed seminorm on `K^2` for the trivial absolute value which admits no
/// diagonalizing basis: the sign of the coordinate that is larger in
/// `t`-adic absolute value, preferring `x` on ties.
pub fn nondiag_fixture(x: &PuiseuxPoly, y: &PuiseuxPoly) -> Sign {
    if x.valuation() <= y.valuation() {
        x.sign()
    } else {
        y.sign()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PuiseuxPoly {
        s.parse().unwrap()
    }

    #[test]
    fn published_values() {
        assert_eq!(nondiag_fixture(&p("1"), &p("t")), Sign::Plus);
        assert_eq!(nondiag_fixture(&p("0"), &p("-t")), Sign::Minus);
        assert_eq!(nondiag_fixture(&p("t"), &p("-1")), Sign::Minus);
        assert_eq!(nondiag_fixture(&p("-2"), &p("3")), Sign::Minus);
        assert_eq!(nondiag_fixture(&p("0"), &p("0")), Sign::Zero);
    }

    #[test]
    fn small_perturbations_cannot_be_seen() {
        let bases = [
            (["1", "0"], ["0", "1"]),
            (["1", "1"], ["1", "-1"]),
            (["t", "1"], ["1", "t^2"]),
            (["t^(-1)", "3"], ["-1", "t^(1/2)"]),
        ];
        for (b1, b2) in bases {
            let b1: Vec<PuiseuxPoly> = b1.iter().map(|s| p(s)).collect();
            let b2: Vec<PuiseuxPoly> = b2.iter().map(|s| p(s)).collect();
            for lambda in [p("t^4"), p("-t^5"), p("2*t^(9/2)")] {
                let plus: Vec<PuiseuxPoly> = (0..2).map(|k| &(&lambda * &b1[k]) + &b2[k]).collect();
                let minus: Vec<PuiseuxPoly> = (0..2).map(|k| &b2[k] - &(&lambda * &b1[k])).collect();
                assert_eq!(
                    nondiag_fixture(&plus[0], &plus[1]),
                    nondiag_fixture(&minus[0], &minus[1])
                );
                assert_eq!(nondiag_fixture(&plus[0], &plus[1]), nondiag_fixture(&b2[0], &b2[1]));
            }
        }
    }
}
