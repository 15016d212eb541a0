//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use realtrop::hyperfield::{RealTropVal, Sign};
use realtrop::puiseux::{rank, Matrix, PuiseuxPoly};
use realtrop::valuation::{rational, Rational, Valuation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(s: &str) -> PuiseuxPoly {
    s.parse().unwrap()
}

pub fn polys(xs: &[&str]) -> Vec<PuiseuxPoly> {
    xs.iter().map(|s| poly(s)).collect()
}

pub fn rt(s: &str) -> RealTropVal {
    RealTropVal::parse_pair(s).unwrap()
}

/// Up to three terms, coefficients in `[-3, 3]`, exponents in `½ℤ ∩ [-1, 2]`.
pub fn poly_strategy() -> impl Strategy<Value = PuiseuxPoly> {
    prop::collection::vec((-3i64..=3, -2i64..=4), 0..=3).prop_map(|terms| {
        PuiseuxPoly::from_terms(terms.into_iter().map(|(c, e)| (rational(c, 1), rational(e, 2))))
    })
}

pub fn nonzero_poly_strategy() -> impl Strategy<Value = PuiseuxPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

pub fn rational_vec_strategy(n: usize) -> impl Strategy<Value = Vec<PuiseuxPoly>> {
    prop::collection::vec(rational_strategy().prop_map(PuiseuxPoly::constant), n)
}

pub fn random_poly(rng: &mut impl Rng, max_terms: usize) -> PuiseuxPoly {
    let k = rng.gen_range(0..=max_terms);
    PuiseuxPoly::from_terms((0..k).map(|_| {
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        (rational(c, 1), rational(rng.gen_range(-2..=4), 2))
    }))
}

pub fn random_constant(rng: &mut impl Rng, bound: i64) -> PuiseuxPoly {
    PuiseuxPoly::from_int(rng.gen_range(-bound..=bound))
}

/// A random full-rank matrix; entries are zero with probability
/// `sparsity` and otherwise random Puiseux polynomials or constants.
pub fn random_full_rank(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    sparsity: f64,
    trivial: bool,
) -> Matrix<PuiseuxPoly> {
    loop {
        let data = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(sparsity) {
                    PuiseuxPoly::zero()
                } else if trivial {
                    let x = random_constant(rng, 3);
                    if x.is_zero() { PuiseuxPoly::one() } else { x }
                } else {
                    random_poly(rng, 2)
                }
            })
            .collect();
        let m = Matrix::new(rows, cols, data).unwrap();
        if rank(&m) == rows {
            return m;
        }
    }
}

pub fn random_rational_vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<PuiseuxPoly> {
    (0..n).map(|_| random_constant(rng, bound)).collect()
}

/// All nonzero ℝ𝕋 elements with the given valuations, plus zero.
pub fn rt_grid(vals: &[Valuation]) -> Vec<RealTropVal> {
    let mut out = vec![RealTropVal::new(Sign::Zero, Valuation::Infinite).unwrap()];
    for v in vals.iter().filter(|v| !v.is_infinite()) {
        for s in [Sign::Plus, Sign::Minus] {
            out.push(RealTropVal::new(s, v.clone()).unwrap());
        }
    }
    out
}

/// Every vector of length `n` over `elements`.
pub fn all_vectors<T: Clone>(elements: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elements.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Supports of the circuits of the column matroid, by brute-force search for
/// minimal dependent column sets.
pub fn circuit_supports_by_search(m: &Matrix<PuiseuxPoly>) -> Vec<u64> {
    let n = m.cols();
    let dependent = |mask: u64| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        rank(&m.select_columns(&idx)) < idx.len()
    };
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        if dependent(mask) && (0..n).filter(|&i| mask >> i & 1 == 1).all(|i| !dependent(mask & !(1 << i))) {
            out.push(mask);
        }
    }
    out.sort();
    out
}

use realtrop::seminorm::{DiagonalSignedSeminorm, SeminormExpr};

/// Nondecreasing weights in `½ℤ ∩ [0, 3]`, the tail possibly infinite but
/// never all of them.
pub fn random_weights(rng: &mut impl Rng, n: usize) -> Vec<Valuation> {
    let mut w: Vec<Valuation> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.15) {
                Valuation::Infinite
            } else {
                Valuation::Finite(rational(rng.gen_range(0..=6), 2))
            }
        })
        .collect();
    w.sort();
    if w[0].is_infinite() {
        w[0] = Valuation::zero();
    }
    w
}

pub fn random_diagonal(rng: &mut impl Rng, n: usize, trivial: bool) -> DiagonalSignedSeminorm {
    let m = random_full_rank(rng, n, n, 0.2, trivial);
    DiagonalSignedSeminorm::new(m.columns(), random_weights(rng, n)).unwrap()
}

pub fn random_expression(rng: &mut impl Rng, n: usize, leaves: usize, trivial: bool) -> SeminormExpr {
    let parts: Vec<SeminormExpr> = (0..leaves).map(|_| random_diagonal(rng, n, trivial).into()).collect();
    // Mix left- and right-nested shapes.
    if leaves == 3 && rng.gen_bool(0.5) {
        let mut it = parts.into_iter();
        let a = it.next().unwrap();
        let bc = SeminormExpr::compose(it.next().unwrap(), it.next().unwrap()).unwrap();
        SeminormExpr::compose(a, bc).unwrap()
    } else {
        SeminormExpr::compose_all(parts).unwrap()
    }
}

/// A full-rank set of `size ≥ n` functionals: the standard duals in random
/// order mixed with random ones.
pub fn random_functionals(rng: &mut impl Rng, n: usize, size: usize, trivial: bool) -> Vec<Vec<PuiseuxPoly>> {
    loop {
        let cols: Vec<Vec<PuiseuxPoly>> = (0..size)
            .map(|_| {
                (0..n)
                    .map(|_| if trivial { random_constant(rng, 2) } else { random_poly(rng, 1) })
                    .collect()
            })
            .collect();
        let m = Matrix::from_columns(&cols).unwrap();
        let distinct = (0..size).all(|i| (0..i).all(|j| cols[i] != cols[j]));
        if distinct && rank(&m) == n && cols.iter().all(|c| c.iter().any(|x| !x.is_zero())) {
            return cols;
        }
    }
}
