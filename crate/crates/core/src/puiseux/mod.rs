//! The ordered valued ring `ℚ[t^ℚ]` of finite real Puiseux polynomials.
//!
//! An element is a finite sum `Σ a_q t^q` with rational coefficients and
//! exponents. Positivity is decided by the leading (lowest-exponent)
//! coefficient, and the valuation is the leading exponent. Every ring
//! operation the crate needs (sums, products, determinants, Cramer
//! numerators) stays inside this ring.

mod fval;
mod matrix;
mod parse;
mod poly;

pub use fval::FineValue;
pub use matrix::{
    det, det_bounded, det_rational, inverse_rational, rank, rank_rational, Matrix,
    DEFAULT_MAX_DET_SIZE,
};
pub use parse::{parse_puiseux, parse_puiseux_with, ParseOptions};
pub use poly::{PuiseuxPoly, Term};
