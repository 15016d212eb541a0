//! Signed seminorms on `(K^{n+1})*` and the finite-level signed
//! Goldman–Iwahori space.
//!
//! Weights are kept in valuation form: the multiplicative weight `c ≥ 0` is
//! stored as `-log c ∈ ℚ ∪ {∞}`, so the multiplicative condition
//! `c_0 ≥ c_1 ≥ …` becomes "nondecreasing". A value of a seminorm is an
//! element of ℝ𝕋.

mod decomposition;
mod diagonal;
mod diagonalize;
mod expr;
mod fixture;
mod flag;
mod limit;
mod linalg;
mod projection;

pub use decomposition::{cocircuit_decomposition, eval_pieces, CocircuitPiece};
pub use diagonal::DiagonalSignedSeminorm;
pub use diagonalize::diagonalize;
pub use expr::SeminormExpr;
pub use fixture::nondiag_fixture;
pub use flag::{phi_abs, phi_fiber, PhiAbs, SignedFlag, UnsignedFlag};
pub use limit::{reconstruct_from_family, CompatibleFamily, FamilyMember, FamilyMorphism};
pub use projection::{check_diagram_commutes, project_pi, Morphism};
