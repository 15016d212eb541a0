//! Exact computations in real tropical geometry over ordered non-Archimedean
//! fields: Puiseux arithmetic, hyperfields, oriented valuated matroids, real
//! tropical linear spaces, real Bergman fans and signed seminorms.

pub mod combinatorics;
pub mod error;
pub mod hyperfield;
pub mod matroid;
pub mod puiseux;
pub mod seminorm;
pub mod tropical;
pub mod valuation;

pub use error::{Error, Result};

/// Bounds on the exhaustive enumerations performed by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of tuples, subsets or relation instances to enumerate.
    pub enumeration_cap: u128,
    /// Maximum size of a non-constant matrix whose determinant is expanded.
    pub max_det_size: usize,
    /// Maximum number of covectors produced by a closure.
    pub closure_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 5_000_000,
            max_det_size: puiseux::DEFAULT_MAX_DET_SIZE,
            closure_cap: 200_000,
        }
    }
}
