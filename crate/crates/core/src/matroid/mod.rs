//! Matroids over hyperfields on finite ground sets: Grassmann–Plücker
//! functions, signed valuated circuits, cocircuits and covectors, together
//! with exhaustive axiom checkers.

mod circuits;
mod covectors;
mod gp;
mod signvec;

pub use circuits::{check_circuit_axioms, circuits_from_matrix, CircuitReport, SignedValuatedCircuit};
pub use covectors::{
    check_covector_axioms, cocircuits_from_chirotope, covector_closure, covector_zero_flat,
    real_tropical_cocircuits, CovectorPoset, CovectorReport,
};
pub use gp::{check_gp_relations, gp_from_matrix, pushforward_gp, AnyGp, GpReport, GrassmannPluecker};
pub use signvec::SignVector;
