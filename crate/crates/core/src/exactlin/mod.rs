//! Exact linear algebra over `Z`, `Q` and prime fields.

mod echelon;
mod graded;
mod invariants;
mod matrix;
mod ring;
mod snf;
mod sparse;

pub use echelon::{Echelon, Inserted};
pub use graded::GradedEchelon;
pub use invariants::{
    module_iso_check, normalize_torsion, parity_shift, GradedFreeModule, GradedModuleInvariants,
    Parity,
};
pub use matrix::SparseMat;
pub use ring::{format_elem, Elem, RingSpec};
pub use snf::{
    annihilates, generated_submodule_invariants, invariant_factors, kernel_basis,
    quotient_invariants, rank, snf, subquotient_invariants,
};
pub use sparse::SparseVec;
