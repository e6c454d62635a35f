//! Adelman's abelianization over finite-dimensional rational matrices.
//!
//! Objects are double arrows `A′ → A → A″` with no exactness condition.
//! Morphisms are triples making both squares commute, taken modulo
//! `α ≃ β ⇔ α − β = b′·s1 + s2·a`. Homotopies, factorizations and inverses
//! are all found by solving one linear system in matrix unknowns, and every
//! witness is substituted back before it is returned.
//!
//! Objects are never compared for equality in assertions; sameness is always
//! homotopy equivalence.

mod checks;
mod homotopy;
mod limits;
mod linear;
mod object;
mod sample;

use crate::exactla::{Rational, SparseMat};

pub type Mat = SparseMat<Rational>;

pub use checks::{
    adelman_report, congruence_trial, select_interpretation, selection_trial, special_trial, stability_seeds,
    AdelmanConfig, AdelmanReport, CandidateOutcome, CongruenceReport, CongruenceTrial, InterpretationSelection,
    ReadingScore, SelectionTrial, SpecialTrial, MAX_DIM,
};
pub use homotopy::{homotopic, homotopy_inverse, is_zero_equivalent, null_homotopic, Homotopy};
pub use limits::{
    cokernel, cokernel_with, factor_through_cokernel, factor_through_kernel, kernel, kernel_with, CokernelReading,
    KernelReading, COKERNEL_READING, KERNEL_READING,
};
pub use linear::block;
pub use object::{DoubleArrow, TripleMorphism};
pub use sample::{
    random_homotopic, random_killed_by, random_killing, random_matrix, random_morphism, random_object, random_object_in,
};

#[cfg(test)]
mod tests;
