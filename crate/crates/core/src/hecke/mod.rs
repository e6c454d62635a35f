//! Affine Hecke relations checked in faithful finite models.
//!
//! The degenerate algebra is modeled on `ℚ[S_n]` with `T_i = s_i` and
//! Jucys–Murphy elements for `X_k`; the nondegenerate one on the finite Hecke
//! algebra over `ℚ(q)` with the evaluation elements `X_{i+1} = q^{-1}T_iX_iT_i`.
//! Both are evaluations, not the universal algebras: `X_1` is `0` and `1`
//! respectively.

mod algebra;
mod perm;
mod relations;

pub use algebra::{
    hecke_multiply, BasisProduct, Element, GroupAlgebra, GroupAlgebraElement, HeckeElement, IwahoriHecke,
};
pub use perm::Permutation;
pub use relations::{
    associativity_fuzz, degeneration_check, evaluation_x, evaluation_x_inverse, jucys_murphy, verify_degenerate,
    verify_nondegenerate, x_bar, DegenerationReport, FuzzVerdict, RelationCheck, RelationReport,
};
