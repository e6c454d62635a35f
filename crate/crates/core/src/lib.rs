//! Exact-arithmetic workbench for sl2 weight modules.
//!
//! The crate builds truncated slices of `L_n`, Verma modules `V_λ`, the
//! tensor product `L_n ⊗ V_0` and the projective covers `T_r`, and checks the
//! algebraic claims about them (highest-weight vectors with positive integer
//! coefficients, Casimir Jordan structure, the quartic functor identity) with
//! exact rational arithmetic. Alongside sit finite models of the affine Hecke
//! algebras, the integral Heisenberg algebra, and Adelman's abelianization of
//! the category of rational matrices.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command line
//! live in the `verma-lab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adelman;
pub mod enright;
mod error;
pub mod exactla;
pub mod hecke;
pub mod heisenberg;
mod rng;
pub mod sl2mod;

pub use error::{Error, Result};
pub use exactla::{RatFunc, Rational};
pub use rng::trial_rng;
