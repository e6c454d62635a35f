//! The integral Heisenberg algebra `H_ℤ`: generators `a_n`, `b_m` with
//! `a_n b_m = b_m a_n + b_{m-1} a_{n-1}`, `a_0 = b_0 = 1`.
//!
//! Elements are kept in the normal-monomial basis `b…b a…a`. The Fock module
//! here is the standard lowering model (polynomials in the `b`'s, `a_n·1 = 0`),
//! and `ã_n` is only a candidate reading of the `Ã(t)` series; its commutator
//! table is reported, not assumed.

mod fock;
mod fuzz;
mod rewrite;
mod series;

pub use fock::{fock_action, FockPoly};
pub use fuzz::{confluence_fuzz, confluence_trial, fock_fuzz, fock_trial, random_word, ConfluenceReport};
pub use rewrite::{inversion_measure, normal_form, rewrite, Gen, HElem, NormalMonomial, Rewrite, Strategy};
pub use series::{tilde_candidate, tilde_probe, verify_generating_identity, GeneratingResidual, TildeProbe};
