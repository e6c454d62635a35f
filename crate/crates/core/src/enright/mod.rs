//! Decomposition of `L_n ⊗ V_0` into projective covers and Verma modules.
//!
//! The pipeline fixes `λ = 0`: it computes the index sets, solves for the
//! highest-weight vectors `u_s` and checks them against the closed-form
//! coefficients `p_i`, builds the projective generators `a_{-s-2}` from the
//! Casimir Jordan structure, and audits the result weight by weight.

mod audit;
mod decat;
mod hwv;
mod index_sets;
mod projgen;
mod pseudoadjoint;

pub use audit::{casimir_blocks, decomposition_audit, AuditRow, CasimirBlock, CasimirBlocks, DecompositionAudit};
pub use decat::{decategorify, formal_f, formal_minus_e, DecategorificationReport, GrothendieckVector};
pub use hwv::{
    alpha_recursion_check, apply_f_power, descendant_record, highest_weight_vector, hwv_at_weight, p_coefficients,
    AlphaCheck, HwvRecord,
};
pub use index_sets::{closed_form_lambda_zero, index_sets, IndexSets};
pub use projgen::{beta_residual, casimir_on_weight, default_depth, projective_generator, ProjGenRecord};
pub use pseudoadjoint::{pseudoadjoint_check, PseudoadjointReport};

pub use crate::sl2mod::tensor_module;

/// Tensor coordinates `(i, k)` of `v_i ⊗ w_k`.
pub type Coord = (usize, usize);

pub(crate) fn casimir_value(t: i64) -> i64 {
    t * (t + 2)
}
