//! Exact scalars and sparse linear algebra over ℚ and ℚ(q).
//!
//! Every other module uses these kernels as its oracle, so they are kept
//! deliberately plain: row-major sparse storage, deterministic pivoting
//! (lowest column first, then lowest row), and integer-preserving elimination
//! for rational input.

mod elim;
mod field;
mod poly;
mod sparse;

pub use elim::{generalized_kernel, nullspace, rank, solve, GeneralizedKernel};
pub use field::{int, primitive_integer, rat, Field, Rational};
pub use poly::{Poly, RatFunc};
pub use sparse::{SparseMat, SparseVec};
