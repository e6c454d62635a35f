//! Truncated realizations of sl2-modules with exact action matrices.
//!
//! A module is stored by *level*: the number of `f`-steps below its highest
//! weight. A slice of depth `D` holds every basis vector of level `≤ D`, so
//! weight spaces are never cut in half. `E` and `H` are endomorphisms of the
//! slice and `F` maps it into the slice of depth `D + 1`, whose extra basis
//! vectors are kept at the end of the basis list. Identities involving words
//! in `E` and `F` are only meaningful on an [`InteriorRegion`].

mod build;
mod checks;
mod tr;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exactla::{Rational, SparseMat, SparseVec};
use crate::{Error, Result};

pub use build::{build_ln, build_verma, tensor_module};
pub use checks::{casimir, commutator_defect, verify_category_i, CategoryIReport};
pub use tr::{build_tr, tr_structure, TrStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    /// Chain `f^k a_{-r-2}` through the projective generator.
    A,
    /// Chain `f^k u_r` through the highest weight vector.
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    /// `v_i ∈ L_n`.
    Fin(usize),
    /// `w_k = x^k ∈ V_λ`.
    Poly(usize),
    /// `v_i ⊗ w_k`.
    Tensor(usize, usize),
    /// `f^k` applied to one of the two generators of `T_r`.
    ProjGen(GenKind, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Ln { n: u32 },
    Verma { lambda: i64 },
    Tr { r: u32, n: u32 },
    TensorLnV0 { n: u32 },
}

impl ModuleKind {
    /// Weight of the level-0 vectors.
    pub fn top_weight(&self) -> i64 {
        match *self {
            ModuleKind::Ln { n } | ModuleKind::TensorLnV0 { n } => n as i64,
            ModuleKind::Verma { lambda } => lambda,
            ModuleKind::Tr { r, .. } => r as i64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedModule {
    kind: ModuleKind,
    depth: usize,
    finite: bool,
    basis: Vec<BasisLabel>,
    levels: Vec<usize>,
    slice_dim: usize,
    index: BTreeMap<BasisLabel, usize>,
    act_e: SparseMat<Rational>,
    act_f: SparseMat<Rational>,
    act_h: SparseMat<Rational>,
}

/// Basis indices whose images under every `{E, F}`-word of length at most
/// `margin` stay inside the slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorRegion {
    pub margin: usize,
    pub indices: Vec<usize>,
}

impl TruncatedModule {
    pub(crate) fn assemble(
        kind: ModuleKind,
        depth: usize,
        finite: bool,
        basis: Vec<BasisLabel>,
        levels: Vec<usize>,
        act_e: SparseMat<Rational>,
        act_f: SparseMat<Rational>,
    ) -> Self {
        let slice_dim = levels.iter().filter(|&&l| l <= depth).count();
        debug_assert!(levels.windows(2).all(|w| w[0] <= w[1]), "basis must be sorted by level");
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let top = kind.top_weight();
        let act_h = SparseMat::diagonal(
            levels[..slice_dim].iter().map(|&l| Rational::from_integer((top - 2 * l as i64).into())).collect(),
        );
        TruncatedModule { kind, depth, finite, basis, levels, slice_dim, index, act_e, act_f, act_h }
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// True when the slice is the whole module (finite-dimensional `L_n`).
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// Dimension of the depth-`D` slice.
    pub fn dim(&self) -> usize {
        self.slice_dim
    }

    /// Dimension of the depth-`(D+1)` slice that receives `F`.
    pub fn ext_dim(&self) -> usize {
        self.basis.len()
    }

    /// Labels of the depth-`(D+1)` slice; the first [`dim`](Self::dim) form
    /// the depth-`D` slice.
    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn level(&self, i: usize) -> usize {
        self.levels[i]
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.kind.top_weight() - 2 * self.levels[i] as i64
    }

    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn act_e(&self) -> &SparseMat<Rational> {
        &self.act_e
    }

    pub fn act_f(&self) -> &SparseMat<Rational> {
        &self.act_f
    }

    pub fn act_h(&self) -> &SparseMat<Rational> {
        &self.act_h
    }

    /// Distinct weights of the slice, highest first.
    pub fn weights(&self) -> Vec<i64> {
        let mut out: Vec<i64> = (0..self.slice_dim).map(|i| self.weight(i)).collect();
        out.dedup();
        out
    }

    /// Slice indices of the weight-`mu` space, in basis order.
    pub fn weight_space(&self, mu: i64) -> Vec<usize> {
        (0..self.slice_dim).filter(|&i| self.weight(i) == mu).collect()
    }

    fn ext_weight_space(&self, mu: i64) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.weight(i) == mu).collect()
    }

    pub fn interior(&self, margin: usize) -> InteriorRegion {
        let indices = (0..self.slice_dim).filter(|&i| self.finite || self.levels[i] + margin <= self.depth).collect();
        InteriorRegion { margin, indices }
    }

    /// Restriction of `act_f` from weight `mu` to weight `mu - 2`.
    pub fn f_block(&self, mu: i64) -> SparseMat<Rational> {
        self.act_f.select(&self.ext_weight_space(mu - 2), &self.weight_space(mu))
    }

    /// Restriction of `act_e` from weight `mu` to weight `mu + 2`.
    pub fn e_block(&self, mu: i64) -> SparseMat<Rational> {
        self.act_e.select(&self.weight_space(mu + 2), &self.weight_space(mu))
    }

    pub fn vector(&self, entries: impl IntoIterator<Item = (BasisLabel, Rational)>) -> Result<SparseVec<Rational>> {
        let mut v = SparseVec::zeros(self.slice_dim);
        for (label, x) in entries {
            let i = self
                .index_of(label)
                .filter(|&i| i < self.slice_dim)
                .ok_or_else(|| Error::OutOfRange(alloc::format!("{label:?} is not in the slice")))?;
            v.add_at(i, x);
        }
        Ok(v)
    }

    fn check_len(&self, v: &SparseVec<Rational>) -> Result<()> {
        if v.len() != self.slice_dim {
            return Err(Error::DimensionMismatch { expected: (self.slice_dim, 1), found: (v.len(), 1) });
        }
        Ok(())
    }

    pub fn apply_e(&self, v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        self.check_len(v)?;
        Ok(self.act_e.mul_vec(v))
    }

    pub fn apply_h(&self, v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        self.check_len(v)?;
        Ok(self.act_h.mul_vec(v))
    }

    /// `F·v` as a vector of the depth-`(D+1)` slice.
    pub fn apply_f_ext(&self, v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        self.check_len(v)?;
        Ok(self.act_f.mul_vec(v))
    }

    /// `F·v`, failing if the image leaves the depth-`D` slice.
    pub fn apply_f(&self, v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        let w = self.apply_f_ext(v)?;
        match w.resized(self.slice_dim) {
            Some(w) => Ok(w),
            None => Err(Error::DepthExceeded { level: self.depth + 1, depth: self.depth }),
        }
    }

    /// Apply a word written left to right as operators act, so `"EF"` means
    /// `E(F(v))`.
    pub fn apply_word(&self, word: &[Op], v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
        let mut out = v.clone();
        for op in word.iter().rev() {
            out = match op {
                Op::E => self.apply_e(&out)?,
                Op::F => self.apply_f(&out)?,
                Op::H => self.apply_h(&out)?,
            };
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E,
    F,
    H,
}

pub(crate) fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}
