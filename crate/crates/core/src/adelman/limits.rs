//! Kernels and cokernels from block matrices.
//!
//! For `t = (α′, α, α″): (A′ → A → A″) → (B′ → B → B″)` with arrows
//! `a′, a` and `b′, b`, the kernel blocks are `φ = (a′ 0; α′ 1)` and
//! `ψ = (α −b′; a 0)`; the cokernel blocks are `γ = (b′ α; 0 −a)` and
//! `ρ = (b α″; 0 −1)`. The kernel display does not fix the middle object, so
//! both placements are kept and the universal property decides
//! (see [`super::select_interpretation`]).

use alloc::string::String;

use super::linear::{block, MatrixSystem};
use super::{DoubleArrow, Mat, TripleMorphism};
use crate::exactla::int;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KernelReading {
    /// `A′⊕B′ →φ A⊕B′ →ψ B⊕A″`.
    AugmentedMiddle,
    /// `A′⊕B′ →(a′ 0) A →(α; a) B⊕A″`.
    PlainMiddle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CokernelReading {
    /// `B′⊕A →γ B⊕A″ →ρ B″⊕A″`.
    AugmentedMiddle,
    /// `B′⊕A →(b′ α) B →(b; 0) B″⊕A″`.
    PlainMiddle,
}

impl KernelReading {
    pub const ALL: [KernelReading; 2] = [KernelReading::AugmentedMiddle, KernelReading::PlainMiddle];

    pub fn name(self) -> &'static str {
        match self {
            KernelReading::AugmentedMiddle => "augmented-middle",
            KernelReading::PlainMiddle => "plain-middle",
        }
    }
}

impl CokernelReading {
    pub const ALL: [CokernelReading; 2] = [CokernelReading::AugmentedMiddle, CokernelReading::PlainMiddle];

    pub fn name(self) -> &'static str {
        match self {
            CokernelReading::AugmentedMiddle => "augmented-middle",
            CokernelReading::PlainMiddle => "plain-middle",
        }
    }
}

/// The placements the universal-property oracle selects on every seed tried.
pub const KERNEL_READING: KernelReading = KernelReading::AugmentedMiddle;
pub const COKERNEL_READING: CokernelReading = CokernelReading::AugmentedMiddle;

fn neg(m: &Mat) -> Mat {
    m.scale(&-int(1))
}

fn require_morphism(t: &TripleMorphism) -> Result<()> {
    if !t.is_morphism() {
        return Err(Error::Verification(String::from("squares do not commute")));
    }
    Ok(())
}

/// Inclusion of the kernel candidate; its source is the kernel object.
pub fn kernel_with(t: &TripleMorphism, reading: KernelReading) -> Result<TripleMorphism> {
    require_morphism(t)?;
    let (x, y) = (t.source(), t.target());
    let (d1, d0, d2) = x.dims();
    let (e1, e0, _) = y.dims();
    let (ap, a, bp) = (x.m1(), x.m2(), y.m1());
    let z = Mat::zeros;
    let phi_top = block(&[&[ap, &z(d0, e1)]])?;
    let (phi, psi, incl_mid) = match reading {
        KernelReading::AugmentedMiddle => (
            block(&[&[&phi_top], &[&block(&[&[t.x1(), &Mat::identity(e1)]])?]])?,
            block(&[&[t.x(), &neg(bp)], &[a, &z(d2, e1)]])?,
            block(&[&[&Mat::identity(d0), &z(d0, e1)]])?,
        ),
        KernelReading::PlainMiddle => (phi_top, block(&[&[t.x()], &[a]])?, Mat::identity(d0)),
    };
    let obj = DoubleArrow::new(phi, psi)?;
    TripleMorphism::new(
        obj,
        x.clone(),
        block(&[&[&Mat::identity(d1), &z(d1, e1)]])?,
        incl_mid,
        block(&[&[&z(d2, e0), &Mat::identity(d2)]])?,
    )
}

/// Projection onto the cokernel candidate; its target is the cokernel object.
pub fn cokernel_with(t: &TripleMorphism, reading: CokernelReading) -> Result<TripleMorphism> {
    require_morphism(t)?;
    let (x, y) = (t.source(), t.target());
    let (_, d0, d2) = x.dims();
    let (e1, e0, e2) = y.dims();
    let (a, bp, b) = (x.m2(), y.m1(), y.m2());
    let z = Mat::zeros;
    let gamma_top = block(&[&[bp, t.x()]])?;
    let (gamma, rho, proj_mid) = match reading {
        CokernelReading::AugmentedMiddle => (
            block(&[&[&gamma_top], &[&block(&[&[&z(d2, e1), &neg(a)]])?]])?,
            block(&[&[b, t.x2()], &[&z(d2, e0), &neg(&Mat::identity(d2))]])?,
            block(&[&[&Mat::identity(e0)], &[&z(d2, e0)]])?,
        ),
        CokernelReading::PlainMiddle => (gamma_top, block(&[&[b], &[&z(d2, e0)]])?, Mat::identity(e0)),
    };
    let obj = DoubleArrow::new(gamma, rho)?;
    TripleMorphism::new(
        y.clone(),
        obj,
        block(&[&[&Mat::identity(e1)], &[&z(d0, e1)]])?,
        proj_mid,
        block(&[&[&Mat::identity(e2)], &[&z(d2, e2)]])?,
    )
}

pub fn kernel(t: &TripleMorphism) -> Result<TripleMorphism> {
    kernel_with(t, KERNEL_READING)
}

pub fn cokernel(t: &TripleMorphism) -> Result<TripleMorphism> {
    cokernel_with(t, COKERNEL_READING)
}

/// Some morphism `v` with `incl∘v ≃ u`.
pub fn factor_through_kernel(incl: &TripleMorphism, u: &TripleMorphism) -> Result<Option<TripleMorphism>> {
    if incl.target() != u.target() {
        return Err(Error::OutOfRange(String::from("test morphism must land in the kernel's ambient object")));
    }
    let (k, x, w) = (incl.source(), incl.target(), u.source());
    let (k1, k0, k2) = k.dims();
    let (x1, _, _) = x.dims();
    let (w1, w0, w2) = w.dims();
    let mut sys = MatrixSystem::new();
    let v1 = sys.unknown(k1, w1);
    let v0 = sys.unknown(k0, w0);
    let v2 = sys.unknown(k2, w2);
    let s1 = sys.unknown(x1, w0);
    let s2 = sys.unknown(incl.x().rows(), w2);
    let (iw1, iw0, ik0, ik2, ix0) =
        (Mat::identity(w1), Mat::identity(w0), Mat::identity(k0), Mat::identity(k2), Mat::identity(incl.x().rows()));
    sys.equation(&[(v0, &ik0, w.m1()), (v1, &neg(k.m1()), &iw1)], &Mat::zeros(k0, w1))?;
    sys.equation(&[(v2, &ik2, w.m2()), (v0, &neg(k.m2()), &iw0)], &Mat::zeros(k2, w0))?;
    sys.equation(&[(v0, incl.x(), &iw0), (s1, &neg(x.m1()), &iw0), (s2, &ix0, &neg(w.m2()))], u.x())?;
    let Some(sol) = sys.solve()? else {
        return Ok(None);
    };
    let v = TripleMorphism::new(w.clone(), k.clone(), sol[v1].clone(), sol[v0].clone(), sol[v2].clone())?;
    verify_factor(v, u, |v| incl.after(v))
}

/// Some morphism `v` with `v∘proj ≃ u`.
pub fn factor_through_cokernel(proj: &TripleMorphism, u: &TripleMorphism) -> Result<Option<TripleMorphism>> {
    if proj.source() != u.source() {
        return Err(Error::OutOfRange(String::from("test morphism must leave the cokernel's ambient object")));
    }
    let (y, c, w) = (proj.source(), proj.target(), u.target());
    let (c1, c0, c2) = c.dims();
    let (_, y0, y2) = y.dims();
    let (w1, w0, w2) = w.dims();
    let mut sys = MatrixSystem::new();
    let v1 = sys.unknown(w1, c1);
    let v0 = sys.unknown(w0, c0);
    let v2 = sys.unknown(w2, c2);
    let s1 = sys.unknown(w1, y0);
    let s2 = sys.unknown(w0, y2);
    let (iw0, iw2, ic1, ic0, iy0) =
        (Mat::identity(w0), Mat::identity(w2), Mat::identity(c1), Mat::identity(c0), Mat::identity(y0));
    sys.equation(&[(v0, &iw0, c.m1()), (v1, &neg(w.m1()), &ic1)], &Mat::zeros(w0, c1))?;
    sys.equation(&[(v2, &iw2, c.m2()), (v0, &neg(w.m2()), &ic0)], &Mat::zeros(w2, c0))?;
    sys.equation(&[(v0, &iw0, proj.x()), (s1, &neg(w.m1()), &iy0), (s2, &iw0, &neg(y.m2()))], u.x())?;
    let Some(sol) = sys.solve()? else {
        return Ok(None);
    };
    let v = TripleMorphism::new(c.clone(), w.clone(), sol[v1].clone(), sol[v0].clone(), sol[v2].clone())?;
    verify_factor(v, u, |v| v.after(proj))
}

fn verify_factor(
    v: TripleMorphism,
    u: &TripleMorphism,
    recompose: impl Fn(&TripleMorphism) -> Result<TripleMorphism>,
) -> Result<Option<TripleMorphism>> {
    if !v.is_morphism() || super::homotopic(&recompose(&v)?, u)?.is_none() {
        return Err(Error::Verification(String::from("factorization failed re-check")));
    }
    Ok(Some(v))
}
