//! Random instances for the property checks.
//!
//! Arrows are products of thin random matrices so every rank occurs. Morphisms
//! are random integer combinations of a basis of the solution space of the
//! square conditions (plus a homotopy when one is demanded), so they commute
//! by construction rather than by rejection.

use alloc::vec::Vec;

use rand::Rng;

use super::linear::MatrixSystem;
use super::{DoubleArrow, Mat, TripleMorphism};
use crate::exactla::int;
use crate::Result;

fn random_entries<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Mat {
    let mut m = Mat::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, int(rng.gen_range(-2..=2)));
        }
    }
    m
}

/// `rows × cols` matrix of uniformly chosen rank (generically).
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Mat {
    let k = rng.gen_range(0..=rows.min(cols));
    &random_entries(rng, rows, k) * &random_entries(rng, k, cols)
}

/// Random double arrow with each dimension in `0..=max_dim`.
pub fn random_object<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> DoubleArrow {
    random_object_in(rng, 0, max_dim)
}

/// Random double arrow with each dimension in `min_dim..=max_dim`.
pub fn random_object_in<R: Rng + ?Sized>(rng: &mut R, min_dim: usize, max_dim: usize) -> DoubleArrow {
    let mut dim = || rng.gen_range(min_dim..=max_dim);
    let (d1, d0, d2) = (dim(), dim(), dim());
    DoubleArrow::new(random_matrix(rng, d0, d1), random_matrix(rng, d2, d0)).expect("shapes agree")
}

fn neg(m: &Mat) -> Mat {
    m.scale(&-int(1))
}

fn combine<R: Rng + ?Sized>(rng: &mut R, basis: &[Vec<Mat>], template: &[(usize, usize)]) -> Vec<Mat> {
    let mut out: Vec<Mat> = template.iter().map(|&(r, c)| Mat::zeros(r, c)).collect();
    for vector in basis {
        let coeff = int(rng.gen_range(-2..=2));
        for (acc, m) in out.iter_mut().zip(vector) {
            *acc = &*acc + &m.scale(&coeff);
        }
    }
    out
}

/// Registers `(x′, x, x″): s → t` and its square conditions.
fn morphism_unknowns(sys: &mut MatrixSystem, s: &DoubleArrow, t: &DoubleArrow) -> Result<[usize; 3]> {
    let (s1, s0, s2) = s.dims();
    let (t1, t0, t2) = t.dims();
    let x1 = sys.unknown(t1, s1);
    let x0 = sys.unknown(t0, s0);
    let x2 = sys.unknown(t2, s2);
    sys.equation(&[(x0, &Mat::identity(t0), s.m1()), (x1, &neg(t.m1()), &Mat::identity(s1))], &Mat::zeros(t0, s1))?;
    sys.equation(&[(x2, &Mat::identity(t2), s.m2()), (x0, &neg(t.m2()), &Mat::identity(s0))], &Mat::zeros(t2, s0))?;
    Ok([x1, x0, x2])
}

fn shapes(s: &DoubleArrow, t: &DoubleArrow) -> [(usize, usize); 3] {
    let (s1, s0, s2) = s.dims();
    let (t1, t0, t2) = t.dims();
    [(t1, s1), (t0, s0), (t2, s2)]
}

fn assemble(s: &DoubleArrow, t: &DoubleArrow, mut parts: Vec<Mat>) -> TripleMorphism {
    parts.truncate(3);
    let x2 = parts.pop().expect("three parts");
    let x0 = parts.pop().expect("three parts");
    let x1 = parts.pop().expect("three parts");
    TripleMorphism::new(s.clone(), t.clone(), x1, x0, x2).expect("solution shapes")
}

/// A random morphism `s → t`.
pub fn random_morphism<R: Rng + ?Sized>(rng: &mut R, s: &DoubleArrow, t: &DoubleArrow) -> Result<TripleMorphism> {
    let mut sys = MatrixSystem::new();
    morphism_unknowns(&mut sys, s, t)?;
    let basis = sys.homogeneous_basis();
    Ok(assemble(s, t, combine(rng, &basis, &shapes(s, t))))
}

/// A random `u: w → t.source()` with `t∘u ≃ 0`.
pub fn random_killed_by<R: Rng + ?Sized>(rng: &mut R, t: &TripleMorphism, w: &DoubleArrow) -> Result<TripleMorphism> {
    let (x, y) = (t.source(), t.target());
    let mut sys = MatrixSystem::new();
    let [_, u0, _] = morphism_unknowns(&mut sys, w, x)?;
    let (_, w0, w2) = w.dims();
    let (y1, y0, _) = y.dims();
    let s1 = sys.unknown(y1, w0);
    let s2 = sys.unknown(y0, w2);
    // α·u − b′·s1 − s2·w = 0.
    sys.equation(
        &[
            (u0, t.x(), &Mat::identity(w0)),
            (s1, &neg(y.m1()), &Mat::identity(w0)),
            (s2, &Mat::identity(y0), &neg(w.m2())),
        ],
        &Mat::zeros(y0, w0),
    )?;
    let basis = sys.homogeneous_basis();
    let mut template = shapes(w, x).to_vec();
    template.extend([(y1, w0), (y0, w2)]);
    Ok(assemble(w, x, combine(rng, &basis, &template)))
}

/// A random `u: t.target() → w` with `u∘t ≃ 0`.
pub fn random_killing<R: Rng + ?Sized>(rng: &mut R, t: &TripleMorphism, w: &DoubleArrow) -> Result<TripleMorphism> {
    let (x, y) = (t.source(), t.target());
    let mut sys = MatrixSystem::new();
    let [_, u0, _] = morphism_unknowns(&mut sys, y, w)?;
    let (w1, w0, _) = w.dims();
    let (_, x0, x2) = x.dims();
    let s1 = sys.unknown(w1, x0);
    let s2 = sys.unknown(w0, x2);
    // u·α − w′·s1 − s2·a = 0.
    sys.equation(
        &[
            (u0, &Mat::identity(w0), t.x()),
            (s1, &neg(w.m1()), &Mat::identity(x0)),
            (s2, &Mat::identity(w0), &neg(x.m2())),
        ],
        &Mat::zeros(w0, x0),
    )?;
    let basis = sys.homogeneous_basis();
    let mut template = shapes(y, w).to_vec();
    template.extend([(w1, x0), (w0, x2)]);
    Ok(assemble(y, w, combine(rng, &basis, &template)))
}

/// A random `g` homotopic to `f`: `f` plus a random null-homotopic morphism.
pub fn random_homotopic<R: Rng + ?Sized>(rng: &mut R, f: &TripleMorphism) -> Result<TripleMorphism> {
    let (s, t) = (f.source(), f.target());
    let mut sys = MatrixSystem::new();
    let [_, d0, _] = morphism_unknowns(&mut sys, s, t)?;
    let (_, s0, s2) = s.dims();
    let (t1, t0, _) = t.dims();
    let h1 = sys.unknown(t1, s0);
    let h2 = sys.unknown(t0, s2);
    sys.equation(
        &[
            (d0, &Mat::identity(t0), &Mat::identity(s0)),
            (h1, &neg(t.m1()), &Mat::identity(s0)),
            (h2, &Mat::identity(t0), &neg(s.m2())),
        ],
        &Mat::zeros(t0, s0),
    )?;
    let basis = sys.homogeneous_basis();
    let mut template = shapes(s, t).to_vec();
    template.extend([(t1, s0), (t0, s2)]);
    f.plus(&assemble(s, t, combine(rng, &basis, &template)))
}
