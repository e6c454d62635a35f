use alloc::string::String;

use super::linear::MatrixSystem;
use super::{DoubleArrow, Mat, TripleMorphism};
use crate::{Error, Result};

/// `s1: A → B′` and `s2: A″ → B` with `b′·s1 + s2·a = α − β`.
#[derive(Clone, Debug, PartialEq)]
pub struct Homotopy {
    pub s1: Mat,
    pub s2: Mat,
}

impl Homotopy {
    /// Substitute back into `b′·s1 + s2·a = α − β`.
    pub fn certifies(&self, f: &TripleMorphism, g: &TripleMorphism) -> bool {
        let (bp, a) = (f.target().m1(), f.source().m2());
        let shapes_ok = self.s1.rows() == bp.cols()
            && self.s1.cols() == a.cols()
            && self.s2.rows() == bp.rows()
            && self.s2.cols() == a.rows();
        shapes_ok && &(bp * &self.s1) + &(&self.s2 * a) == f.x() - g.x()
    }
}

fn check_parallel(f: &TripleMorphism, g: &TripleMorphism) -> Result<()> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::OutOfRange(String::from("homotopy needs parallel triples")));
    }
    Ok(())
}

/// Witness for `f ≃ g`, or `None` when the two are not homotopic.
pub fn homotopic(f: &TripleMorphism, g: &TripleMorphism) -> Result<Option<Homotopy>> {
    check_parallel(f, g)?;
    let (bp, a) = (f.target().m1(), f.source().m2());
    let mut sys = MatrixSystem::new();
    let s1 = sys.unknown(bp.cols(), a.cols());
    let s2 = sys.unknown(bp.rows(), a.rows());
    let id_a = Mat::identity(a.cols());
    let id_b = Mat::identity(bp.rows());
    sys.equation(&[(s1, bp, &id_a), (s2, &id_b, a)], &(f.x() - g.x()))?;
    let Some(mut sol) = sys.solve()? else {
        return Ok(None);
    };
    let h = Homotopy { s2: sol.pop().expect("two unknowns"), s1: sol.pop().expect("two unknowns") };
    if !h.certifies(f, g) {
        return Err(Error::Verification(String::from("homotopy witness failed substitution")));
    }
    Ok(Some(h))
}

pub fn null_homotopic(f: &TripleMorphism) -> Result<Option<Homotopy>> {
    homotopic(f, &TripleMorphism::zero(f.source(), f.target()))
}

/// `id ≃ 0`, i.e. the object is zero in the abelianization.
pub fn is_zero_equivalent(obj: &DoubleArrow) -> Result<bool> {
    Ok(null_homotopic(&TripleMorphism::identity(obj))?.is_some())
}

/// A `g` with `g∘f ≃ id` and `f∘g ≃ id`, found by one joint linear solve
/// and then re-checked through [`homotopic`].
pub fn homotopy_inverse(f: &TripleMorphism) -> Result<Option<TripleMorphism>> {
    let (x, y) = (f.source(), f.target());
    let (x1, x0, x2) = x.dims();
    let (y1, y0, y2) = y.dims();
    let mut sys = MatrixSystem::new();
    let g1 = sys.unknown(x1, y1);
    let g0 = sys.unknown(x0, y0);
    let g2 = sys.unknown(x2, y2);
    let s1 = sys.unknown(x1, x0);
    let s2 = sys.unknown(x0, x2);
    let t1 = sys.unknown(y1, y0);
    let t2 = sys.unknown(y0, y2);
    let (ix0, ix2) = (Mat::identity(x0), Mat::identity(x2));
    let (iy1, iy0) = (Mat::identity(y1), Mat::identity(y0));
    let neg = |m: &Mat| m.scale(&-crate::exactla::int(1));
    // g is a morphism Y → X.
    sys.equation(&[(g0, &ix0, y.m1()), (g1, &neg(x.m1()), &iy1)], &Mat::zeros(x0, y1))?;
    sys.equation(&[(g2, &ix2, y.m2()), (g0, &neg(x.m2()), &iy0)], &Mat::zeros(x2, y0))?;
    // g∘f − id = x′·s1 + s2·x on the middle, and dually for f∘g.
    let (nx1, nx2) = (neg(x.m1()), neg(x.m2()));
    sys.equation(&[(g0, &ix0, f.x()), (s1, &nx1, &ix0), (s2, &ix0, &nx2)], &ix0)?;
    let (ny1, ny2) = (neg(y.m1()), neg(y.m2()));
    sys.equation(&[(g0, f.x(), &iy0), (t1, &ny1, &iy0), (t2, &iy0, &ny2)], &iy0)?;
    let Some(sol) = sys.solve()? else {
        return Ok(None);
    };
    let g = TripleMorphism::new(y.clone(), x.clone(), sol[g1].clone(), sol[g0].clone(), sol[g2].clone())?;
    let ok = g.is_morphism()
        && homotopic(&g.after(f)?, &TripleMorphism::identity(x))?.is_some()
        && homotopic(&f.after(&g)?, &TripleMorphism::identity(y))?.is_some();
    if !ok {
        return Err(Error::Verification(String::from("homotopy inverse failed re-check")));
    }
    Ok(Some(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_dense(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn reflexive_with_zero_witness() {
        let obj = DoubleArrow::new(m(&[&[1], &[1]]), m(&[&[1, 0]])).unwrap();
        let id = TripleMorphism::identity(&obj);
        let h = homotopic(&id, &id).unwrap().unwrap();
        assert!(h.s1.is_zero() && h.s2.is_zero());
    }

    #[test]
    fn embedded_homotopy_is_equality() {
        let f = TripleMorphism::embed(&m(&[&[1, 2], &[3, 4]]));
        let g = TripleMorphism::embed(&m(&[&[1, 2], &[3, 5]]));
        assert!(homotopic(&f, &g).unwrap().is_none());
        assert!(homotopic(&f, &f).unwrap().is_some());
    }

    #[test]
    fn shifted_by_b_prime_is_homotopic() {
        // Source 0 → ℚ → 0 keeps the outer squares trivial; the target has b′ = (1, 1)ᵀ.
        let src = DoubleArrow::embed(1);
        let tgt = DoubleArrow::new(m(&[&[1], &[1]]), Mat::zeros(0, 2)).unwrap();
        let f = TripleMorphism::new(src.clone(), tgt.clone(), Mat::zeros(1, 0), m(&[&[2], &[0]]), Mat::zeros(0, 0))
            .unwrap();
        let s1 = m(&[&[5]]);
        let shifted = &(tgt.m1() * &s1) + f.x();
        let g = TripleMorphism::new(src, tgt, Mat::zeros(1, 0), shifted, Mat::zeros(0, 0)).unwrap();
        let h = homotopic(&g, &f).unwrap().unwrap();
        assert_eq!(h.s1, s1);
        assert!(h.s2.is_zero());
    }

    #[test]
    fn identity_arrow_objects_vanish() {
        // ℚ →1 ℚ → 0 and 0 → ℚ →1 ℚ are zero; 0 → ℚ → 0 is not.
        assert!(is_zero_equivalent(&DoubleArrow::new(Mat::identity(1), Mat::zeros(0, 1)).unwrap()).unwrap());
        assert!(is_zero_equivalent(&DoubleArrow::new(Mat::zeros(1, 0), Mat::identity(1)).unwrap()).unwrap());
        assert!(!is_zero_equivalent(&DoubleArrow::embed(1)).unwrap());
        assert!(is_zero_equivalent(&DoubleArrow::zero()).unwrap());
    }

    #[test]
    fn inverse_up_to_homotopy() {
        let f = TripleMorphism::embed(&m(&[&[2, 1], &[1, 1]]));
        let g = homotopy_inverse(&f).unwrap().unwrap();
        assert_eq!(g.x(), &m(&[&[1, -1], &[-1, 2]]));
        assert!(homotopy_inverse(&TripleMorphism::embed(&m(&[&[1, 1], &[1, 1]]))).unwrap().is_none());
        // ℚ → ℚ ⊕ ℚ killing one summand is an equivalence onto 0 → ℚ → 0.
        let big = DoubleArrow::new(m(&[&[0], &[1]]), Mat::zeros(0, 2)).unwrap();
        let p =
            TripleMorphism::new(big, DoubleArrow::embed(1), Mat::zeros(0, 1), m(&[&[1, 0]]), Mat::zeros(0, 0)).unwrap();
        assert!(p.is_morphism());
        assert!(homotopy_inverse(&p).unwrap().is_some());
    }
}
