use core::fmt;

use alloc::format;
use alloc::string::String;

use super::Mat;
use crate::{Error, Result};

/// `A′ → A → A″` with arrows `m1: A′ → A` and `m2: A → A″`. Nothing is
/// assumed about `m2·m1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleArrow {
    m1: Mat,
    m2: Mat,
}

impl DoubleArrow {
    pub fn new(m1: Mat, m2: Mat) -> Result<Self> {
        if m1.rows() != m2.cols() {
            return Err(Error::DimensionMismatch { expected: (m2.rows(), m1.rows()), found: (m2.rows(), m2.cols()) });
        }
        Ok(DoubleArrow { m1, m2 })
    }

    /// `0 → ℚ^d → 0`.
    pub fn embed(d: usize) -> Self {
        DoubleArrow { m1: Mat::zeros(d, 0), m2: Mat::zeros(0, d) }
    }

    pub fn zero() -> Self {
        DoubleArrow::embed(0)
    }

    pub fn m1(&self) -> &Mat {
        &self.m1
    }

    pub fn m2(&self) -> &Mat {
        &self.m2
    }

    /// `(dim A′, dim A, dim A″)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.m1.cols(), self.m1.rows(), self.m2.rows())
    }
}

impl fmt::Display for DoubleArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.dims();
        write!(f, "Q^{a} -> Q^{b} -> Q^{c}")
    }
}

/// A triple `(x′, x, x″)` between double arrows. Construction checks shapes
/// only; whether the squares commute is [`TripleMorphism::is_morphism`].
#[derive(Clone, Debug, PartialEq)]
pub struct TripleMorphism {
    source: DoubleArrow,
    target: DoubleArrow,
    x1: Mat,
    x: Mat,
    x2: Mat,
}

impl TripleMorphism {
    pub fn new(source: DoubleArrow, target: DoubleArrow, x1: Mat, x: Mat, x2: Mat) -> Result<Self> {
        let (s1, s, s2) = source.dims();
        let (t1, t, t2) = target.dims();
        for (m, want) in [(&x1, (t1, s1)), (&x, (t, s)), (&x2, (t2, s2))] {
            if (m.rows(), m.cols()) != want {
                return Err(Error::DimensionMismatch { expected: want, found: (m.rows(), m.cols()) });
            }
        }
        Ok(TripleMorphism { source, target, x1, x, x2 })
    }

    pub fn identity(obj: &DoubleArrow) -> Self {
        let (a, b, c) = obj.dims();
        TripleMorphism {
            source: obj.clone(),
            target: obj.clone(),
            x1: Mat::identity(a),
            x: Mat::identity(b),
            x2: Mat::identity(c),
        }
    }

    pub fn zero(source: &DoubleArrow, target: &DoubleArrow) -> Self {
        let (s1, s, s2) = source.dims();
        let (t1, t, t2) = target.dims();
        TripleMorphism {
            source: source.clone(),
            target: target.clone(),
            x1: Mat::zeros(t1, s1),
            x: Mat::zeros(t, s),
            x2: Mat::zeros(t2, s2),
        }
    }

    /// The image of a matrix `f: ℚ^c → ℚ^r` under `0 → · → 0`.
    pub fn embed(f: &Mat) -> Self {
        TripleMorphism {
            source: DoubleArrow::embed(f.cols()),
            target: DoubleArrow::embed(f.rows()),
            x1: Mat::zeros(0, 0),
            x: f.clone(),
            x2: Mat::zeros(0, 0),
        }
    }

    pub fn source(&self) -> &DoubleArrow {
        &self.source
    }

    pub fn target(&self) -> &DoubleArrow {
        &self.target
    }

    pub fn x1(&self) -> &Mat {
        &self.x1
    }

    pub fn x(&self) -> &Mat {
        &self.x
    }

    pub fn x2(&self) -> &Mat {
        &self.x2
    }

    /// Both squares commute: `x·m1 = m1′·x′` and `x″·m2 = m2′·x`.
    pub fn is_morphism(&self) -> bool {
        &self.x * self.source.m1() == self.target.m1() * &self.x1
            && &self.x2 * self.source.m2() == self.target.m2() * &self.x
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TripleMorphism) -> Result<TripleMorphism> {
        if first.target != self.source {
            return Err(Error::OutOfRange(format!(
                "cannot compose: target {} is not source {}",
                first.target, self.source
            )));
        }
        Ok(TripleMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            x1: &self.x1 * &first.x1,
            x: &self.x * &first.x,
            x2: &self.x2 * &first.x2,
        })
    }

    fn same_ends(&self, other: &TripleMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::OutOfRange(String::from("triples have different ends")));
        }
        Ok(())
    }

    pub fn plus(&self, other: &TripleMorphism) -> Result<TripleMorphism> {
        self.same_ends(other)?;
        Ok(TripleMorphism { x1: &self.x1 + &other.x1, x: &self.x + &other.x, x2: &self.x2 + &other.x2, ..self.clone() })
    }

    pub fn minus(&self, other: &TripleMorphism) -> Result<TripleMorphism> {
        self.same_ends(other)?;
        Ok(TripleMorphism { x1: &self.x1 - &other.x1, x: &self.x - &other.x, x2: &self.x2 - &other.x2, ..self.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_dense(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn identity_and_zero_are_morphisms() {
        let obj = DoubleArrow::new(m(&[&[1], &[2]]), m(&[&[1, -1]])).unwrap();
        assert!(TripleMorphism::identity(&obj).is_morphism());
        assert!(TripleMorphism::zero(&obj, &DoubleArrow::embed(3)).is_morphism());
    }

    #[test]
    fn embedded_objects_accept_any_matrix() {
        let f = TripleMorphism::embed(&m(&[&[3], &[-7]]));
        assert_eq!(f.source().dims(), (0, 1, 0));
        assert_eq!(f.target().dims(), (0, 2, 0));
        assert!(f.is_morphism());
    }

    #[test]
    fn non_commuting_triple_is_rejected() {
        let obj = DoubleArrow::new(m(&[&[1]]), m(&[&[1]])).unwrap();
        let t = TripleMorphism::new(obj.clone(), obj, m(&[&[1]]), m(&[&[2]]), m(&[&[2]])).unwrap();
        assert!(!t.is_morphism());
    }

    #[test]
    fn embedding_is_functorial() {
        let f = m(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let g = m(&[&[2, 0, 1], &[1, 1, 0], &[0, -2, 1]]);
        let composite = TripleMorphism::embed(&f).after(&TripleMorphism::embed(&g)).unwrap();
        assert_eq!(composite, TripleMorphism::embed(&(&f * &g)));
        assert_eq!(TripleMorphism::embed(&Mat::identity(3)), TripleMorphism::identity(&DoubleArrow::embed(3)));
    }

    #[test]
    fn shape_errors() {
        assert!(DoubleArrow::new(Mat::zeros(2, 1), Mat::zeros(1, 3)).is_err());
        let a = DoubleArrow::embed(1);
        assert!(TripleMorphism::new(a.clone(), a, Mat::zeros(0, 0), Mat::zeros(2, 1), Mat::zeros(0, 0)).is_err());
    }
}
