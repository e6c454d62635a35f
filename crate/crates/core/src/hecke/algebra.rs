use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Permutation;
use crate::exactla::{Field, RatFunc, Rational};

/// Multiplication rule on a basis indexed by permutations.
pub trait BasisProduct {
    type Scalar: Field;
    fn basis_product(u: &Permutation, w: &Permutation) -> Vec<(Permutation, Self::Scalar)>;
}

/// `ℚ[S_n]`, where `T_w` is the permutation `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupAlgebra;

/// The Iwahori–Hecke algebra `H_n^A(q)` over `ℚ(q)` with
/// `(T_i + 1)(T_i - q) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IwahoriHecke;

impl BasisProduct for GroupAlgebra {
    type Scalar = Rational;
    fn basis_product(u: &Permutation, w: &Permutation) -> Vec<(Permutation, Rational)> {
        alloc::vec![(u.compose(w), Rational::one())]
    }
}

/// `T_i · Σ c_w T_w`: `T_{s_i w}` if the length goes up, otherwise
/// `q T_{s_i w} + (q - 1) T_w`.
fn hecke_left_simple(i: usize, x: BTreeMap<Permutation, RatFunc>) -> BTreeMap<Permutation, RatFunc> {
    let mut out: BTreeMap<Permutation, RatFunc> = BTreeMap::new();
    let mut push = |w: Permutation, c: RatFunc| {
        let slot = out.entry(w).or_insert_with(RatFunc::zero);
        *slot = slot.clone() + c;
    };
    let q = RatFunc::q();
    for (w, c) in x {
        let sw = w.left_mul_simple(i);
        if w.has_left_descent(i) {
            push(sw, c.clone() * q.clone());
            push(w, c * (q.clone() - RatFunc::one()));
        } else {
            push(sw, c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl BasisProduct for IwahoriHecke {
    type Scalar = RatFunc;
    fn basis_product(u: &Permutation, w: &Permutation) -> Vec<(Permutation, RatFunc)> {
        let mut x = BTreeMap::from([(w.clone(), RatFunc::one())]);
        for &i in u.reduced_word().iter().rev() {
            x = hecke_left_simple(i, x);
        }
        x.into_iter().collect()
    }
}

/// Finite linear combination `Σ c_w T_w` of permutations of `{1, …, n}`.
pub struct Element<A: BasisProduct> {
    n: usize,
    terms: BTreeMap<Permutation, A::Scalar>,
    _algebra: PhantomData<A>,
}

pub type GroupAlgebraElement = Element<GroupAlgebra>;
pub type HeckeElement = Element<IwahoriHecke>;

impl<A: BasisProduct> Clone for Element<A> {
    fn clone(&self) -> Self {
        Element { n: self.n, terms: self.terms.clone(), _algebra: PhantomData }
    }
}

impl<A: BasisProduct> PartialEq for Element<A> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl<A: BasisProduct> fmt::Debug for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<A: BasisProduct> Element<A> {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new(), _algebra: PhantomData }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        Self::from_terms(w.size(), [(w, A::Scalar::one())])
    }

    /// `T_i` for the simple transposition `s_i`; panics outside `1 ≤ i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Permutation::simple(n, i).expect("generator index out of range"))
    }

    pub fn scalar(n: usize, c: A::Scalar) -> Self {
        Self::one(n).scale(&c)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, A::Scalar)>) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            assert_eq!(w.size(), n, "permutation size differs from the algebra");
            e.add_term(w, c);
        }
        e
    }

    fn add_term(&mut self, w: Permutation, c: A::Scalar) {
        let slot = self.terms.entry(w.clone()).or_insert_with(A::Scalar::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Permutation) -> A::Scalar {
        self.terms.get(w).cloned().unwrap_or_else(A::Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &A::Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn scale(&self, c: &A::Scalar) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }
}

impl HeckeElement {
    /// Substitute `q = at` and read `T_w` as `w`; `None` at a pole.
    pub fn specialize(&self, at: &Rational) -> Option<GroupAlgebraElement> {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.eval(at)?);
        }
        Some(out)
    }
}

impl<A: BasisProduct> Add for &Element<A> {
    type Output = Element<A>;
    fn add(self, rhs: &Element<A>) -> Element<A> {
        assert_eq!(self.n, rhs.n, "elements of different algebras");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<A: BasisProduct> Neg for &Element<A> {
    type Output = Element<A>;
    fn neg(self) -> Element<A> {
        self.scale(&-A::Scalar::one())
    }
}

impl<A: BasisProduct> Sub for &Element<A> {
    type Output = Element<A>;
    fn sub(self, rhs: &Element<A>) -> Element<A> {
        self + &(-rhs)
    }
}

impl<A: BasisProduct> Mul for &Element<A> {
    type Output = Element<A>;
    fn mul(self, rhs: &Element<A>) -> Element<A> {
        assert_eq!(self.n, rhs.n, "elements of different algebras");
        let mut out = Element::zero(self.n);
        for (u, a) in &self.terms {
            for (w, b) in &rhs.terms {
                let ab = a.clone() * b.clone();
                for (v, c) in A::basis_product(u, w) {
                    out.add_term(v, c * ab.clone());
                }
            }
        }
        out
    }
}

/// Product of `T_u` and `T_w` expanded in the `T` basis.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Poly;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn quadratic_rule() {
        let t1 = HeckeElement::generator(2, 1);
        let one = HeckeElement::one(2);
        let lhs = &t1 * &t1;
        let rhs = &one.scale(&q()) + &t1.scale(&(q() - RatFunc::one()));
        assert_eq!(lhs, rhs);
        let eig = &(&t1 + &one) * &(&t1 - &HeckeElement::scalar(2, q()));
        assert!(eig.is_zero());
    }

    #[test]
    fn braid_and_reduced_words() {
        let t1 = HeckeElement::generator(3, 1);
        let t2 = HeckeElement::generator(3, 2);
        let a = &(&t1 * &t2) * &t1;
        let b = &(&t2 * &t1) * &t2;
        let longest = Permutation::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(a, HeckeElement::basis(longest));
        assert_eq!(a, b);
    }

    #[test]
    fn group_algebra_at_q_one() {
        let t1 = HeckeElement::generator(3, 1).scale(&RatFunc::from_poly(Poly::q() + Poly::one()));
        let sq = &t1 * &t1;
        let special = sq.specialize(&Rational::one()).unwrap();
        let s1 = GroupAlgebraElement::generator(3, 1);
        let expected = &s1 * &s1;
        assert_eq!(special, expected.scale(&Rational::from_integer(4.into())));
    }
}
