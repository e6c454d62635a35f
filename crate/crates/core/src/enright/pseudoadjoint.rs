use alloc::vec::Vec;

use crate::exactla::{Rational, SparseVec};
use crate::sl2mod::{casimir, Op, TruncatedModule};
use crate::{Error, Result};

use Op::{E, F};

/// Outcome of `B² + C² + 2cC + c² = BC + CB + 2cB` with
/// `B = (EF)² + (FE)² + 2EF + 2FE`, `C = EFFE + FEEF`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoadjointReport {
    pub c: i64,
    pub margin: usize,
    /// Interior basis vectors checked.
    pub checked: usize,
    /// Interior indices with a nonzero residual.
    pub failures: Vec<usize>,
    /// `B - C = Ω` on every checked vector.
    pub b_minus_c_is_casimir: bool,
    /// `B - C - c` vanishes on every checked vector (Ω acts by the scalar c).
    pub semisimple: bool,
}

impl PseudoadjointReport {
    pub fn residual_zero(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.residual_zero() && self.b_minus_c_is_casimir
    }
}

fn word_sum(m: &TruncatedModule, terms: &[(i64, &[Op])], v: &SparseVec<Rational>) -> Result<SparseVec<Rational>> {
    let mut out = SparseVec::zeros(m.dim());
    for &(coeff, word) in terms {
        let w = m.apply_word(word, v)?;
        out = &out + &w.scale(&Rational::from_integer(coeff.into()));
    }
    Ok(out)
}

pub fn pseudoadjoint_check(m: &TruncatedModule, c: i64, margin: usize) -> Result<PseudoadjointReport> {
    if margin < 8 {
        return Err(Error::OutOfRange(alloc::format!("margin {margin} is below 8, the length of B²")));
    }
    let b_terms: [(i64, &[Op]); 4] = [(1, &[E, F, E, F]), (1, &[F, E, F, E]), (2, &[E, F]), (2, &[F, E])];
    let c_terms: [(i64, &[Op]); 2] = [(1, &[E, F, F, E]), (1, &[F, E, E, F])];
    let b = |v: &SparseVec<Rational>| word_sum(m, &b_terms, v);
    let cc = |v: &SparseVec<Rational>| word_sum(m, &c_terms, v);
    let scalar = Rational::from_integer(c.into());
    let omega = casimir(m);

    let interior = m.interior(margin).indices;
    let mut failures = Vec::new();
    let mut b_minus_c_is_casimir = true;
    let mut semisimple = true;
    for &i in &interior {
        let x = SparseVec::unit(m.dim(), i);
        let bx = b(&x)?;
        let cx = cc(&x)?;
        let lhs = &(&b(&bx)? + &cc(&cx)?)
            + &(&cx.scale(&(scalar.clone() * Rational::from_integer(2.into())))
                + &x.scale(&(scalar.clone() * scalar.clone())));
        let rhs = &(&cc(&bx)? + &b(&cx)?) + &bx.scale(&(scalar.clone() * Rational::from_integer(2.into())));
        if lhs != rhs {
            failures.push(i);
        }
        let diff = &bx - &cx;
        b_minus_c_is_casimir &= diff == omega.mul_vec(&x);
        semisimple &= diff == x.scale(&scalar);
    }
    Ok(PseudoadjointReport { c, margin, checked: interior.len(), failures, b_minus_c_is_casimir, semisimple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2mod::{build_ln, build_tr, build_verma};

    #[test]
    fn verma_zero() {
        let v0 = build_verma(0, 12);
        let rep = pseudoadjoint_check(&v0, 0, 8).unwrap();
        assert!(rep.passed() && rep.semisimple);
        assert_eq!(rep.checked, 5);
    }

    #[test]
    fn ln_two() {
        let rep = pseudoadjoint_check(&build_ln(2), 8, 8).unwrap();
        assert!(rep.passed() && rep.semisimple);
        assert_eq!(rep.checked, 3);
    }

    #[test]
    fn t0_is_not_semisimple() {
        let t0 = build_tr(0, 2, 12).unwrap();
        let rep = pseudoadjoint_check(&t0, 0, 8).unwrap();
        assert!(rep.passed());
        assert!(!rep.semisimple);
    }

    #[test]
    fn wrong_scalar_fails() {
        let rep = pseudoadjoint_check(&build_verma(2, 10), 0, 8).unwrap();
        assert!(!rep.residual_zero());
        assert!(rep.b_minus_c_is_casimir);
    }

    #[test]
    fn margin_guard() {
        assert!(matches!(pseudoadjoint_check(&build_ln(2), 8, 7), Err(Error::OutOfRange(_))));
    }
}
