use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{normal_form, Gen, HElem};
use crate::{Error, Result};

/// Integer polynomial in the commuting `b_m`, the lowering Fock module:
/// `b_m` multiplies, `a_n · 1 = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockPoly {
    // sorted b-indices → coefficient
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl FockPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn monomial(mut b: Vec<u32>) -> Self {
        b.sort_unstable();
        let mut p = Self::zero();
        p.add_term(b, BigInt::from(1));
        p
    }

    pub fn add_term(&mut self, b: Vec<u32>, c: BigInt) {
        let slot = self.terms.entry(b.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Largest `Σ m_i` over the support.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|b| b.iter().sum::<u32>()).max().unwrap_or(0)
    }
}

impl fmt::Display for FockPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: HElem = self.terms.iter().fold(HElem::zero(), |acc, (b, c)| {
            let word: Vec<Gen> = b.iter().map(|&m| Gen::B(m)).collect();
            &acc + &normal_form(&word).scale(c)
        });
        write!(f, "{h}")
    }
}

/// `h · p`: rewrite `h b_{m_1} ⋯ b_{m_k}` to normal form and drop every
/// monomial that still ends in an `a`.
pub fn fock_action(h: &HElem, p: &FockPoly, degree_bound: u32) -> Result<FockPoly> {
    if p.degree() > degree_bound {
        return Err(Error::DegreeOverflow { degree: p.degree(), bound: degree_bound });
    }
    let mut out = FockPoly::zero();
    for (mono, c) in h.terms() {
        for (b, d) in p.terms() {
            let mut word = mono.word();
            word.extend(b.iter().map(|&m| Gen::B(m)));
            for (term, e) in normal_form(&word).terms() {
                if term.a_indices().is_empty() {
                    out.add_term(term.b_indices().to_vec(), c * d * e);
                }
            }
        }
    }
    if out.degree() > degree_bound {
        return Err(Error::DegreeOverflow { degree: out.degree(), bound: degree_bound });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lowering_examples() {
        let a1 = HElem::a(1);
        assert_eq!(fock_action(&a1, &FockPoly::monomial(vec![1]), 8).unwrap(), FockPoly::vacuum());
        assert!(fock_action(&HElem::a(3), &FockPoly::vacuum(), 8).unwrap().is_zero());
        let two = fock_action(&HElem::a(2), &FockPoly::monomial(vec![1, 1]), 8).unwrap();
        assert_eq!(two, FockPoly::vacuum());
    }

    #[test]
    fn degree_guard() {
        let r = fock_action(&HElem::b(5), &FockPoly::monomial(vec![4]), 8);
        assert!(matches!(r, Err(Error::DegreeOverflow { degree: 9, bound: 8 })));
    }

    #[test]
    fn composition_is_an_action() {
        let x = &HElem::a(2) * &HElem::b(1);
        let y = &HElem::b(2) * &HElem::a(1);
        let p = FockPoly::monomial(vec![1, 3]);
        let lhs = fock_action(&(&x * &y), &p, 12).unwrap();
        let rhs = fock_action(&x, &fock_action(&y, &p, 12).unwrap(), 12).unwrap();
        assert_eq!(lhs, rhs);
    }
}
