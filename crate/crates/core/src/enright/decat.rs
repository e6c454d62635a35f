use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hwv::coords_to_vector;
use super::{apply_f_power, highest_weight_vector, index_sets, projective_generator, Coord};
use crate::exactla::{Rational, SparseVec};
use crate::sl2mod::{tensor_module, BasisLabel, TruncatedModule};
use crate::{Error, Result};

/// Formal combination of classes `[M_i ⊠ N_k]` in the split Grothendieck
/// group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrothendieckVector {
    multiplicities: BTreeMap<Coord, BigInt>,
}

impl GrothendieckVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn class(i: usize, k: usize) -> Self {
        let mut v = Self::new();
        v.add(i, k, BigInt::from(1));
        v
    }

    pub fn add(&mut self, i: usize, k: usize, x: BigInt) {
        let slot = self.multiplicities.entry((i, k)).or_insert_with(BigInt::zero);
        *slot += x;
        if slot.is_zero() {
            self.multiplicities.remove(&(i, k));
        }
    }

    pub fn get(&self, i: usize, k: usize) -> BigInt {
        self.multiplicities.get(&(i, k)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coord, &BigInt)> + '_ {
        self.multiplicities.iter()
    }

    /// Classes of actual objects have nonnegative multiplicities.
    pub fn is_effective(&self) -> bool {
        self.multiplicities.values().all(|x| !x.is_negative())
    }

    /// Coefficients as a tensor vector of length `len`.
    fn realize(&self, m: &TruncatedModule, len: usize) -> Option<SparseVec<Rational>> {
        let mut v = SparseVec::zeros(len);
        for (&(i, k), x) in &self.multiplicities {
            let idx = m.index_of(BasisLabel::Tensor(i, k)).filter(|&idx| idx < len)?;
            v.add_at(idx, Rational::from_integer(x.clone()));
        }
        Some(v)
    }

    fn from_coefficients(coords: &BTreeMap<Coord, Rational>) -> Option<Self> {
        let mut v = Self::new();
        for (&(i, k), x) in coords {
            if !x.is_integer() {
                return None;
            }
            v.add(i, k, x.to_integer());
        }
        Some(v)
    }
}

/// `[F]` on `K_⊕`: `[M_i ⊠ N_k] ↦ (i+1)[M_{i+1} ⊠ N_k] + [M_i ⊠ N_{k+1}]`.
pub fn formal_f(n: u32, x: &GrothendieckVector) -> GrothendieckVector {
    let mut out = GrothendieckVector::new();
    for (&(i, k), m) in x.iter() {
        if i < n as usize {
            out.add(i + 1, k, m * BigInt::from(i + 1));
        }
        out.add(i, k + 1, m.clone());
    }
    out
}

/// `[-E]` on `K_⊕`: `[M_i ⊠ N_k] ↦ -(n-i+1)[M_{i-1} ⊠ N_k] + k(k-1)[M_i ⊠ N_{k-1}]`.
pub fn formal_minus_e(n: u32, x: &GrothendieckVector) -> GrothendieckVector {
    let mut out = GrothendieckVector::new();
    for (&(i, k), m) in x.iter() {
        if i > 0 {
            out.add(i - 1, k, -m * BigInt::from(n as usize - i + 1));
        }
        if k > 1 {
            out.add(i, k - 1, m * BigInt::from(k * (k - 1)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecategorificationReport {
    pub n: u32,
    pub depth: usize,
    /// `(i, k) ↦ v_i ⊗ w_k` is a bijection onto the slice basis.
    pub bijective: bool,
    pub f_intertwines: bool,
    pub minus_e_intertwines: bool,
    /// `act_f` has nonnegative integer entries.
    pub f_nonnegative: bool,
    /// `(s, [U_s] ↦ u_s)` for `s ∈ I' ∪ {n}`.
    pub u_classes: Vec<(i64, bool)>,
    /// `(s, l_max, ok)`: `f^l u_s` stays nonnegative and integral for every
    /// `l ≤ l_max`, the deepest power the slice holds.
    pub f_powers: Vec<(i64, usize, bool)>,
    /// `(r, [A_{-r-2}] ↦ a_{-r-2} + m u_{-r-2})` for `r ∈ I'`.
    pub a_classes: Vec<(i64, bool)>,
    /// Every class above has nonnegative multiplicities.
    pub effective: bool,
}

impl DecategorificationReport {
    pub fn passed(&self) -> bool {
        self.bijective
            && self.f_intertwines
            && self.minus_e_intertwines
            && self.f_nonnegative
            && self.effective
            && self.u_classes.iter().chain(&self.a_classes).all(|x| x.1)
            && self.f_powers.iter().all(|x| x.2)
    }
}

pub fn decategorify(n: u32, depth: usize) -> Result<DecategorificationReport> {
    if depth < n as usize + 1 {
        return Err(Error::OutOfRange(alloc::format!(
            "depth {depth} does not reach every generator (n + 1 = {})",
            n + 1
        )));
    }
    let t = tensor_module(n, depth);

    let mut seen = BTreeMap::new();
    let mut bijective = true;
    for (idx, label) in t.basis()[..t.dim()].iter().enumerate() {
        match *label {
            BasisLabel::Tensor(i, k) if i <= n as usize => bijective &= seen.insert((i, k), idx).is_none(),
            _ => bijective = false,
        }
    }
    let expected: usize = (0..=depth).map(|l| l.min(n as usize) + 1).sum();
    bijective &= seen.len() == expected && expected == t.dim();

    let mut f_intertwines = true;
    let mut minus_e_intertwines = true;
    for (&(i, k), &idx) in &seen {
        let class = GrothendieckVector::class(i, k);
        let x = SparseVec::unit(t.dim(), idx);
        let f_formal = formal_f(n, &class).realize(&t, t.ext_dim());
        f_intertwines &= f_formal.as_ref() == Some(&t.apply_f_ext(&x)?);
        let e_formal = formal_minus_e(n, &class).realize(&t, t.dim());
        minus_e_intertwines &= e_formal.as_ref() == Some(&-&t.apply_e(&x)?);
    }
    let f_nonnegative = t.act_f().triplets().all(|(_, _, x)| x.is_integer() && !x.is_negative());

    let sets = index_sets(n, 0)?;
    let mut effective = true;
    let mut u_classes = Vec::new();
    let mut f_powers = Vec::new();
    for s in sets.i_prime.iter().copied().chain(core::iter::once(n as i64)) {
        let rec = highest_weight_vector(n, s)?;
        let l_max = depth - ((n as i64 - s) / 2) as usize;
        let u = coords_to_vector(&t, &rec.p_vector())?;
        let positive = match apply_f_power(&t, &u, l_max) {
            Ok(_) => true,
            Err(Error::Verification(_)) => false,
            Err(e) => return Err(e),
        };
        f_powers.push((s, l_max, positive));
        let ok = match GrothendieckVector::from_coefficients(&rec.p_vector()) {
            Some(class) => {
                effective &= class.is_effective();
                let v = class.realize(&t, t.dim());
                let u = coords_to_vector(&t, &rec.p_vector())?;
                v.as_ref() == Some(&u) && t.apply_e(&u)?.is_zero()
            }
            None => false,
        };
        u_classes.push((s, ok));
    }
    let mut a_classes = Vec::new();
    for &r in &sets.i_prime {
        let rec = projective_generator(n, r)?;
        let coords = rec.final_vector();
        let ok = match GrothendieckVector::from_coefficients(&coords) {
            Some(class) => {
                effective &= class.is_effective();
                let v = class.realize(&t, t.dim());
                v.as_ref() == Some(&coords_to_vector(&t, &coords)?) && rec.passed()
            }
            None => false,
        };
        a_classes.push((r, ok));
    }

    Ok(DecategorificationReport {
        n,
        depth,
        bijective,
        f_intertwines,
        minus_e_intertwines,
        f_nonnegative,
        u_classes,
        f_powers,
        a_classes,
        effective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formal_f_on_top_class() {
        let fx = formal_f(2, &GrothendieckVector::class(0, 0));
        let mut expected = GrothendieckVector::class(1, 0);
        expected.add(0, 1, BigInt::from(1));
        assert_eq!(fx, expected);
    }

    #[test]
    fn u0_class_for_n4() {
        let rec = highest_weight_vector(4, 0).unwrap();
        let class = GrothendieckVector::from_coefficients(&rec.p_vector()).unwrap();
        assert_eq!(class.get(0, 2), BigInt::from(16));
        assert_eq!(class.get(1, 1), BigInt::from(8));
        assert!(class.is_effective());
    }

    #[test]
    fn reports_pass() {
        for n in 0..=5 {
            let rep = decategorify(n, n as usize + 4).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
        let rep = decategorify(2, 3).unwrap();
        assert_eq!(rep.u_classes, alloc::vec![(0, true), (2, true)]);
        assert_eq!(rep.f_powers, alloc::vec![(0, 2, true), (2, 3, true)]);
    }
}
