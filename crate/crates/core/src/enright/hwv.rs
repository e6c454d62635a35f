use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{index_sets, Coord};
use crate::exactla::{nullspace, Rational, SparseVec};
use crate::sl2mod::{tensor_module, BasisLabel, TruncatedModule};
use crate::{Error, Result};

/// Closed-form coefficients `p_0, …, p_{(n+r)/2}` of the highest weight vector
/// of weight `s = -r-2`:
///
/// `p_i = 4^{(n+r)/2-i} · (n+r+2)/(n+r-2i+2) · ∏_{j<i}(n+r-2j)² · ∏_{ν=i}^{(n+r-2)/2}(n-ν)`.
pub fn p_coefficients(n: u32, r: i64) -> Result<Vec<Rational>> {
    let n = n as i64;
    let sum = n + r;
    if sum < 0 || sum % 2 != 0 {
        return Err(Error::Parity { n, r });
    }
    let half = sum / 2;
    let big = |x: i64| BigInt::from(x);
    let out = (0..=half)
        .map(|i| {
            let mut num = num_traits::pow(big(4), (half - i) as usize) * big(sum + 2);
            for j in 0..i {
                num *= big((sum - 2 * j) * (sum - 2 * j));
            }
            for nu in i..half {
                num *= big(n - nu);
            }
            Rational::new(num, big(sum - 2 * i + 2))
        })
        .collect();
    Ok(out)
}

/// A highest weight vector of `L_n ⊗ V_0` solved by linear algebra and
/// compared with the closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct HwvRecord {
    pub n: u32,
    pub s: i64,
    /// Kernel generator scaled to coprime positive integers.
    pub coefficients: BTreeMap<Coord, Rational>,
    /// Closed-form `p_j` (just `[1]` for `s = n`).
    pub p_list: Vec<Rational>,
    pub kernel_dim: usize,
}

impl HwvRecord {
    /// The vector `u_s = Σ p_j v_j ⊗ w_{(n-s)/2-j}` in the closed-form
    /// normalization.
    pub fn p_vector(&self) -> BTreeMap<Coord, Rational> {
        let top = ((self.n as i64 - self.s) / 2) as usize;
        self.p_list.iter().enumerate().map(|(j, p)| ((j, top - j), p.clone())).collect()
    }

    /// `c` with `p_vector = c · coefficients`, when the two are proportional.
    pub fn closed_form_ratio(&self) -> Option<Rational> {
        let p = self.p_vector();
        if p.len() != self.coefficients.len() || p.keys().ne(self.coefficients.keys()) {
            return None;
        }
        let (first, p0) = p.iter().next()?;
        let ratio = p0.clone() / self.coefficients[first].clone();
        p.iter().all(|(c, x)| x == &(self.coefficients[c].clone() * ratio.clone())).then_some(ratio)
    }
}

fn labels_to_coords(m: &TruncatedModule, v: &SparseVec<Rational>) -> BTreeMap<Coord, Rational> {
    v.iter()
        .map(|(i, x)| match m.basis()[i] {
            BasisLabel::Tensor(a, b) => ((a, b), x.clone()),
            other => unreachable!("tensor module holds {other:?}"),
        })
        .collect()
}

pub(crate) fn coords_to_vector(m: &TruncatedModule, coords: &BTreeMap<Coord, Rational>) -> Result<SparseVec<Rational>> {
    m.vector(coords.iter().map(|(&(i, k), x)| (BasisLabel::Tensor(i, k), x.clone())))
}

/// Basis of `ker e` on the weight-`s` space of `L_n ⊗ V_0`.
pub fn hwv_at_weight(n: u32, s: i64) -> Result<Vec<BTreeMap<Coord, Rational>>> {
    let n_i = n as i64;
    if s > n_i || (n_i - s) % 2 != 0 {
        return Err(Error::OutOfRange(alloc::format!("{s} is not a weight of L_{n} ⊗ V_0")));
    }
    let level = ((n_i - s) / 2) as usize;
    let t = tensor_module(n, level);
    let block = t.e_block(s);
    let space = t.weight_space(s);
    Ok(nullspace(&block)
        .into_iter()
        .map(|v| {
            let lifted = SparseVec::from_entries(t.dim(), v.iter().map(|(j, x)| (space[j], x.clone())));
            labels_to_coords(&t, &lifted)
        })
        .collect())
}

/// Defined for `s ∈ I' ∪ I'''` (`λ = 0`), the weights that head a summand.
pub fn highest_weight_vector(n: u32, s: i64) -> Result<HwvRecord> {
    let sets = index_sets(n, 0)?;
    if !sets.i_prime.contains(&s) && !sets.i_triple_prime.contains(&s) {
        return Err(Error::NotInIndexSet { n: n as i64, s });
    }
    let kernel = hwv_at_weight(n, s)?;
    if kernel.len() != 1 {
        return Err(Error::KernelDimension { expected: 1, found: kernel.len() });
    }
    let coefficients = kernel.into_iter().next().unwrap();
    let p_list = if s == n as i64 { alloc::vec![Rational::one()] } else { p_coefficients(n, -s - 2)? };
    let record = HwvRecord { n, s, coefficients, p_list, kernel_dim: 1 };
    if record.closed_form_ratio().is_none() {
        return Err(Error::Verification(alloc::format!(
            "highest weight vector for n={n}, s={s} is not proportional to the closed form"
        )));
    }
    Ok(record)
}

/// Residuals of `α_{i+1,k}(n-i) = α_{i,k+1}(k+1)k` on a highest weight vector.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaCheck {
    /// One entry per `(i, k)` with `k ≥ 1`, `0 ≤ i ≤ n-1`, `n-2i-2k-2 = s`.
    pub residuals: Vec<(Coord, Rational)>,
    /// The `k = 0` equations and `α_{n,k+1} k(k+1) = 0` hold.
    pub boundary_zero: bool,
    /// `4^{(n+r)/2} ∏_{ν=(n-r+2)/2}^{n} ν`, the seed of the closed form.
    pub seed: Rational,
    pub seed_matches_p0: bool,
    /// `seed / α_{0,(n-s)/2}`, the factor between the solved and closed forms.
    pub scale: Rational,
}

impl AlphaCheck {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|(_, x)| x.is_zero()) && self.boundary_zero && self.seed_matches_p0
    }
}

pub fn alpha_recursion_check(record: &HwvRecord) -> AlphaCheck {
    let n = record.n as i64;
    let s = record.s;
    let alpha = |i: i64, k: i64| -> Rational {
        if i < 0 || k < 0 {
            return Rational::zero();
        }
        record.coefficients.get(&(i as usize, k as usize)).cloned().unwrap_or_else(Rational::zero)
    };
    let q = |x: i64| Rational::from_integer(x.into());
    let mut residuals = Vec::new();
    let mut boundary_zero = true;
    // n - 2i - 2k - 2 = s  ⇔  i + k = (n - s - 2) / 2
    let total = (n - s - 2) / 2;
    if total >= 0 {
        for i in 0..=total.min(n - 1) {
            let k = total - i;
            let res = alpha(i + 1, k) * q(n - i) - alpha(i, k + 1) * q((k + 1) * k);
            if k >= 1 {
                residuals.push(((i as usize, k as usize), res));
            } else {
                boundary_zero &= res.is_zero();
            }
        }
        boundary_zero &= (alpha(n, total - n + 1) * q((total - n + 1) * (total - n))).is_zero();
    }

    let r = -s - 2;
    let top = (n - s) / 2;
    let seed = if record.s == n {
        Rational::one()
    } else {
        let mut x = num_traits::pow(BigInt::from(4), ((n + r) / 2) as usize);
        for nu in (n - r + 2) / 2..=n {
            x *= BigInt::from(nu);
        }
        Rational::from_integer(x)
    };
    let seed_matches_p0 = record.p_list.first() == Some(&seed);
    let a0 = alpha(0, top);
    let scale = if a0.is_zero() { Rational::zero() } else { seed.clone() / a0 };
    AlphaCheck { residuals, boundary_zero, seed, seed_matches_p0, scale }
}

/// `f^l · v` on the tensor module, checking that nonnegative integer input
/// stays nonnegative and integral.
pub fn apply_f_power(m: &TruncatedModule, v: &SparseVec<Rational>, l: usize) -> Result<SparseVec<Rational>> {
    let nonneg_int = |w: &SparseVec<Rational>| w.iter().all(|(_, x)| x.is_integer() && !x.is_negative());
    let positive_input = nonneg_int(v);
    let mut out = v.clone();
    for step in 0..l {
        out = m.apply_f(&out)?;
        if positive_input && !nonneg_int(&out) {
            return Err(Error::Verification(alloc::format!(
                "f^{} produced a negative or fractional coefficient",
                step + 1
            )));
        }
    }
    Ok(out)
}

/// The singular vector `u_{-s-2} = f^{s+1} u_s` as a record of weight
/// `-s-2`, with `u_s` in the closed-form normalization. Its coefficients are
/// proportional to `p_coefficients(n, s)`.
pub fn descendant_record(n: u32, s: i64) -> Result<HwvRecord> {
    let top = highest_weight_vector(n, s)?;
    let target = -s - 2;
    let level = ((n as i64 - target) / 2) as usize;
    let t = tensor_module(n, level);
    let u = coords_to_vector(&t, &top.p_vector())?;
    let image = apply_f_power(&t, &u, (s + 1) as usize)?;
    if !t.apply_e(&image)?.is_zero() {
        return Err(Error::Verification(alloc::format!("f^{} u_{s} is not singular", s + 1)));
    }
    let record = HwvRecord {
        n,
        s: target,
        coefficients: labels_to_coords(&t, &image),
        p_list: p_coefficients(n, s)?,
        kernel_dim: 1,
    };
    if record.closed_form_ratio().is_none() {
        return Err(Error::Verification(alloc::format!(
            "f^{} u_{s} is not proportional to the closed form for n={n}",
            s + 1
        )));
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use alloc::vec;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(p_coefficients(4, -2).unwrap(), ints(&[16, 8]));
        assert_eq!(p_coefficients(2, -2).unwrap(), ints(&[1]));
        assert_eq!(p_coefficients(6, -4).unwrap(), ints(&[24, 8]));
        assert!(matches!(p_coefficients(4, -3), Err(Error::Parity { .. })));
        assert!(matches!(p_coefficients(2, -4), Err(Error::Parity { .. })));
    }

    #[test]
    fn top_vector_is_v0_w0() {
        let rec = highest_weight_vector(2, 2).unwrap();
        assert_eq!(rec.coefficients, BTreeMap::from([((0, 0), int(1))]));
    }

    #[test]
    fn weight_zero_in_l4() {
        let rec = highest_weight_vector(4, 0).unwrap();
        assert_eq!(rec.coefficients, BTreeMap::from([((0, 2), int(2)), ((1, 1), int(1))]));
        assert_eq!(rec.closed_form_ratio(), Some(int(8)));
        assert_eq!(rec.p_vector(), BTreeMap::from([((0, 2), int(16)), ((1, 1), int(8))]));
    }

    #[test]
    fn weight_zero_in_l2() {
        let rec = highest_weight_vector(2, 0).unwrap();
        assert_eq!(rec.coefficients, BTreeMap::from([((0, 1), int(1))]));
        assert!(alpha_recursion_check(&rec).residuals.is_empty());
    }

    #[test]
    fn s_outside_index_set_rejected() {
        assert!(matches!(highest_weight_vector(4, 4 - 2 * 5), Err(Error::NotInIndexSet { .. })));
        assert!(matches!(highest_weight_vector(3, -3), Err(Error::NotInIndexSet { .. })));
    }

    #[test]
    fn odd_n_has_a_verma_summand_at_minus_one() {
        for n in [1, 3, 5, 7] {
            let rec = highest_weight_vector(n, -1).unwrap();
            assert!(rec.closed_form_ratio().is_some());
            assert!(alpha_recursion_check(&rec).all_zero());
        }
    }

    #[test]
    fn alpha_residual_examples() {
        let check = alpha_recursion_check(&highest_weight_vector(4, 0).unwrap());
        // α_{1,1}·4 − α_{0,2}·2 in the gcd normalization (2, 1)
        assert_eq!(check.residuals, vec![((0, 1), int(0))]);
        assert!(check.all_zero());
        assert_eq!(check.scale, int(8));
        let check = alpha_recursion_check(&highest_weight_vector(6, 2).unwrap());
        assert_eq!(check.residuals.len(), 1);
        assert!(check.all_zero());
    }

    #[test]
    fn f_power_examples() {
        let t = tensor_module(2, 5);
        let u0 = t.vector([(BasisLabel::Tensor(0, 1), int(1))]).unwrap();
        let fu = apply_f_power(&t, &u0, 1).unwrap();
        let expected = t.vector([(BasisLabel::Tensor(1, 1), int(1)), (BasisLabel::Tensor(0, 2), int(1))]).unwrap();
        assert_eq!(fu, expected);
        assert_eq!(apply_f_power(&t, &u0, 0).unwrap(), u0);
        assert!(matches!(apply_f_power(&t, &u0, 6), Err(Error::DepthExceeded { .. })));
    }

    #[test]
    fn descendant_follows_alpha_recursion() {
        let rec = descendant_record(4, 0).unwrap();
        assert_eq!(rec.coefficients, BTreeMap::from([((0, 3), int(16)), ((1, 2), int(24)), ((2, 1), int(16))]));
        assert_eq!(rec.p_list, ints(&[192, 288, 192]));
        assert_eq!(rec.closed_form_ratio(), Some(int(12)));
        let check = alpha_recursion_check(&rec);
        assert!(check.all_zero());
        assert_eq!(check.residuals.len(), 2);
    }
}
