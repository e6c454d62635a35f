use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hwv::descendant_record;
use super::{casimir_value, index_sets, Coord};
use crate::exactla::{generalized_kernel, primitive_integer, Rational, SparseMat, SparseVec};
use crate::sl2mod::{casimir, tensor_module, BasisLabel};
use crate::{Error, Result};

/// Generator `a_{-s-2}` of the projective summand `T_s ⊂ L_n ⊗ V_0`.
///
/// Coefficient lists are indexed by `j`, the coefficient of
/// `v_j ⊗ w_{(n+s+2)/2 - j}`; entry `(n+s+2)/2` is `β_{(n+s+2)/2, 0}` and must
/// vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjGenRecord {
    pub n: u32,
    pub s: i64,
    /// `s(s+2)`.
    pub c: i64,
    pub depth: usize,
    /// Primitive generator of `ker(Ω - c)` on weight `-s-2`.
    pub kernel: Vec<Rational>,
    /// Canonical excess representative `a` before the shift.
    pub q_list: Vec<Rational>,
    /// Closed-form coefficients of `u_{-s-2}`.
    pub p_list: Vec<Rational>,
    /// Smallest `m ≥ 0` with every `q_j + m p_j > 0`.
    pub shift_m: BigInt,
    pub final_coefficients: Vec<Rational>,
    /// Multiple of the normalized excess direction used in `a`.
    pub y: i64,
    /// `(Ω - c)·a`, never zero for a genuine generator.
    pub omega_image: Vec<Rational>,
    /// `(Ω - c)^2·a = 0`.
    pub nilpotent: bool,
    pub beta_residuals: Vec<(Coord, Rational)>,
    /// Same equation written in the `q_i` symbols with `k = (n - 2i + s + 2)/2`.
    pub q_form_residuals: Vec<(usize, Rational)>,
}

impl ProjGenRecord {
    /// Column `j` of the weight block is `v_j ⊗ w_{K-j}` with `K = (n+s+2)/2`.
    pub fn top_level(&self) -> usize {
        ((self.n as i64 + self.s + 2) / 2) as usize
    }

    pub fn boundary_zero(&self) -> bool {
        self.q_list.get(self.top_level()).is_none_or(Zero::is_zero)
            && self.final_coefficients.get(self.top_level()).is_none_or(Zero::is_zero)
    }

    pub fn positive(&self) -> bool {
        let support = self.top_level();
        self.final_coefficients[..support].iter().all(|x| x.is_integer() && x.is_positive())
    }

    pub fn beta_zero(&self) -> bool {
        self.beta_residuals.iter().all(|(_, x)| x.is_zero())
    }

    /// Shifted generator `a + m u_{-s-2}` as tensor coordinates.
    pub fn final_vector(&self) -> BTreeMap<Coord, Rational> {
        let top = self.top_level();
        self.final_coefficients
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| ((j, top - j), x.clone()))
            .collect()
    }

    /// Every invariant the generator is required to satisfy.
    pub fn passed(&self) -> bool {
        self.nilpotent
            && self.omega_image.iter().any(|x| !x.is_zero())
            && self.boundary_zero()
            && self.positive()
            && self.beta_zero()
    }
}

fn qi(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Coefficient of `v_i ⊗ w_k` in `(Ω - c)^2 a / 16` for `a = Σ β_{ik} v_i ⊗ w_k`
/// on the weight `-s-2` line.
pub fn beta_residual(n: u32, beta: &BTreeMap<Coord, Rational>, i: i64, k: i64) -> Rational {
    let n = n as i64;
    let b = |i: i64, k: i64| -> Rational {
        if i < 0 || k < 0 || i > n {
            return Rational::zero();
        }
        beta.get(&(i as usize, k as usize)).cloned().unwrap_or_else(Rational::zero)
    };
    let diag = i * (n - i + 1) - k * (k - 1);
    b(i - 2, k + 2) * qi((i - 1) * i * k * (k + 1) * (k + 1) * (k + 2))
        - b(i - 1, k + 1) * qi(i * k * (k + 1) * (2 * i * (n + 2 - i) - (n + 2) - 2 * k * k))
        + b(i, k) * qi(diag * diag - i * k * (k + 1) * (n - i + 1) - (i + 1) * (k - 1) * k * (n - i))
        + b(i + 1, k - 1) * qi((n - i) * (n + 2 * i * (n - i) - 2 * (k - 1) * (k - 1)))
        + b(i + 2, k - 2) * qi((n - i - 1) * (n - i))
}

fn q_form_residual(n: i64, s: i64, q: &[Rational], i: i64) -> Rational {
    let at = |j: i64| -> Rational {
        if j < 0 {
            return Rational::zero();
        }
        q.get(j as usize).cloned().unwrap_or_else(Rational::zero)
    };
    let k = (n - 2 * i + s + 2) / 2;
    let diag = i * (n - i + 1) - k * (k - 1);
    at(i - 2) * qi((i - 1) * i * k * (k + 1) * (k + 1) * (k + 2))
        - at(i - 1) * qi(i * k * (k + 1) * (2 * i * (n + 2 - i) - (n + 2) - 2 * k * k))
        + at(i) * qi(diag * diag - i * k * (k + 1) * (n - i + 1) - (i + 1) * (k - 1) * k * (n - i))
        + at(i + 1) * qi((n - i) * (n + 2 * i * (n - i) - 2 * (k - 1) * (k - 1)))
        + at(i + 2) * qi((n - i - 1) * (n - i))
}

fn gcd_of(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()))
}

/// `Ω - c` on the weight-`mu` space of `L_n ⊗ V_0`, columns ordered by `i`.
pub fn casimir_on_weight(n: u32, mu: i64, c: i64) -> Result<SparseMat<Rational>> {
    let n_i = n as i64;
    if mu > n_i || (n_i - mu) % 2 != 0 {
        return Err(Error::OutOfRange(alloc::format!("{mu} is not a weight of L_{n} ⊗ V_0")));
    }
    let t = tensor_module(n, ((n_i - mu) / 2) as usize);
    let space = t.weight_space(mu);
    casimir(&t).select(&space, &space).shift(&qi(c))
}

/// Default slice depth for generator computations.
pub fn default_depth(n: u32, s: i64) -> usize {
    (n as i64 + s + 10) as usize
}

pub fn projective_generator(n: u32, s: i64) -> Result<ProjGenRecord> {
    let sets = index_sets(n, 0)?;
    if !sets.i_prime.contains(&s) {
        return Err(Error::NotInIndexSet { n: n as i64, s });
    }
    let n_i = n as i64;
    let top = ((n_i + s + 2) / 2) as usize;
    let c = casimir_value(s);
    let depth = default_depth(n, s);
    let t = tensor_module(n, depth);
    let space = t.weight_space(-s - 2);
    for (j, &idx) in space.iter().enumerate() {
        debug_assert_eq!(t.basis()[idx], BasisLabel::Tensor(j, top - j));
    }
    let block = casimir(&t).select(&space, &space).shift(&qi(c))?;
    let gk = generalized_kernel(&block, 2)?;
    if gk.kernel.len() != 1 {
        return Err(Error::KernelDimension { expected: 1, found: gk.kernel.len() });
    }
    if gk.excess.len() != 1 {
        return Err(Error::KernelDimension { expected: 1, found: gk.excess.len() });
    }

    let u = gk.kernel[0].to_dense();
    let descendant = descendant_record(n, s)?;
    let p_list = descendant.p_list.clone();
    // the kernel must be the line through u_{-s-2}
    let mut p_padded = p_list.clone();
    p_padded.resize(u.len(), Rational::zero());
    primitive_integer(&mut p_padded);
    if p_padded != u {
        return Err(Error::Verification(alloc::format!(
            "ker(Ω - {c}) at weight {} is not spanned by u_{}",
            -s - 2,
            -s - 2
        )));
    }

    // excess direction with zero boundary coefficient at (K-1, 1)
    let b = top - 1;
    let mut g = gk.excess[0].to_dense();
    let ratio = g[b].clone() / u[b].clone();
    for (gj, uj) in g.iter_mut().zip(&u) {
        *gj -= ratio.clone() * uj.clone();
    }
    primitive_integer(&mut g);

    let combine =
        |y: i64| -> Vec<Rational> { u.iter().zip(&g).map(|(uj, gj)| uj.clone() + gj.clone() * qi(y)).collect() };
    let bound = u[b].numer().abs().max(BigInt::one());
    let mut y = 1i64;
    while BigInt::from(y) <= bound && !gcd_of(&combine(y)).is_one() {
        y += 1;
    }
    if BigInt::from(y) > bound {
        y = 1;
    }
    let q_list = combine(y);

    let a = SparseVec::from_dense(q_list.clone());
    let image = block.mul_vec(&a);
    let nilpotent = block.mul_vec(&image).is_zero();
    let omega_image = image.to_dense();

    // m = min{m ≥ 0 : q_j + m p_j > 0 for all j in the support}
    let mut shift_m = BigInt::zero();
    for (qj, pj) in q_list.iter().zip(&p_list) {
        let need = (-qj.clone() / pj.clone()).floor().to_integer() + BigInt::one();
        if need > shift_m {
            shift_m = need;
        }
    }
    let m_rat = Rational::from_integer(shift_m.clone());
    let final_coefficients: Vec<Rational> = q_list
        .iter()
        .enumerate()
        .map(|(j, qj)| qj.clone() + p_list.get(j).cloned().unwrap_or_else(Rational::zero) * m_rat.clone())
        .collect();

    let beta: BTreeMap<Coord, Rational> =
        q_list.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| ((j, top - j), x.clone())).collect();
    let beta_residuals =
        (0..q_list.len()).map(|i| ((i, top - i), beta_residual(n, &beta, i as i64, (top - i) as i64))).collect();
    let q_form_residuals = (0..q_list.len()).map(|i| (i, q_form_residual(n_i, s, &q_list, i as i64))).collect();

    Ok(ProjGenRecord {
        n,
        s,
        c,
        depth,
        kernel: u,
        q_list,
        p_list,
        shift_m,
        final_coefficients,
        y,
        omega_image,
        nilpotent,
        beta_residuals,
        q_form_residuals,
    })
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
    fn jordan_block_for_n2() {
        let omega = casimir_on_weight(2, -2, 0).unwrap();
        let cols: Vec<Vec<Rational>> = (0..3).map(|j| omega.column(j).to_dense()).collect();
        assert_eq!(cols, vec![ints(&[-8, -8, 0]), ints(&[8, 8, 0]), ints(&[0, 4, 8])]);

        let rec = projective_generator(2, 0).unwrap();
        assert_eq!(rec.kernel, ints(&[1, 1, 0]));
        assert_eq!(rec.q_list, ints(&[2, 1, 0]));
        assert_eq!(rec.omega_image, ints(&[-8, -8, 0]));
        assert_eq!(rec.shift_m, BigInt::zero());
        assert_eq!(rec.final_coefficients, ints(&[2, 1, 0]));
        assert!(rec.passed());
    }

    #[test]
    fn generators_pass_for_small_n() {
        for n in 0..=7u32 {
            for s in index_sets(n, 0).unwrap().i_prime {
                let rec = projective_generator(n, s).unwrap();
                assert!(rec.passed(), "n={n} s={s}: {rec:?}");
                let q_zero = rec.q_form_residuals.iter().all(|(_, x)| x.is_zero());
                assert!(q_zero, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn shift_preserves_omega_conditions() {
        let rec = projective_generator(6, 2).unwrap();
        let block = casimir_on_weight(6, -4, rec.c).unwrap();
        let a = SparseVec::from_dense(rec.final_coefficients.clone());
        let image = block.mul_vec(&a);
        assert_eq!(image.to_dense(), rec.omega_image);
        assert!(block.mul_vec(&image).is_zero());
    }

    #[test]
    fn rejects_s_outside_i_prime() {
        assert!(matches!(projective_generator(4, 4), Err(Error::NotInIndexSet { .. })));
        assert!(matches!(projective_generator(4, -2), Err(Error::NotInIndexSet { .. })));
    }

    #[test]
    fn beta_residual_of_kernel_vector_vanishes() {
        let u = BTreeMap::from([((0, 2), int(1)), ((1, 1), int(1))]);
        for i in 0..=2 {
            assert!(beta_residual(2, &u, i, 2 - i).is_zero());
        }
        // a vector outside the generalized eigenspace fails
        let bad = BTreeMap::from([((2, 0), int(1))]);
        assert!(!beta_residual(2, &bad, 2, 0).is_zero());
    }
}
