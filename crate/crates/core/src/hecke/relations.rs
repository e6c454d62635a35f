use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupAlgebraElement, HeckeElement, Permutation};
use crate::exactla::{Poly, RatFunc, Rational};
use crate::{Error, Result};

/// One instance of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: &'static str,
    /// Index values, e.g. `"i=1,j=3"`.
    pub instance: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub model: &'static str,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> + '_ {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn push(&mut self, relation: &'static str, instance: String, holds: bool) {
        self.checks.push(RelationCheck { relation, instance, holds });
    }
}

/// `X_k = Σ_{j<k} (j k)`, so `X_1 = 0`.
pub fn jucys_murphy(n: usize, k: usize) -> Result<GroupAlgebraElement> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("X_{k} is not defined for n={n}")));
    }
    let terms = (1..k).map(|j| (Permutation::transposition(n, j, k).unwrap(), Rational::one()));
    Ok(GroupAlgebraElement::from_terms(n, terms))
}

/// The degenerate affine Hecke relations with `T_i = s_i`, `X_k` Jucys–Murphy.
pub fn verify_degenerate(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("degenerate relations need n ≥ 2, got {n}")));
    }
    let t: Vec<GroupAlgebraElement> = (1..n).map(|i| GroupAlgebraElement::generator(n, i)).collect();
    let x: Vec<GroupAlgebraElement> = (1..=n).map(|k| jucys_murphy(n, k).unwrap()).collect();
    let one = GroupAlgebraElement::one(n);
    let mut rep = RelationReport { n, model: "jucys-murphy", checks: Vec::new() };
    let ti = |i: usize| &t[i - 1];
    let xi = |i: usize| &x[i - 1];
    for i in 1..n {
        rep.push("T_i^2=1", format!("i={i}"), (ti(i) * ti(i)) == one);
    }
    braid_checks(&mut rep, n, |i| ti(i).clone());
    for i in 1..=n {
        for j in i + 1..=n {
            rep.push("X_iX_j=X_jX_i", format!("i={i},j={j}"), (xi(i) * xi(j)) == (xi(j) * xi(i)));
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if i != j && i != j + 1 {
                rep.push("X_iT_j=T_jX_i", format!("i={i},j={j}"), (xi(i) * ti(j)) == (ti(j) * xi(i)));
            }
        }
    }
    for i in 1..n {
        let lhs = xi(i + 1) * ti(i);
        let rhs = &(ti(i) * xi(i)) + &one;
        rep.push("X_{i+1}T_i=T_iX_i+1", format!("i={i}"), lhs == rhs);
    }
    Ok(rep)
}

fn braid_checks<E, F>(rep: &mut RelationReport, n: usize, t: F)
where
    F: Fn(usize) -> E,
    E: Clone + PartialEq,
    for<'a> &'a E: core::ops::Mul<&'a E, Output = E>,
{
    for i in 1..n {
        for j in i + 2..n {
            rep.push("T_iT_j=T_jT_i", format!("i={i},j={j}"), (&t(i) * &t(j)) == (&t(j) * &t(i)));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = &(&t(i) * &t(i + 1)) * &t(i);
        let rhs = &(&t(i + 1) * &t(i)) * &t(i + 1);
        rep.push("T_iT_{i+1}T_i=T_{i+1}T_iT_{i+1}", format!("i={i}"), lhs == rhs);
    }
}

fn q() -> RatFunc {
    RatFunc::q()
}

/// `T_i^{-1} = q^{-1}(T_i - (q - 1))`.
fn t_inverse(n: usize, i: usize) -> HeckeElement {
    let t = HeckeElement::generator(n, i);
    (&t - &HeckeElement::scalar(n, q() - RatFunc::one())).scale(&RatFunc::q_inv())
}

/// Evaluation elements `X_1 = T_e`, `X_{i+1} = q^{-1} T_i X_i T_i`.
pub fn evaluation_x(n: usize) -> Vec<HeckeElement> {
    let mut xs = alloc::vec![HeckeElement::one(n)];
    for i in 1..n {
        let t = HeckeElement::generator(n, i);
        let next = (&(&t * &xs[i - 1]) * &t).scale(&RatFunc::q_inv());
        xs.push(next);
    }
    xs
}

/// `X_i^{-1}`, from `X_{i+1}^{-1} = q T_i^{-1} X_i^{-1} T_i^{-1}`.
pub fn evaluation_x_inverse(n: usize) -> Vec<HeckeElement> {
    let mut xs = alloc::vec![HeckeElement::one(n)];
    for i in 1..n {
        let t = t_inverse(n, i);
        let next = (&(&t * &xs[i - 1]) * &t).scale(&q());
        xs.push(next);
    }
    xs
}

/// The nondegenerate relations in `H_n^A(q)` with the evaluation `X_i`.
pub fn verify_nondegenerate(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("affine relations need n ≥ 2, got {n}")));
    }
    let t: Vec<HeckeElement> = (1..n).map(|i| HeckeElement::generator(n, i)).collect();
    let x = evaluation_x(n);
    let x_inv = evaluation_x_inverse(n);
    let one = HeckeElement::one(n);
    let q_one = HeckeElement::scalar(n, q());
    let mut rep = RelationReport { n, model: "evaluation", checks: Vec::new() };
    let ti = |i: usize| &t[i - 1];
    let xi = |i: usize| &x[i - 1];
    for i in 1..n {
        let prod = &(ti(i) + &one) * &(ti(i) - &q_one);
        rep.push("(T_i+1)(T_i-q)=0", format!("i={i}"), prod.is_zero());
    }
    braid_checks(&mut rep, n, |i| ti(i).clone());
    for i in 1..=n {
        let ok = (xi(i) * &x_inv[i - 1]) == one && (&x_inv[i - 1] * xi(i)) == one;
        rep.push("X_iX_i^{-1}=X_i^{-1}X_i=1", format!("i={i}"), ok);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            rep.push("X_iX_j=X_jX_i", format!("i={i},j={j}"), (xi(i) * xi(j)) == (xi(j) * xi(i)));
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if i != j && i != j + 1 {
                rep.push("X_iT_j=T_jX_i", format!("i={i},j={j}"), (xi(i) * ti(j)) == (ti(j) * xi(i)));
            }
        }
    }
    for i in 1..n {
        let lhs = &(ti(i) * xi(i)) * ti(i);
        rep.push("T_iX_iT_i=qX_{i+1}", format!("i={i}"), lhs == xi(i + 1).scale(&q()));
    }
    Ok(rep)
}

/// `X̄_i = (1 - X_i)/(1 - q)` built from the evaluation elements.
pub fn x_bar(n: usize) -> Vec<HeckeElement> {
    let scale = RatFunc::new(Poly::one(), Poly::one() - Poly::q());
    evaluation_x(n).iter().map(|x| (&HeckeElement::one(n) - x).scale(&scale)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationReport {
    pub n: usize,
    /// `T_i + T_i X̄_i T_i = q X̄_{i+1}` over `ℚ(q)`.
    pub identities: Vec<RelationCheck>,
    /// `X̄_i` has no pole at `q = 1` and specializes to the Jucys–Murphy `X_i`.
    pub specializations: Vec<RelationCheck>,
    /// `1 + T_i X̄_i = X̄_{i+1} T_i` in `ℚ[S_n]` with Jucys–Murphy `X̄`.
    pub shadow: Vec<RelationCheck>,
}

impl DegenerationReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().chain(&self.specializations).chain(&self.shadow).all(|c| c.holds)
    }
}

pub fn degeneration_check(n: usize) -> Result<DegenerationReport> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("degeneration needs n ≥ 2, got {n}")));
    }
    let xb = x_bar(n);
    let mut identities = Vec::new();
    let mut shadow = Vec::new();
    let one = GroupAlgebraElement::one(n);
    for i in 1..n {
        let t = HeckeElement::generator(n, i);
        let lhs = &t + &(&(&t * &xb[i - 1]) * &t);
        identities.push(RelationCheck {
            relation: "T_i+T_iX̄_iT_i=qX̄_{i+1}",
            instance: format!("i={i}"),
            holds: lhs == xb[i].scale(&q()),
        });
        let s = GroupAlgebraElement::generator(n, i);
        let jm_i = jucys_murphy(n, i)?;
        let jm_next = jucys_murphy(n, i + 1)?;
        shadow.push(RelationCheck {
            relation: "1+T_iX̄_i=X̄_{i+1}T_i",
            instance: format!("i={i}"),
            holds: (&one + &(&s * &jm_i)) == (&jm_next * &s),
        });
    }
    let specializations = (1..=n)
        .map(|k| RelationCheck {
            relation: "X̄_k(q=1)=X_k",
            instance: format!("k={k}"),
            holds: xb[k - 1].specialize(&Rational::one()) == Some(jucys_murphy(n, k).unwrap()),
        })
        .collect();
    Ok(DegenerationReport { n, identities, specializations, shadow })
}

/// Outcome of a randomized identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzVerdict {
    pub trials: usize,
    pub failures: usize,
}

impl FuzzVerdict {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn random_hecke(rng: &mut ChaCha8Rng, n: usize) -> HeckeElement {
    let perms = Permutation::all(n);
    let support = rng.gen_range(1..=3);
    let terms = (0..support).map(|_| {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let coeffs = (0..=2).map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
        (w, RatFunc::from_poly(Poly::from_coeffs(coeffs)))
    });
    HeckeElement::from_terms(n, terms)
}

/// `(ab)c = a(bc)` on random triples, `2 ≤ n ≤ 4`, coefficients of degree
/// at most 2 in `q`.
pub fn associativity_fuzz(trials: usize, seed: u64) -> FuzzVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let n = rng.gen_range(2..=4);
        let (a, b, c) = (random_hecke(&mut rng, n), random_hecke(&mut rng, n), random_hecke(&mut rng, n));
        if &(&a * &b) * &c != &a * &(&b * &c) {
            failures += 1;
        }
    }
    FuzzVerdict { trials, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jm_examples() {
        assert_eq!(jucys_murphy(3, 2).unwrap(), GroupAlgebraElement::generator(3, 1));
        assert!(jucys_murphy(3, 1).unwrap().is_zero());
        assert!(jucys_murphy(3, 4).is_err());
        let (x3, x4) = (jucys_murphy(4, 3).unwrap(), jucys_murphy(4, 4).unwrap());
        assert_eq!(&x3 * &x4, &x4 * &x3);
    }

    #[test]
    fn degenerate_relations() {
        for n in 2..=5 {
            let rep = verify_degenerate(n).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.failures().collect::<Vec<_>>());
        }
        assert!(verify_degenerate(1).is_err());
    }

    #[test]
    fn evaluation_n2() {
        let x = evaluation_x(2);
        let t1 = HeckeElement::generator(2, 1);
        let expected = &HeckeElement::one(2) + &t1.scale(&(RatFunc::one() - RatFunc::q_inv()));
        assert_eq!(x[1], expected);
    }

    #[test]
    fn nondegenerate_relations() {
        for n in 2..=4 {
            let rep = verify_nondegenerate(n).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn degeneration() {
        let xb = x_bar(2);
        assert!(xb[0].is_zero());
        assert_eq!(xb[1], HeckeElement::generator(2, 1).scale(&RatFunc::q_inv()));
        for n in 2..=3 {
            let rep = degeneration_check(n).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn associativity() {
        assert!(associativity_fuzz(60, 7).passed());
    }
}
