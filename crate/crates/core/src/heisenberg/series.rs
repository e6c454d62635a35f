use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{normal_form, Gen, HElem, NormalMonomial};

/// Truncated series in `t` and `u` with coefficients in `H_ℤ`, kept in the
/// order the factors are written.
#[derive(Clone, Debug, Default)]
struct Series {
    coeffs: BTreeMap<(usize, usize), HElem>,
}

impl Series {
    fn term(i: usize, j: usize, x: HElem) -> (usize, usize, HElem) {
        (i, j, x)
    }

    fn from_terms(terms: impl IntoIterator<Item = (usize, usize, HElem)>) -> Self {
        let mut s = Series::default();
        for (i, j, x) in terms {
            s.add(i, j, &x);
        }
        s
    }

    fn add(&mut self, i: usize, j: usize, x: &HElem) {
        let slot = self.coeffs.entry((i, j)).or_default();
        *slot = &*slot + x;
    }

    /// Product truncated to total `t`-degree and `u`-degree at most `order`.
    fn mul(&self, other: &Series, order: usize) -> Series {
        let mut out = Series::default();
        for (&(i, j), x) in &self.coeffs {
            for (&(k, l), y) in &other.coeffs {
                if i + k <= order && j + l <= order {
                    out.add(i + k, j + l, &(x * y));
                }
            }
        }
        out
    }

    fn get(&self, i: usize, j: usize) -> HElem {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }
}

fn gen_or_one(g: Gen) -> HElem {
    match g {
        Gen::A(0) | Gen::B(0) => HElem::one(),
        g => normal_form(&[g]),
    }
}

/// One cell of the generating-function comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingResidual {
    pub i: usize,
    pub j: usize,
    /// Normal form of `a_i b_j`.
    pub lhs: HElem,
    /// Coefficient of `t^i u^j` in `B(u)A(t)(1+tu)`.
    pub rhs: HElem,
}

impl GeneratingResidual {
    pub fn residual(&self) -> HElem {
        &self.lhs - &self.rhs
    }
}

/// Compare `a_i b_j` with the `t^i u^j` coefficient of `B(u)A(t)(1+tu)` for
/// `1 ≤ i, j ≤ order`.
pub fn verify_generating_identity(order: usize) -> Vec<GeneratingResidual> {
    let a_series = Series::from_terms((0..=order).map(|i| Series::term(i, 0, gen_or_one(Gen::A(i as u32)))));
    let b_series = Series::from_terms((0..=order).map(|j| Series::term(0, j, gen_or_one(Gen::B(j as u32)))));
    let one_tu = Series::from_terms([Series::term(0, 0, HElem::one()), Series::term(1, 1, HElem::one())]);
    let rhs = b_series.mul(&a_series, order).mul(&one_tu, order);
    let mut out = Vec::new();
    for i in 1..=order {
        for j in 1..=order {
            out.push(GeneratingResidual {
                i,
                j,
                lhs: normal_form(&[Gen::A(i as u32), Gen::B(j as u32)]),
                rhs: rhs.get(i, j),
            });
        }
    }
    out
}

/// Polynomial in the commuting `a_n`, as coefficients of `t^0 … t^order`.
fn a_only(a: Vec<u32>) -> HElem {
    HElem::monomial(NormalMonomial::new(Vec::new(), a))
}

/// The logarithmic-derivative candidate: `ã_n` is the `t^{n-1}` coefficient
/// of `A'(-t) A(-t)^{-1}`, so `ã_1 = a_1`, `ã_2 = a_1² - 2a_2`.
pub fn tilde_candidate(n: usize) -> HElem {
    let sign = |k: usize| if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    // A(-t)^{-1} = Σ c_k t^k with c_0 = 1, c_k = -Σ_{l=1}^{k} (-1)^l a_l c_{k-l}
    let mut inv = alloc::vec![HElem::one()];
    for k in 1..n {
        let mut c = HElem::zero();
        for l in 1..=k {
            c = &c - &(&a_only(alloc::vec![l as u32]) * &inv[k - l]).scale(&sign(l));
        }
        inv.push(c);
    }
    // A'(-t) = Σ_l l a_l (-t)^{l-1}
    let mut out = HElem::zero();
    for l in 1..=n {
        let coeff = sign(l - 1) * BigInt::from(l);
        out = &out + &(&a_only(alloc::vec![l as u32]) * &inv[n - l]).scale(&coeff);
    }
    out
}

/// `[ã_n, b_m] - δ_{nm}` for `m = 1..=degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeProbe {
    pub n: usize,
    pub candidate: HElem,
    pub residuals: Vec<(usize, HElem)>,
}

pub fn tilde_probe(n: usize, degree_bound: usize) -> TildeProbe {
    let candidate = tilde_candidate(n);
    let residuals = (1..=degree_bound)
        .map(|m| {
            let mut r = candidate.commutator(&HElem::b(m as u32));
            if m == n {
                r = &r - &HElem::one();
            }
            (m, r)
        })
        .collect();
    TildeProbe { n, candidate, residuals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn generating_identity() {
        let table = verify_generating_identity(6);
        assert_eq!(table.len(), 36);
        assert!(table.iter().all(|r| r.residual().is_zero()));
        let cell = |i, j| table.iter().find(|r| r.i == i && r.j == j).unwrap().rhs.to_string();
        assert_eq!(cell(2, 1), "b_1a_2 + a_1");
        assert_eq!(cell(1, 1), "b_1a_1 + 1");
        assert_eq!(cell(1, 3), "b_3a_1 + b_2");
    }

    #[test]
    fn tilde_values() {
        assert_eq!(tilde_candidate(1).to_string(), "a_1");
        let a1 = HElem::a(1);
        let expected = &(&a1 * &a1) - &HElem::a(2).scale(&BigInt::from(2));
        assert_eq!(tilde_candidate(2), expected);
        let p1 = tilde_probe(1, 4);
        assert!(p1.residuals[0].1.is_zero());
        let p2 = tilde_probe(2, 4);
        assert!(p2.residuals[0].1.is_zero());
        assert!(p2.residuals[1].1.is_zero());
        assert_eq!(p2.residuals[2].1.to_string(), "b_1");
    }
}
