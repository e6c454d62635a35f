use alloc::vec::Vec;

use crate::{Error, Result};

/// Partition `I = I' ⊔ I'' ⊔ I'''` of the weights of `L_n` relative to `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub n: u32,
    pub lambda: i64,
    pub i: Vec<i64>,
    pub i_prime: Vec<i64>,
    pub i_double_prime: Vec<i64>,
    pub i_triple_prime: Vec<i64>,
}

impl IndexSets {
    /// Indices carrying a summand (`T_r` for `I'`, `V_s` for `I'''`).
    pub fn summands(&self) -> impl Iterator<Item = i64> + '_ {
        self.i_prime.iter().chain(self.i_triple_prime.iter()).copied()
    }
}

pub fn index_sets(n: u32, lambda: i64) -> Result<IndexSets> {
    let n_i = n as i64;
    let i: Vec<i64> = (0..=n_i).map(|j| -n_i + 2 * j).collect();
    let in_i = |x: i64| x >= -n_i && x <= n_i && (x + n_i) % 2 == 0;
    let i_prime: Vec<i64> =
        i.iter().copied().filter(|&r| lambda + r >= 0 && in_i(-(lambda + r) - 2 - lambda)).collect();
    let mut i_double_prime: Vec<i64> = i_prime.iter().map(|&r| -r - 2 * lambda - 2).collect();
    i_double_prime.sort_unstable();
    let i_triple_prime: Vec<i64> =
        i.iter().copied().filter(|x| !i_prime.contains(x) && !i_double_prime.contains(x)).collect();

    let mut union: Vec<i64> = i_prime.iter().chain(&i_double_prime).chain(&i_triple_prime).copied().collect();
    union.sort_unstable();
    if union != i || i_prime.iter().any(|x| i_double_prime.contains(x)) {
        return Err(Error::Verification(alloc::format!("index sets for n={n}, λ={lambda} do not partition I")));
    }
    Ok(IndexSets { n, lambda, i, i_prime, i_double_prime, i_triple_prime })
}

/// The even/odd lists for `λ = 0`, written out independently of the
/// membership rules above: `(I', I'', I''')`.
pub fn closed_form_lambda_zero(n: u32) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let n = n as i64;
    let start = n % 2;
    let i_prime = (start..=n - 2).step_by(2).collect();
    let i_double_prime = (-n..=-2 - start).step_by(2).collect();
    let i_triple_prime = if start == 1 { alloc::vec![-1, n] } else { alloc::vec![n] };
    (i_prime, i_double_prime, i_triple_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn even_odd_and_trivial() {
        let s = index_sets(4, 0).unwrap();
        assert_eq!((s.i_prime, s.i_double_prime, s.i_triple_prime), (vec![0, 2], vec![-4, -2], vec![4]));
        let s = index_sets(3, 0).unwrap();
        assert_eq!((s.i_prime, s.i_double_prime, s.i_triple_prime), (vec![1], vec![-3], vec![-1, 3]));
        let s = index_sets(0, 0).unwrap();
        assert!(s.i_prime.is_empty() && s.i_double_prime.is_empty());
        assert_eq!(s.i_triple_prime, vec![0]);
    }

    #[test]
    fn matches_closed_form_lists() {
        for n in 0..=12 {
            let s = index_sets(n, 0).unwrap();
            assert_eq!((s.i_prime, s.i_double_prime, s.i_triple_prime), closed_form_lambda_zero(n), "n={n}");
        }
    }

    #[test]
    fn partition_for_shifted_lambda() {
        for n in 0..=20 {
            for lambda in -8..=8 {
                index_sets(n, lambda).unwrap();
            }
        }
    }
}
