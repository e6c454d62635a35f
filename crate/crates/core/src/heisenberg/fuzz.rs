use alloc::vec::Vec;

use rand::Rng;

use crate::rng::trial_rng;

use super::{fock_action, normal_form, rewrite, FockPoly, Gen, Strategy};

/// Random word of length `≤ max_len` with indices in `1..=max_index`.
pub fn random_word(rng: &mut impl Rng, max_len: usize, max_index: u32) -> Vec<Gen> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=max_index);
            if rng.gen_bool(0.5) {
                Gen::A(i)
            } else {
                Gen::B(i)
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub trials: usize,
    /// Words whose two strategies disagree.
    pub mismatches: usize,
    /// Normal forms with a negative coefficient.
    pub negative: usize,
    /// Rewrites where a step did not lower the inversion measure.
    pub measure_violations: usize,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.negative == 0 && self.measure_violations == 0
    }

    pub fn merge(self, other: ConfluenceReport) -> ConfluenceReport {
        ConfluenceReport {
            trials: self.trials + other.trials,
            mismatches: self.mismatches + other.mismatches,
            negative: self.negative + other.negative,
            measure_violations: self.measure_violations + other.measure_violations,
        }
    }
}

/// Leftmost and rightmost rewriting of one random word (length ≤ 8,
/// indices ≤ 6).
pub fn confluence_trial(seed: u64, trial: u64) -> ConfluenceReport {
    let word = random_word(&mut trial_rng(seed, trial), 8, 6);
    let l = rewrite(&word, Strategy::Leftmost);
    let r = rewrite(&word, Strategy::Rightmost);
    ConfluenceReport {
        trials: 1,
        mismatches: usize::from(l.result != r.result),
        negative: usize::from(!l.result.is_nonnegative()),
        measure_violations: usize::from(!(l.measure_decreased && r.measure_decreased)),
    }
}

pub fn confluence_fuzz(trials: usize, seed: u64) -> ConfluenceReport {
    (0..trials as u64).fold(ConfluenceReport::default(), |acc, t| acc.merge(confluence_trial(seed, t)))
}

/// `(x·y)·p = x·(y·p)` for random words `x`, `y` and a random Fock monomial.
pub fn fock_trial(seed: u64, trial: u64) -> bool {
    let mut rng = trial_rng(seed, trial);
    let x = normal_form(&random_word(&mut rng, 3, 3));
    let y = normal_form(&random_word(&mut rng, 3, 3));
    let len = rng.gen_range(0..=3);
    let p = FockPoly::monomial((0..len).map(|_| rng.gen_range(1..=3)).collect());
    let bound = 64;
    let lhs = fock_action(&(&x * &y), &p, bound);
    let rhs = fock_action(&y, &p, bound).and_then(|yp| fock_action(&x, &yp, bound));
    matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
}

/// Number of failing trials out of `trials`.
pub fn fock_fuzz(trials: usize, seed: u64) -> usize {
    (0..trials as u64).filter(|&t| !fock_trial(seed, t)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn confluence() {
        let rep = confluence_fuzz(200, 11);
        assert_eq!(rep.trials, 200);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn fock_representation() {
        assert_eq!(fock_fuzz(100, 3), 0);
    }

    #[test]
    fn replayable() {
        assert_eq!(confluence_trial(5, 17), confluence_trial(5, 17));
    }
}
