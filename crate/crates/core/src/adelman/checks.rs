//! Randomized checks: reading selection, the congruence laws, the universal
//! property, and the special cases (identity, zero, embedded maps).
//!
//! Each trial draws from its own stream, so trials can run in any order or in
//! parallel and the totals do not change.

use alloc::vec::Vec;

use rand::Rng;

use super::limits::{cokernel_with, factor_through_cokernel, factor_through_kernel, kernel_with};
use super::sample::{
    random_homotopic, random_killed_by, random_killing, random_matrix, random_morphism, random_object, random_object_in,
};
use super::{
    homotopic, homotopy_inverse, is_zero_equivalent, null_homotopic, CokernelReading, DoubleArrow, KernelReading,
    TripleMorphism, COKERNEL_READING, KERNEL_READING,
};
use crate::exactla::rank;
use crate::{trial_rng, Result};

/// Largest dimension of any piece of a random object.
pub const MAX_DIM: usize = 4;

const CONGRUENCE_STREAM: u64 = 1 << 32;
const SPECIAL_STREAM: u64 = 2 << 32;

/// Both halves of the universal property for one candidate on one instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub null_composite: bool,
    /// Test morphisms that failed to factor.
    pub factorization_failures: usize,
}

impl CandidateOutcome {
    pub fn passed(&self) -> bool {
        self.null_composite && self.factorization_failures == 0
    }
}

/// One random `t`, every reading evaluated against the same test morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTrial {
    pub kernel: [CandidateOutcome; 2],
    pub cokernel: [CandidateOutcome; 2],
}

pub fn selection_trial(seed: u64, trial: u64, tests: usize) -> Result<SelectionTrial> {
    let mut rng = trial_rng(seed, trial);
    let x = random_object_in(&mut rng, 1, MAX_DIM);
    let y = random_object_in(&mut rng, 1, MAX_DIM);
    let t = random_morphism(&mut rng, &x, &y)?;
    let mut into = Vec::with_capacity(tests);
    let mut out_of = Vec::with_capacity(tests);
    for _ in 0..tests {
        let w = random_object(&mut rng, MAX_DIM);
        into.push(random_killed_by(&mut rng, &t, &w)?);
        let w = random_object(&mut rng, MAX_DIM);
        out_of.push(random_killing(&mut rng, &t, &w)?);
    }
    let mut kernel = [CandidateOutcome::default(); 2];
    for (slot, reading) in kernel.iter_mut().zip(KernelReading::ALL) {
        let incl = kernel_with(&t, reading)?;
        slot.null_composite = incl.is_morphism() && null_homotopic(&t.after(&incl)?)?.is_some();
        for u in &into {
            if factor_through_kernel(&incl, u)?.is_none() {
                slot.factorization_failures += 1;
            }
        }
    }
    let mut cokernel = [CandidateOutcome::default(); 2];
    for (slot, reading) in cokernel.iter_mut().zip(CokernelReading::ALL) {
        let proj = cokernel_with(&t, reading)?;
        slot.null_composite = proj.is_morphism() && null_homotopic(&proj.after(&t)?)?.is_some();
        for u in &out_of {
            if factor_through_cokernel(&proj, u)?.is_none() {
                slot.factorization_failures += 1;
            }
        }
    }
    Ok(SelectionTrial { kernel, cokernel })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingScore {
    pub reading: &'static str,
    pub passed: usize,
    pub failed: usize,
}

/// Scores per reading and the unique reading that never failed, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpretationSelection {
    pub seed: u64,
    pub instances: usize,
    pub kernel_scores: Vec<ReadingScore>,
    pub cokernel_scores: Vec<ReadingScore>,
    pub kernel: Option<KernelReading>,
    pub cokernel: Option<CokernelReading>,
}

impl InterpretationSelection {
    pub fn from_trials(seed: u64, trials: &[SelectionTrial]) -> Self {
        let score = |name, pick: &dyn Fn(&SelectionTrial) -> CandidateOutcome| {
            let passed = trials.iter().filter(|t| pick(t).passed()).count();
            ReadingScore { reading: name, passed, failed: trials.len() - passed }
        };
        let kernel_scores: Vec<ReadingScore> = KernelReading::ALL
            .iter()
            .enumerate()
            .map(|(i, r)| score(r.name(), &|t: &SelectionTrial| t.kernel[i]))
            .collect();
        let cokernel_scores: Vec<ReadingScore> = CokernelReading::ALL
            .iter()
            .enumerate()
            .map(|(i, r)| score(r.name(), &|t: &SelectionTrial| t.cokernel[i]))
            .collect();
        let unique = |scores: &[ReadingScore]| {
            let winners: Vec<usize> = (0..scores.len()).filter(|&i| scores[i].failed == 0).collect();
            (winners.len() == 1 && !trials.is_empty()).then(|| winners[0])
        };
        InterpretationSelection {
            seed,
            instances: trials.len(),
            kernel: unique(&kernel_scores).map(|i| KernelReading::ALL[i]),
            cokernel: unique(&cokernel_scores).map(|i| CokernelReading::ALL[i]),
            kernel_scores,
            cokernel_scores,
        }
    }

    /// The selection agrees with the readings `kernel`/`cokernel` use.
    pub fn matches_defaults(&self) -> bool {
        self.kernel == Some(KERNEL_READING) && self.cokernel == Some(COKERNEL_READING)
    }

    /// Universal-property tally for the selected readings: a trial passes when
    /// both its kernel and cokernel pass.
    pub fn selected_tally(&self, trials: &[SelectionTrial]) -> (usize, usize) {
        let (Some(k), Some(c)) = (self.kernel, self.cokernel) else {
            return (0, trials.len());
        };
        let ki = KernelReading::ALL.iter().position(|&r| r == k).expect("listed");
        let ci = CokernelReading::ALL.iter().position(|&r| r == c).expect("listed");
        let passed = trials.iter().filter(|t| t.kernel[ki].passed() && t.cokernel[ci].passed()).count();
        (passed, trials.len() - passed)
    }
}

pub fn select_interpretation(seed: u64, instances: usize, tests: usize) -> Result<InterpretationSelection> {
    let trials = (0..instances as u64).map(|i| selection_trial(seed, i, tests)).collect::<Result<Vec<_>>>()?;
    Ok(InterpretationSelection::from_trials(seed, &trials))
}

/// Outcome of the congruence laws on one random configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CongruenceTrial {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub pre_composition: bool,
    pub post_composition: bool,
}

impl CongruenceTrial {
    pub fn passed(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive && self.pre_composition && self.post_composition
    }
}

pub fn congruence_trial(seed: u64, trial: u64) -> Result<CongruenceTrial> {
    let mut rng = trial_rng(seed, CONGRUENCE_STREAM + trial);
    let objs: Vec<DoubleArrow> = (0..4).map(|_| random_object(&mut rng, MAX_DIM)).collect();
    let (w, x, y, z) = (&objs[0], &objs[1], &objs[2], &objs[3]);
    let f = random_morphism(&mut rng, x, y)?;
    let g = random_homotopic(&mut rng, &f)?;
    let h = random_homotopic(&mut rng, &g)?;
    let pre = random_morphism(&mut rng, w, x)?;
    let post = random_morphism(&mut rng, y, z)?;
    let fg = homotopic(&f, &g)?;
    let gf = homotopic(&g, &f)?;
    Ok(CongruenceTrial {
        reflexive: homotopic(&f, &f)?.is_some(),
        symmetric: fg.is_some() && gf.is_some(),
        transitive: homotopic(&g, &h)?.is_some() && homotopic(&f, &h)?.is_some(),
        pre_composition: homotopic(&f.after(&pre)?, &g.after(&pre)?)?.is_some(),
        post_composition: homotopic(&post.after(&f)?, &post.after(&g)?)?.is_some(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CongruenceReport {
    pub trials: usize,
    pub reflexive: usize,
    pub symmetric: usize,
    pub transitive: usize,
    pub pre_composition: usize,
    pub post_composition: usize,
}

impl CongruenceReport {
    pub fn from_trials(trials: &[CongruenceTrial]) -> Self {
        let count = |p: fn(&CongruenceTrial) -> bool| trials.iter().filter(|t| p(t)).count();
        CongruenceReport {
            trials: trials.len(),
            reflexive: count(|t| t.reflexive),
            symmetric: count(|t| t.symmetric),
            transitive: count(|t| t.transitive),
            pre_composition: count(|t| t.pre_composition),
            post_composition: count(|t| t.post_composition),
        }
    }

    pub fn passed(&self) -> bool {
        let n = self.trials;
        n > 0
            && [self.reflexive, self.symmetric, self.transitive, self.pre_composition, self.post_composition]
                .iter()
                .all(|&c| c == n)
    }
}

/// Identity, zero and embedded-map cases on one random configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpecialTrial {
    pub kernel_of_identity_zero: bool,
    pub cokernel_of_identity_zero: bool,
    pub kernel_of_zero_equivalent: bool,
    pub cokernel_of_zero_equivalent: bool,
    /// `kernel(embed f) ≃ 0` exactly when `f` is injective, and dually.
    pub embedded_rank_agreement: bool,
    /// Homotopy classes between embedded objects are the matrices themselves.
    pub embedded_faithful: bool,
    pub embedded_functorial: bool,
}

impl SpecialTrial {
    pub fn passed(&self) -> bool {
        self.kernel_of_identity_zero
            && self.cokernel_of_identity_zero
            && self.kernel_of_zero_equivalent
            && self.cokernel_of_zero_equivalent
            && self.embedded_rank_agreement
            && self.embedded_faithful
            && self.embedded_functorial
    }
}

pub fn special_trial(seed: u64, trial: u64) -> Result<SpecialTrial> {
    let mut rng = trial_rng(seed, SPECIAL_STREAM + trial);
    let x = random_object(&mut rng, MAX_DIM);
    let id = TripleMorphism::identity(&x);
    let zero = TripleMorphism::zero(&x, &x);
    let kernel_of_identity_zero = is_zero_equivalent(kernel_with(&id, KERNEL_READING)?.source())?;
    let cokernel_of_identity_zero = is_zero_equivalent(cokernel_with(&id, COKERNEL_READING)?.target())?;
    let kernel_of_zero_equivalent = homotopy_inverse(&kernel_with(&zero, KERNEL_READING)?)?.is_some();
    let cokernel_of_zero_equivalent = homotopy_inverse(&cokernel_with(&zero, COKERNEL_READING)?)?.is_some();

    let (r, c) = (rng.gen_range(0..=MAX_DIM), rng.gen_range(0..=MAX_DIM));
    let f = random_matrix(&mut rng, r, c);
    let ef = TripleMorphism::embed(&f);
    let k = rank(&f);
    let embedded_rank_agreement = is_zero_equivalent(kernel_with(&ef, KERNEL_READING)?.source())? == (k == c)
        && is_zero_equivalent(cokernel_with(&ef, COKERNEL_READING)?.target())? == (k == r);
    let g = if rng.gen_bool(0.5) { f.clone() } else { &f + &random_matrix(&mut rng, r, c) };
    let embedded_faithful = homotopic(&ef, &TripleMorphism::embed(&g))?.is_some() == (f == g);
    let inner = rng.gen_range(0..=MAX_DIM);
    let h = random_matrix(&mut rng, c, inner);
    let embedded_functorial = ef.after(&TripleMorphism::embed(&h))? == TripleMorphism::embed(&(&f * &h));
    Ok(SpecialTrial {
        kernel_of_identity_zero,
        cokernel_of_identity_zero,
        kernel_of_zero_equivalent,
        cokernel_of_zero_equivalent,
        embedded_rank_agreement,
        embedded_faithful,
        embedded_functorial,
    })
}

/// Everything the adelman suite asserts, for one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdelmanReport {
    pub seed: u64,
    pub selection: InterpretationSelection,
    /// Selections made with other seeds; stability means they all agree.
    pub stability: Vec<(u64, Option<KernelReading>, Option<CokernelReading>)>,
    pub universal_passed: usize,
    pub universal_failed: usize,
    pub congruence: CongruenceReport,
    pub special_trials: usize,
    pub special_failures: usize,
}

impl AdelmanReport {
    pub fn assemble(
        seed: u64,
        selection_trials: &[SelectionTrial],
        stability: Vec<(u64, Option<KernelReading>, Option<CokernelReading>)>,
        congruence: &[CongruenceTrial],
        special: &[SpecialTrial],
    ) -> Self {
        let selection = InterpretationSelection::from_trials(seed, selection_trials);
        let (universal_passed, universal_failed) = selection.selected_tally(selection_trials);
        AdelmanReport {
            seed,
            selection,
            stability,
            universal_passed,
            universal_failed,
            congruence: CongruenceReport::from_trials(congruence),
            special_trials: special.len(),
            special_failures: special.iter().filter(|t| !t.passed()).count(),
        }
    }

    pub fn stable(&self) -> bool {
        self.stability.iter().all(|&(_, k, c)| k == self.selection.kernel && c == self.selection.cokernel)
    }

    pub fn passed(&self) -> bool {
        self.selection.matches_defaults()
            && self.stable()
            && self.universal_failed == 0
            && self.universal_passed > 0
            && self.congruence.passed()
            && self.special_trials > 0
            && self.special_failures == 0
    }
}

/// Seeds used for the stability check alongside `seed`.
pub fn stability_seeds(seed: u64) -> [u64; 2] {
    [seed.wrapping_add(1), seed ^ 0x5eed_5eed]
}

/// Trial counts for [`adelman_report`].
///
/// A wrong reading fails on roughly one instance in ten whatever the number
/// of test morphisms, so the stability runs use many instances and few tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdelmanConfig {
    pub trials: usize,
    pub tests: usize,
    pub stability_instances: usize,
    pub stability_tests: usize,
}

impl Default for AdelmanConfig {
    fn default() -> Self {
        AdelmanConfig { trials: 100, tests: 20, stability_instances: 100, stability_tests: 5 }
    }
}

/// Sequential driver; the lab crate runs the same trials in parallel.
pub fn adelman_report(seed: u64, cfg: &AdelmanConfig) -> Result<AdelmanReport> {
    let n = cfg.trials as u64;
    let selection: Vec<SelectionTrial> = (0..n).map(|i| selection_trial(seed, i, cfg.tests)).collect::<Result<_>>()?;
    let mut stability = Vec::new();
    for other in stability_seeds(seed) {
        let s = select_interpretation(other, cfg.stability_instances, cfg.stability_tests)?;
        stability.push((other, s.kernel, s.cokernel));
    }
    let congruence: Vec<CongruenceTrial> = (0..n).map(|i| congruence_trial(seed, i)).collect::<Result<_>>()?;
    let special: Vec<SpecialTrial> = (0..n).map(|i| special_trial(seed, i)).collect::<Result<_>>()?;
    Ok(AdelmanReport::assemble(seed, &selection, stability, &congruence, &special))
}
