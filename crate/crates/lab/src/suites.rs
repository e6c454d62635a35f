//! One document type per suite. Every document carries its own `passed`
//! flag; the CLI turns that into the exit code.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use verma_core::adelman::{self, AdelmanConfig, AdelmanReport};
use verma_core::enright::{
    alpha_recursion_check, casimir_blocks, closed_form_lambda_zero, decategorify, decomposition_audit,
    descendant_record, highest_weight_vector, index_sets, projective_generator, pseudoadjoint_check, CasimirBlocks,
    HwvRecord, IndexSets,
};
use verma_core::hecke::{self, DegenerationReport, RelationCheck, RelationReport};
use verma_core::heisenberg::{self, ConfluenceReport};
use verma_core::sl2mod::{build_tr, build_verma, tr_structure};
use verma_core::Result;

use crate::fixtures::{self, AdelmanFixture, TildeFixture, TildeRow};
use crate::render::{integer, integrals, rational, rationals, Table};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IndexSetsDoc {
    pub n: u32,
    pub lambda: i64,
    pub i: Vec<i64>,
    pub i_prime: Vec<i64>,
    pub i_double_prime: Vec<i64>,
    pub i_triple_prime: Vec<i64>,
    pub disjoint_union: bool,
    /// Agreement with the written-out lists; only defined for `λ = 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<bool>,
}

impl IndexSetsDoc {
    pub fn new(sets: &IndexSets) -> Self {
        let mut all: Vec<i64> =
            sets.i_prime.iter().chain(&sets.i_double_prime).chain(&sets.i_triple_prime).copied().collect();
        all.sort_unstable();
        let closed_form = (sets.lambda == 0).then(|| {
            closed_form_lambda_zero(sets.n)
                == (sets.i_prime.clone(), sets.i_double_prime.clone(), sets.i_triple_prime.clone())
        });
        IndexSetsDoc {
            n: sets.n,
            lambda: sets.lambda,
            i: sets.i.clone(),
            i_prime: sets.i_prime.clone(),
            i_double_prime: sets.i_double_prime.clone(),
            i_triple_prime: sets.i_triple_prime.clone(),
            disjoint_union: all == sets.i,
            closed_form,
        }
    }

    pub fn passed(&self) -> bool {
        self.disjoint_union && self.closed_form != Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditRowDoc {
    pub mu: i64,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CasimirBlockDoc {
    pub t: i64,
    pub c: i64,
    pub predicted_dim: usize,
    pub predicted_excess: usize,
    pub kernel_dim: usize,
    pub excess_dim: usize,
    pub two_step: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CasimirWeightDoc {
    pub mu: i64,
    pub weight_dim: usize,
    pub complete: bool,
    pub passed: bool,
    pub blocks: Vec<CasimirBlockDoc>,
}

impl CasimirWeightDoc {
    fn new(b: &CasimirBlocks) -> Self {
        CasimirWeightDoc {
            mu: b.mu,
            weight_dim: b.weight_dim,
            complete: b.complete(),
            passed: b.passed(),
            blocks: b
                .blocks
                .iter()
                .map(|x| CasimirBlockDoc {
                    t: x.t,
                    c: x.c,
                    predicted_dim: x.predicted_dim,
                    predicted_excess: x.predicted_excess,
                    kernel_dim: x.kernel_dim,
                    excess_dim: x.excess_dim,
                    two_step: x.two_step,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecomposeDoc {
    pub command: &'static str,
    pub n: u32,
    pub lambda: i64,
    pub index_sets: IndexSetsDoc,
    /// Audit and Casimir blocks need `λ = 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<AuditRowDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casimir_blocks: Option<Vec<CasimirWeightDoc>>,
    pub passed: bool,
}

pub fn default_audit_depth(n: u32) -> usize {
    2 * n as usize + 10
}

pub fn decompose(n: u32, lambda: i64, depth: Option<usize>) -> Result<DecomposeDoc> {
    let index_sets = IndexSetsDoc::new(&index_sets(n, lambda)?);
    let mut doc = DecomposeDoc {
        command: "decompose",
        n,
        lambda,
        passed: index_sets.passed(),
        index_sets,
        depth: None,
        audit: None,
        casimir_blocks: None,
    };
    if lambda != 0 {
        return Ok(doc);
    }
    let depth = depth.unwrap_or_else(|| default_audit_depth(n));
    let audit = decomposition_audit(n, depth)?;
    let blocks =
        (0..=depth).map(|level| casimir_blocks(n, n as i64 - 2 * level as i64, depth)).collect::<Result<Vec<_>>>()?;
    doc.passed &= audit.passed() && blocks.iter().all(CasimirBlocks::passed);
    doc.depth = Some(depth);
    doc.audit = Some(audit.rows.iter().map(|r| AuditRowDoc { mu: r.mu, lhs: r.lhs, rhs: r.rhs }).collect());
    doc.casimir_blocks = Some(blocks.iter().map(CasimirWeightDoc::new).collect());
    Ok(doc)
}

impl DecomposeDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "mu", "lhs", "rhs", "casimir_ok"]);
        let blocks = self.casimir_blocks.as_deref().unwrap_or(&[]);
        for row in self.audit.as_deref().unwrap_or(&[]) {
            let ok = blocks.iter().find(|b| b.mu == row.mu).map_or(String::new(), |b| b.passed.to_string());
            t.push(vec![self.n.to_string(), row.mu.to_string(), row.lhs.to_string(), row.rhs.to_string(), ok]);
        }
        t
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoefficientDoc {
    pub i: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DescendantDoc {
    pub weight: i64,
    pub kernel_dim: usize,
    /// `f^{s+1} u_s` divided by the closed-form `p` list.
    pub ratio: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HwvDoc {
    pub command: &'static str,
    pub n: u32,
    pub s: i64,
    pub kernel_dim: usize,
    /// The kernel generator as computed (unnormalized).
    pub coefficients: Vec<CoefficientDoc>,
    pub p: Vec<String>,
    /// Kernel generator divided by the closed form; absent if not proportional.
    pub ratio: Option<String>,
    pub p_positive_integers: bool,
    pub alpha_residuals_zero: bool,
    pub alpha_boundary_zero: bool,
    pub alpha_seed_matches_p0: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descendant: Option<DescendantDoc>,
    pub passed: bool,
}

fn coefficient_docs(rec: &HwvRecord) -> Vec<CoefficientDoc> {
    rec.coefficients.iter().map(|(&(i, k), x)| CoefficientDoc { i, k, value: rational(x) }).collect()
}

pub fn hwv(n: u32, s: i64) -> Result<HwvDoc> {
    let rec = highest_weight_vector(n, s)?;
    let alpha = alpha_recursion_check(&rec);
    let ratio = rec.closed_form_ratio();
    let p_positive_integers = rec.p_list.iter().all(|p| p.is_integer() && p.is_positive());
    let in_i_prime = index_sets(n, 0)?.i_prime.contains(&s);
    let descendant = if in_i_prime {
        let d = descendant_record(n, s)?;
        Some(DescendantDoc {
            weight: d.s,
            kernel_dim: d.kernel_dim,
            ratio: d.closed_form_ratio().as_ref().map(rational),
        })
    } else {
        None
    };
    let passed = rec.kernel_dim == 1
        && ratio.is_some()
        && p_positive_integers
        && alpha.all_zero()
        && descendant.as_ref().is_none_or(|d| d.kernel_dim == 1 && d.ratio.is_some());
    Ok(HwvDoc {
        command: "hwv",
        n,
        s,
        kernel_dim: rec.kernel_dim,
        coefficients: coefficient_docs(&rec),
        p: integrals(&rec.p_list),
        ratio: ratio.as_ref().map(rational),
        p_positive_integers,
        alpha_residuals_zero: alpha.residuals.iter().all(|(_, x)| x.is_zero()),
        alpha_boundary_zero: alpha.boundary_zero,
        alpha_seed_matches_p0: alpha.seed_matches_p0,
        descendant,
        passed,
    })
}

impl HwvDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "s", "i", "k", "coefficient"]);
        for c in &self.coefficients {
            t.push(vec![self.n.to_string(), self.s.to_string(), c.i.to_string(), c.k.to_string(), c.value.clone()]);
        }
        t
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProjgenDoc {
    pub command: &'static str,
    pub n: u32,
    pub s: i64,
    pub c: i64,
    pub depth: usize,
    pub kernel: Vec<String>,
    pub q: Vec<String>,
    pub p: Vec<String>,
    pub shift_m: String,
    pub y: i64,
    /// `a + m·u_{-s-2}`, indexed by `j`.
    pub final_coefficients: Vec<String>,
    pub omega_image: Vec<String>,
    pub nilpotent: bool,
    pub omega_image_nonzero: bool,
    pub boundary_zero: bool,
    pub positive: bool,
    pub beta_residuals_zero: bool,
    /// Reported only: the q-indexed form of the recursion is not asserted.
    pub q_form_residuals_zero: bool,
    pub passed: bool,
}

pub fn projgen(n: u32, s: i64) -> Result<ProjgenDoc> {
    let rec = projective_generator(n, s)?;
    Ok(ProjgenDoc {
        command: "projgen",
        n,
        s,
        c: rec.c,
        depth: rec.depth,
        kernel: rationals(&rec.kernel),
        q: rationals(&rec.q_list),
        p: integrals(&rec.p_list),
        shift_m: integer(&rec.shift_m),
        y: rec.y,
        final_coefficients: integrals(&rec.final_coefficients),
        omega_image: rationals(&rec.omega_image),
        nilpotent: rec.nilpotent,
        omega_image_nonzero: rec.omega_image.iter().any(|x| !x.is_zero()),
        boundary_zero: rec.boundary_zero(),
        positive: rec.positive(),
        beta_residuals_zero: rec.beta_zero(),
        q_form_residuals_zero: rec.q_form_residuals.iter().all(|(_, x)| x.is_zero()),
        passed: rec.passed(),
    })
}

impl ProjgenDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "s", "j", "q", "p", "final"]);
        for (j, f) in self.final_coefficients.iter().enumerate() {
            let get = |v: &[String]| v.get(j).cloned().unwrap_or_default();
            t.push(vec![self.n.to_string(), self.s.to_string(), j.to_string(), get(&self.q), get(&self.p), f.clone()]);
        }
        t
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TrDoc {
    pub r: u32,
    pub n: u32,
    pub submodule_is_verma: bool,
    pub quotient_is_verma: bool,
    pub kappa: Option<String>,
    pub h_on_generator: bool,
    pub e_power_kills_generator: bool,
    pub casimir_nilpotent: bool,
    pub generator_not_eigen: bool,
    pub presentation_with_r: bool,
    /// Reported only; expected to fail unless `n = r`.
    pub presentation_with_n: bool,
    pub passed: bool,
}

pub const TR_DEPTH: usize = 12;

pub fn tr(r: u32, n: u32) -> Result<TrDoc> {
    let t = tr_structure(r, n, TR_DEPTH)?;
    Ok(TrDoc {
        r,
        n,
        submodule_is_verma: t.submodule_is_verma,
        quotient_is_verma: t.quotient_is_verma,
        kappa: t.kappa.as_ref().map(rational),
        h_on_generator: t.h_on_generator,
        e_power_kills_generator: t.e_power_kills_generator,
        casimir_nilpotent: t.casimir_nilpotent,
        generator_not_eigen: t.generator_not_eigen,
        presentation_with_r: t.presentation_with_r,
        presentation_with_n: t.presentation_with_n,
        passed: t.passed(),
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PseudoadjointCase {
    pub module: String,
    pub c: i64,
    pub checked: usize,
    pub failures: usize,
    pub b_minus_c_is_casimir: bool,
    pub semisimple: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PseudoadjointDoc {
    pub command: &'static str,
    pub n: u32,
    pub margin: usize,
    pub cases: Vec<PseudoadjointCase>,
    pub passed: bool,
}

/// `V_s` for every weight `s` of `L_n` (which includes `V_0` when `n` is
/// even), `V_0` itself, and `T_r` for `r ∈ I'`.
pub fn pseudoadjoint(n: u32, margin: usize) -> Result<PseudoadjointDoc> {
    let sets = index_sets(n, 0)?;
    let depth = 2 * margin;
    let mut weights = sets.i.clone();
    if !weights.contains(&0) {
        weights.insert(0, 0);
    }
    weights.sort_unstable();
    let mut cases = Vec::new();
    for s in weights {
        let m = build_verma(s, depth);
        let rep = pseudoadjoint_check(&m, s * (s + 2), margin)?;
        cases.push(PseudoadjointCase {
            module: format!("V_{s}"),
            c: rep.c,
            checked: rep.checked,
            failures: rep.failures.len(),
            b_minus_c_is_casimir: rep.b_minus_c_is_casimir,
            semisimple: rep.semisimple,
            passed: rep.passed() && rep.semisimple && rep.checked > 0,
        });
    }
    for &r in &sets.i_prime {
        let m = build_tr(r as u32, n, depth)?;
        let rep = pseudoadjoint_check(&m, r * (r + 2), margin)?;
        cases.push(PseudoadjointCase {
            module: format!("T_{r}"),
            c: rep.c,
            checked: rep.checked,
            failures: rep.failures.len(),
            b_minus_c_is_casimir: rep.b_minus_c_is_casimir,
            semisimple: rep.semisimple,
            passed: rep.passed() && rep.checked > 0,
        });
    }
    let passed = cases.iter().all(|c| c.passed);
    Ok(PseudoadjointDoc { command: "verify-pseudoadjoint", n, margin, cases, passed })
}

impl PseudoadjointDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "module", "c", "checked", "failures", "b_minus_c_is_casimir", "passed"]);
        for c in &self.cases {
            t.push(vec![
                self.n.to_string(),
                c.module.clone(),
                c.c.to_string(),
                c.checked.to_string(),
                c.failures.to_string(),
                c.b_minus_c_is_casimir.to_string(),
                c.passed.to_string(),
            ]);
        }
        t
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassCheck {
    pub s: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FPowerCheck {
    pub s: i64,
    pub l_max: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecategorificationDoc {
    pub n: u32,
    pub depth: usize,
    pub bijective: bool,
    pub f_intertwines: bool,
    pub minus_e_intertwines: bool,
    pub f_nonnegative: bool,
    pub u_classes: Vec<ClassCheck>,
    pub f_powers: Vec<FPowerCheck>,
    pub a_classes: Vec<ClassCheck>,
    pub effective: bool,
    pub passed: bool,
}

pub fn decategorification(n: u32, depth: usize) -> Result<DecategorificationDoc> {
    let rep = decategorify(n, depth)?;
    let classes = |v: &[(i64, bool)]| v.iter().map(|&(s, ok)| ClassCheck { s, ok }).collect();
    Ok(DecategorificationDoc {
        n,
        depth,
        bijective: rep.bijective,
        f_intertwines: rep.f_intertwines,
        minus_e_intertwines: rep.minus_e_intertwines,
        f_nonnegative: rep.f_nonnegative,
        u_classes: classes(&rep.u_classes),
        f_powers: rep.f_powers.iter().map(|&(s, l_max, ok)| FPowerCheck { s, l_max, ok }).collect(),
        a_classes: classes(&rep.a_classes),
        effective: rep.effective,
        passed: rep.passed(),
    })
}

// ---- Hecke ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum QMode {
    /// Nondegenerate relations over ℚ(q) only.
    Generic,
    /// Degenerate relations at q = 1 only.
    One,
    /// Both models and the q → 1 degeneration.
    Both,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FailedRelation {
    pub relation: &'static str,
    pub instance: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelationDoc {
    pub n: usize,
    pub model: &'static str,
    pub checks: usize,
    pub failures: Vec<FailedRelation>,
    pub passed: bool,
}

fn failed(checks: &[RelationCheck]) -> Vec<FailedRelation> {
    checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| FailedRelation { relation: c.relation, instance: c.instance.clone() })
        .collect()
}

impl RelationDoc {
    fn new(r: &RelationReport) -> Self {
        RelationDoc { n: r.n, model: r.model, checks: r.checks.len(), failures: failed(&r.checks), passed: r.passed() }
    }

    fn degeneration(r: &DegenerationReport) -> Self {
        let all: Vec<RelationCheck> = r.identities.iter().chain(&r.specializations).chain(&r.shadow).cloned().collect();
        RelationDoc { n: r.n, model: "q-to-1", checks: all.len(), failures: failed(&all), passed: r.passed() }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HeckeDoc {
    pub command: &'static str,
    pub q_mode: &'static str,
    pub degenerate: Vec<RelationDoc>,
    pub nondegenerate: Vec<RelationDoc>,
    pub degeneration: Vec<RelationDoc>,
    pub associativity_trials: usize,
    pub associativity_failures: usize,
    pub passed: bool,
}

/// Largest `n` per model: the ℚ(q) models grow much faster than `ℚ[S_n]`.
pub const HECKE_DEGENERATE_MAX: usize = 5;
pub const HECKE_GENERIC_MAX: usize = 4;
pub const HECKE_DEGENERATION_MAX: usize = 3;

pub fn verify_hecke(n_max: Option<usize>, mode: QMode, trials: usize, seed: u64) -> Result<HeckeDoc> {
    let cap = |default: usize| n_max.map_or(default, |n| n.min(default));
    let (one, generic) = match mode {
        QMode::Generic => (false, true),
        QMode::One => (true, false),
        QMode::Both => (true, true),
    };
    let range = |hi: usize, on: bool| if on { (2..=hi).collect::<Vec<_>>() } else { Vec::new() };
    let degenerate = range(cap(HECKE_DEGENERATE_MAX), one)
        .into_par_iter()
        .map(|n| hecke::verify_degenerate(n).map(|r| RelationDoc::new(&r)))
        .collect::<Result<Vec<_>>>()?;
    let nondegenerate = range(cap(HECKE_GENERIC_MAX), generic)
        .into_par_iter()
        .map(|n| hecke::verify_nondegenerate(n).map(|r| RelationDoc::new(&r)))
        .collect::<Result<Vec<_>>>()?;
    let degeneration = range(cap(HECKE_DEGENERATION_MAX), one && generic)
        .into_par_iter()
        .map(|n| hecke::degeneration_check(n).map(|r| RelationDoc::degeneration(&r)))
        .collect::<Result<Vec<_>>>()?;
    let fuzz = hecke::associativity_fuzz(trials, seed);
    let passed = degenerate.iter().chain(&nondegenerate).chain(&degeneration).all(|r| r.passed)
        && fuzz.failures == 0
        && !(degenerate.is_empty() && nondegenerate.is_empty());
    Ok(HeckeDoc {
        command: "verify-hecke",
        q_mode: match mode {
            QMode::Generic => "generic",
            QMode::One => "one",
            QMode::Both => "both",
        },
        degenerate,
        nondegenerate,
        degeneration,
        associativity_trials: fuzz.trials,
        associativity_failures: fuzz.failures,
        passed,
    })
}

impl HeckeDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["model", "n", "checks", "failures", "passed"]);
        for r in self.degenerate.iter().chain(&self.nondegenerate).chain(&self.degeneration) {
            t.push(vec![
                r.model.to_string(),
                r.n.to_string(),
                r.checks.to_string(),
                r.failures.len().to_string(),
                r.passed.to_string(),
            ]);
        }
        t
    }
}

// ---- Heisenberg ----

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfluenceDoc {
    pub trials: usize,
    pub mismatches: usize,
    pub negative: usize,
    pub measure_violations: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HeisenbergDoc {
    pub command: &'static str,
    pub generating_order: usize,
    pub generating_pairs: usize,
    pub generating_nonzero: usize,
    pub confluence: ConfluenceDoc,
    pub fock_trials: usize,
    pub fock_failures: usize,
    /// `[ã_n, b_m]` for `n, m ≤ TILDE_BOUND`; `ã_n` is only a candidate
    /// (logarithmic derivative), so the table is compared with a frozen
    /// fixture instead of with `δ_{nm}`.
    pub tilde_table: Vec<TildeRow>,
    pub tilde_matches_fixture: bool,
    /// Cells of the table where `[ã_n, b_m] ≠ δ_{nm}`.
    pub tilde_discrepancies: Vec<String>,
    pub passed: bool,
}

pub const GENERATING_ORDER: usize = 6;
pub const TILDE_BOUND: usize = 4;

pub fn tilde_table() -> Vec<TildeRow> {
    let mut rows = Vec::new();
    for n in 1..=TILDE_BOUND {
        let probe = heisenberg::tilde_probe(n, TILDE_BOUND);
        for (m, residual) in probe.residuals {
            let commutator = probe.candidate.commutator(&heisenberg::HElem::b(m as u32));
            rows.push(TildeRow { n, m, commutator: commutator.to_string(), residual: residual.to_string() });
        }
    }
    rows
}

pub fn verify_heisenberg(trials: usize, seed: u64, fixture: Option<&TildeFixture>) -> Result<HeisenbergDoc> {
    let residuals = heisenberg::verify_generating_identity(GENERATING_ORDER);
    let generating_nonzero = residuals.iter().filter(|r| !r.residual().is_zero()).count();
    let confluence = (0..trials as u64)
        .into_par_iter()
        .map(|t| heisenberg::confluence_trial(seed, t))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(ConfluenceReport::default(), ConfluenceReport::merge);
    let fock_failures = (0..trials as u64).into_par_iter().filter(|&t| !heisenberg::fock_trial(seed, t)).count();
    let table = tilde_table();
    let tilde_matches_fixture = fixture.is_some_and(|f| f.bound == TILDE_BOUND && f.table == table);
    let tilde_discrepancies = table
        .iter()
        .filter(|r| r.residual != "0")
        .map(|r| format!("[ã_{},b_{}] = {}", r.n, r.m, r.commutator))
        .collect();
    let passed = generating_nonzero == 0 && confluence.passed() && fock_failures == 0 && tilde_matches_fixture;
    Ok(HeisenbergDoc {
        command: "verify-heisenberg",
        generating_order: GENERATING_ORDER,
        generating_pairs: residuals.len(),
        generating_nonzero,
        confluence: ConfluenceDoc {
            trials: confluence.trials,
            mismatches: confluence.mismatches,
            negative: confluence.negative,
            measure_violations: confluence.measure_violations,
        },
        fock_trials: trials,
        fock_failures,
        tilde_table: table,
        tilde_matches_fixture,
        tilde_discrepancies,
        passed,
    })
}

impl HeisenbergDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "m", "commutator", "residual"]);
        for r in &self.tilde_table {
            t.push(vec![r.n.to_string(), r.m.to_string(), r.commutator.clone(), r.residual.clone()]);
        }
        t
    }
}

// ---- Adelman ----

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InterpretationDoc {
    pub kernel: Option<&'static str>,
    pub cokernel: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScoreDoc {
    pub reading: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityDoc {
    pub seed: String,
    pub kernel: Option<&'static str>,
    pub cokernel: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CongruenceDoc {
    pub trials: usize,
    pub reflexive: usize,
    pub symmetric: usize,
    pub transitive: usize,
    pub pre_composition: usize,
    pub post_composition: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialsDoc {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AdelmanDoc {
    pub command: &'static str,
    pub seed: String,
    pub interpretation_chosen: InterpretationDoc,
    pub kernel_scores: Vec<ScoreDoc>,
    pub cokernel_scores: Vec<ScoreDoc>,
    pub stability: Vec<StabilityDoc>,
    pub stable: bool,
    pub matches_fixture: bool,
    pub congruence_checks: CongruenceDoc,
    pub universal_property_trials: TrialsDoc,
    pub special_cases: TrialsDoc,
    pub passed: bool,
}

/// Same trials as [`adelman::adelman_report`], spread over the thread pool.
pub fn adelman_report(seed: u64, cfg: &AdelmanConfig) -> Result<AdelmanReport> {
    let n = cfg.trials as u64;
    let selection =
        (0..n).into_par_iter().map(|i| adelman::selection_trial(seed, i, cfg.tests)).collect::<Result<Vec<_>>>()?;
    let stability = adelman::stability_seeds(seed)
        .into_iter()
        .map(|other| {
            let trials = (0..cfg.stability_instances as u64)
                .into_par_iter()
                .map(|i| adelman::selection_trial(other, i, cfg.stability_tests))
                .collect::<Result<Vec<_>>>()?;
            let s = adelman::InterpretationSelection::from_trials(other, &trials);
            Ok((other, s.kernel, s.cokernel))
        })
        .collect::<Result<Vec<_>>>()?;
    let congruence = (0..n).into_par_iter().map(|i| adelman::congruence_trial(seed, i)).collect::<Result<Vec<_>>>()?;
    let special = (0..n).into_par_iter().map(|i| adelman::special_trial(seed, i)).collect::<Result<Vec<_>>>()?;
    Ok(AdelmanReport::assemble(seed, &selection, stability, &congruence, &special))
}

pub fn adelman_fixture(report: &AdelmanReport) -> AdelmanFixture {
    AdelmanFixture {
        kernel: report.selection.kernel.map(|r| r.name().to_string()),
        cokernel: report.selection.cokernel.map(|r| r.name().to_string()),
    }
}

pub fn verify_adelman(trials: usize, seed: u64, fixture: Option<&AdelmanFixture>) -> Result<AdelmanDoc> {
    let cfg = AdelmanConfig { trials, ..AdelmanConfig::default() };
    let report = adelman_report(seed, &cfg)?;
    let matches_fixture = fixture.is_some_and(|f| *f == adelman_fixture(&report));
    let scores = |v: &[adelman::ReadingScore]| {
        v.iter().map(|s| ScoreDoc { reading: s.reading, passed: s.passed, failed: s.failed }).collect()
    };
    let c = &report.congruence;
    Ok(AdelmanDoc {
        command: "verify-adelman",
        seed: seed.to_string(),
        interpretation_chosen: InterpretationDoc {
            kernel: report.selection.kernel.map(|r| r.name()),
            cokernel: report.selection.cokernel.map(|r| r.name()),
        },
        kernel_scores: scores(&report.selection.kernel_scores),
        cokernel_scores: scores(&report.selection.cokernel_scores),
        stability: report
            .stability
            .iter()
            .map(|&(s, k, c)| StabilityDoc {
                seed: s.to_string(),
                kernel: k.map(|r| r.name()),
                cokernel: c.map(|r| r.name()),
            })
            .collect(),
        stable: report.stable(),
        matches_fixture,
        congruence_checks: CongruenceDoc {
            trials: c.trials,
            reflexive: c.reflexive,
            symmetric: c.symmetric,
            transitive: c.transitive,
            pre_composition: c.pre_composition,
            post_composition: c.post_composition,
        },
        universal_property_trials: TrialsDoc { passed: report.universal_passed, failed: report.universal_failed },
        special_cases: TrialsDoc {
            passed: report.special_trials - report.special_failures,
            failed: report.special_failures,
        },
        passed: report.passed() && matches_fixture,
    })
}

impl AdelmanDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["check", "passed", "failed"]);
        let c = &self.congruence_checks;
        for (name, ok) in [
            ("reflexive", c.reflexive),
            ("symmetric", c.symmetric),
            ("transitive", c.transitive),
            ("pre_composition", c.pre_composition),
            ("post_composition", c.post_composition),
        ] {
            t.push(vec![name.to_string(), ok.to_string(), (c.trials - ok).to_string()]);
        }
        let u = &self.universal_property_trials;
        t.push(vec!["universal_property".into(), u.passed.to_string(), u.failed.to_string()]);
        let s = &self.special_cases;
        t.push(vec!["special_cases".into(), s.passed.to_string(), s.failed.to_string()]);
        t
    }
}

/// Load the checked-in fixtures, tolerating absence (the check then fails).
pub fn load_fixtures() -> (Option<TildeFixture>, Option<AdelmanFixture>) {
    (fixtures::load_tilde().ok(), fixtures::load_adelman().ok())
}
