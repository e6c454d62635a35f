//! The `report` sweep: every `n ≤ nMax` at `λ = 0`, then the algebra suites.

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use verma_core::enright::{alpha_recursion_check, highest_weight_vector, index_sets, projective_generator};
use verma_core::Result;

use crate::fixtures::{AdelmanFixture, TildeFixture};
use crate::render::{integer, integrals, rationals, Table};
use crate::suites::{
    self, AdelmanDoc, AuditRowDoc, DecategorificationDoc, HeckeDoc, HeisenbergDoc, IndexSetsDoc, PseudoadjointDoc,
    QMode, TrDoc,
};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseChecks {
    pub hwv_dim: usize,
    pub alpha_residuals: bool,
    /// `None` for Verma summands, which have no generator recursion.
    pub beta_residuals: Option<bool>,
    pub casimir_nilpotent: Option<bool>,
    pub positivity: bool,
    pub closed_form: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseRecord {
    pub s: i64,
    /// `"projective"` for `s ∈ I'`, `"verma"` for `s ∈ I'''`.
    pub summand: &'static str,
    pub p: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_coefficients: Option<Vec<String>>,
    pub checks: CaseChecks,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NRecord {
    pub n: u32,
    pub lambda: i64,
    pub index_sets: IndexSetsDoc,
    pub depth: usize,
    pub audit: Vec<AuditRowDoc>,
    pub casimir_blocks_passed: bool,
    pub cases: Vec<CaseRecord>,
    pub tr: Vec<TrDoc>,
    pub pseudoadjoint: PseudoadjointDoc,
    pub decategorification: DecategorificationDoc,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuitesDoc {
    pub hecke: HeckeDoc,
    pub heisenberg: HeisenbergDoc,
    pub adelman: AdelmanDoc,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub cases_run: usize,
    pub failures: usize,
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDoc {
    pub command: &'static str,
    pub seed: String,
    pub n_max: u32,
    pub records: Vec<NRecord>,
    pub suites: SuitesDoc,
    pub summary: Summary,
    pub passed: bool,
}

pub const PSEUDOADJOINT_MARGIN: usize = 8;

fn verma_case(n: u32, s: i64) -> Result<CaseRecord> {
    let rec = highest_weight_vector(n, s)?;
    let alpha = alpha_recursion_check(&rec);
    let positivity = rec.p_list.iter().all(|p| p.is_integer() && p.is_positive());
    let closed_form = rec.closed_form_ratio().is_some();
    let checks = CaseChecks {
        hwv_dim: rec.kernel_dim,
        alpha_residuals: alpha.all_zero(),
        beta_residuals: None,
        casimir_nilpotent: None,
        positivity,
        closed_form,
    };
    let passed = rec.kernel_dim == 1 && checks.alpha_residuals && positivity && closed_form;
    Ok(CaseRecord {
        s,
        summand: "verma",
        p: integrals(&rec.p_list),
        q: None,
        m: None,
        final_coefficients: None,
        checks,
        passed,
    })
}

fn projective_case(n: u32, s: i64) -> Result<CaseRecord> {
    let top = highest_weight_vector(n, s)?;
    let alpha = alpha_recursion_check(&top);
    let gen = projective_generator(n, s)?;
    let closed_form = top.closed_form_ratio().is_some();
    let checks = CaseChecks {
        hwv_dim: top.kernel_dim,
        alpha_residuals: alpha.all_zero(),
        beta_residuals: Some(gen.beta_zero() && gen.boundary_zero()),
        casimir_nilpotent: Some(gen.nilpotent),
        positivity: gen.positive(),
        closed_form,
    };
    let passed = top.kernel_dim == 1 && checks.alpha_residuals && closed_form && gen.passed();
    Ok(CaseRecord {
        s,
        summand: "projective",
        p: integrals(&gen.p_list),
        q: Some(rationals(&gen.q_list)),
        m: Some(integer(&gen.shift_m)),
        final_coefficients: Some(integrals(&gen.final_coefficients)),
        checks,
        passed,
    })
}

pub fn n_record(n: u32) -> Result<NRecord> {
    let sets = index_sets(n, 0)?;
    let decomposition = suites::decompose(n, 0, None)?;
    let depth = decomposition.depth.unwrap_or_else(|| suites::default_audit_depth(n));
    let casimir_blocks_passed = decomposition.casimir_blocks.as_ref().is_some_and(|b| b.iter().all(|w| w.passed));
    let mut cases = sets.i_prime.iter().map(|&s| projective_case(n, s)).collect::<Result<Vec<_>>>()?;
    for &s in &sets.i_triple_prime {
        cases.push(verma_case(n, s)?);
    }
    cases.sort_by_key(|c| c.s);
    let tr = sets.i_prime.iter().map(|&r| suites::tr(r as u32, n)).collect::<Result<Vec<_>>>()?;
    let pseudoadjoint = suites::pseudoadjoint(n, PSEUDOADJOINT_MARGIN)?;
    let decategorification = suites::decategorification(n, depth)?;
    let passed = decomposition.passed
        && cases.iter().all(|c| c.passed)
        && tr.iter().all(|t| t.passed)
        && pseudoadjoint.passed
        && decategorification.passed;
    Ok(NRecord {
        n,
        lambda: 0,
        index_sets: decomposition.index_sets,
        depth,
        audit: decomposition.audit.unwrap_or_default(),
        casimir_blocks_passed,
        cases,
        tr,
        pseudoadjoint,
        decategorification,
        passed,
    })
}

pub struct ReportConfig {
    pub n_max: u32,
    pub seed: u64,
    pub trials: usize,
    pub adelman_trials: usize,
}

impl ReportConfig {
    pub fn new(n_max: u32, seed: u64) -> Self {
        ReportConfig { n_max, seed, trials: 1000, adelman_trials: 100 }
    }
}

pub fn report(cfg: &ReportConfig, tilde: Option<&TildeFixture>, adelman: Option<&AdelmanFixture>) -> Result<ReportDoc> {
    let records = (0..=cfg.n_max).into_par_iter().map(n_record).collect::<Result<Vec<_>>>()?;
    let hecke = suites::verify_hecke(None, QMode::Both, cfg.trials, cfg.seed)?;
    let heisenberg = suites::verify_heisenberg(cfg.trials, cfg.seed, tilde)?;
    let adelman = suites::verify_adelman(cfg.adelman_trials, cfg.seed, adelman)?;

    let mut labels: Vec<(String, bool)> = Vec::new();
    for r in &records {
        labels.push((format!("n={} index sets", r.n), r.index_sets.passed()));
        labels.push((format!("n={} audit", r.n), r.audit.iter().all(|a| a.lhs == a.rhs)));
        labels.push((format!("n={} casimir blocks", r.n), r.casimir_blocks_passed));
        for c in &r.cases {
            labels.push((format!("n={} s={} {}", r.n, c.s, c.summand), c.passed));
        }
        for t in &r.tr {
            labels.push((format!("n={} T_{}", r.n, t.r), t.passed));
        }
        for p in &r.pseudoadjoint.cases {
            labels.push((format!("n={} pseudoadjoint {}", r.n, p.module), p.passed));
        }
        labels.push((format!("n={} decategorification", r.n), r.decategorification.passed));
    }
    labels.push(("hecke".into(), hecke.passed));
    labels.push(("heisenberg".into(), heisenberg.passed));
    labels.push(("adelman".into(), adelman.passed));

    let failed: Vec<String> = labels.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.clone()).collect();
    let summary = Summary { cases_run: labels.len(), failures: failed.len(), failed };
    Ok(ReportDoc {
        command: "report",
        seed: cfg.seed.to_string(),
        n_max: cfg.n_max,
        passed: summary.failures == 0 && records.iter().all(|r| r.passed),
        records,
        suites: SuitesDoc { hecke, heisenberg, adelman },
        summary,
    })
}

impl ReportDoc {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["n", "s", "summand", "p", "q", "m", "passed"]);
        for r in &self.records {
            for c in &r.cases {
                t.push(vec![
                    r.n.to_string(),
                    c.s.to_string(),
                    c.summand.to_string(),
                    c.p.join(" "),
                    c.q.as_ref().map(|q| q.join(" ")).unwrap_or_default(),
                    c.m.clone().unwrap_or_default(),
                    c.passed.to_string(),
                ]);
            }
        }
        t
    }
}
