//! End-to-end acceptance: one PASS/FAIL line per criterion, nonzero exit if
//! any fails. Runs without the libtest harness so the lines always print.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use verma_core::enright::{
    alpha_recursion_check, casimir_blocks, casimir_on_weight, closed_form_lambda_zero, decategorify,
    decomposition_audit, highest_weight_vector, hwv_at_weight, index_sets, p_coefficients, projective_generator,
};
use verma_core::exactla::int;
use verma_core::Rational;
use verma_lab::fixtures;
use verma_lab::suites::{self, QMode};
use verma_lab::DEFAULT_SEED;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn index_sets_criterion() -> Check {
    let start = Instant::now();
    for n in 0..=12 {
        let s = index_sets(n, 0).map_err(|e| e.to_string())?;
        let expected = closed_form_lambda_zero(n);
        ensure((s.i_prime.clone(), s.i_double_prime.clone(), s.i_triple_prime.clone()) == expected, || {
            format!("n={n}: lists differ from the closed form")
        })?;
    }
    // index_sets itself rejects anything that is not a disjoint union of I.
    for n in 0..=64 {
        for lambda in -16..=16 {
            index_sets(n, lambda).map_err(|e| format!("n={n} λ={lambda}: {e}"))?;
        }
    }
    ensure(start.elapsed() < Duration::from_secs(1), || format!("took {:?}", start.elapsed()))
}

fn hwv_criterion() -> Check {
    let start = Instant::now();
    for n in 0..=12u32 {
        let sets = index_sets(n, 0).map_err(|e| e.to_string())?;
        for s in sets.i_prime.iter().copied().chain([n as i64]) {
            let dim = hwv_at_weight(n, s).map_err(|e| e.to_string())?.len();
            ensure(dim == 1, || format!("n={n} s={s}: ker e has dimension {dim}"))?;
            let rec = highest_weight_vector(n, s).map_err(|e| format!("n={n} s={s}: {e}"))?;
            ensure(rec.closed_form_ratio().is_some(), || format!("n={n} s={s}: not proportional"))?;
            ensure(rec.p_list.iter().all(|p| p.is_integer() && p.is_positive()), || {
                format!("n={n} s={s}: p not positive integers")
            })?;
        }
    }
    let p = |n, r| p_coefficients(n, r).map_err(|e| e.to_string());
    ensure(p(4, -2)? == ints(&[16, 8]), || "p(4,-2) ≠ [16, 8]".into())?;
    ensure(p(6, -4)? == ints(&[24, 8]), || "p(6,-4) ≠ [24, 8]".into())?;
    ensure(start.elapsed() < Duration::from_secs(10), || format!("took {:?}", start.elapsed()))
}

fn recursion_criterion() -> Check {
    for n in 0..=12u32 {
        let sets = index_sets(n, 0).map_err(|e| e.to_string())?;
        for s in sets.i_prime.iter().chain(&sets.i_triple_prime).copied() {
            let rec = highest_weight_vector(n, s).map_err(|e| e.to_string())?;
            ensure(alpha_recursion_check(&rec).all_zero(), || format!("α residual at n={n} s={s}"))?;
        }
        for &s in &sets.i_prime {
            let rec = projective_generator(n, s).map_err(|e| e.to_string())?;
            ensure(rec.beta_zero(), || format!("β residual at n={n} s={s}"))?;
        }
    }
    Ok(())
}

fn projgen_criterion() -> Check {
    for n in 0..=10u32 {
        for &s in &index_sets(n, 0).map_err(|e| e.to_string())?.i_prime {
            let rec = projective_generator(n, s).map_err(|e| e.to_string())?;
            ensure(rec.nilpotent, || format!("(Ω−c)² a ≠ 0 at n={n} s={s}"))?;
            ensure(rec.omega_image.iter().any(|x| !x.is_zero()), || format!("(Ω−c) a = 0 at n={n} s={s}"))?;
            ensure(rec.boundary_zero(), || format!("β_(i,0) ≠ 0 at n={n} s={s}"))?;
            ensure(rec.positive(), || format!("shifted coefficients not positive at n={n} s={s}"))?;
        }
    }
    let omega = casimir_on_weight(2, -2, 0).map_err(|e| e.to_string())?;
    let cols: Vec<Vec<Rational>> = (0..3).map(|j| omega.column(j).to_dense()).collect();
    ensure(cols == vec![ints(&[-8, -8, 0]), ints(&[8, 8, 0]), ints(&[0, 4, 8])], || format!("n=2 Ω columns {cols:?}"))
}

fn audit_criterion() -> Check {
    for n in 0..=12u32 {
        let audit = decomposition_audit(n, 2 * n as usize + 10).map_err(|e| e.to_string())?;
        ensure(audit.passed() && !audit.rows.is_empty(), || format!("n={n}: dimension mismatch"))?;
    }
    Ok(())
}

fn casimir_criterion() -> Check {
    for n in 0..=12u32 {
        let depth = 2 * n as usize + 10;
        for level in 0..=depth {
            let mu = n as i64 - 2 * level as i64;
            let b = casimir_blocks(n, mu, depth).map_err(|e| e.to_string())?;
            ensure(b.passed(), || format!("n={n} μ={mu}: blocks differ from the prediction"))?;
        }
    }
    Ok(())
}

fn pseudoadjoint_criterion() -> Check {
    for n in 0..=8u32 {
        let doc = suites::pseudoadjoint(n, 8).map_err(|e| e.to_string())?;
        for c in &doc.cases {
            ensure(c.passed && c.b_minus_c_is_casimir, || format!("n={n} {}: residual or B−C ≠ Ω", c.module))?;
        }
    }
    Ok(())
}

fn decategorification_criterion() -> Check {
    for n in 0..=12u32 {
        let rep = decategorify(n, 2 * n as usize + 10).map_err(|e| e.to_string())?;
        ensure(rep.f_nonnegative, || format!("n={n}: act_f has a negative or fractional entry"))?;
        ensure(rep.f_powers.iter().all(|p| p.2), || format!("n={n}: some f^l u_s leaves ℕ"))?;
        ensure(rep.bijective && rep.f_intertwines && rep.minus_e_intertwines, || format!("n={n}: Grothendieck map"))?;
        ensure(rep.u_classes.iter().all(|u| u.1), || format!("n={n}: [U_s] ↦ u_s fails"))?;
        ensure(rep.passed(), || format!("n={n}: decategorification report failed"))?;
    }
    Ok(())
}

fn hecke_criterion() -> Check {
    let doc = suites::verify_hecke(None, QMode::Both, 200, DEFAULT_SEED).map_err(|e| e.to_string())?;
    let max = |v: &[suites::RelationDoc]| v.iter().map(|r| r.n).max().unwrap_or(0);
    ensure(max(&doc.degenerate) == 5 && max(&doc.nondegenerate) == 4 && max(&doc.degeneration) == 3, || {
        "wrong coverage".into()
    })?;
    for r in doc.degenerate.iter().chain(&doc.nondegenerate).chain(&doc.degeneration) {
        ensure(r.passed, || format!("{} n={}: {:?}", r.model, r.n, r.failures.first().map(|f| f.relation)))?;
    }
    ensure(doc.passed, || "associativity fuzz".into())
}

fn heisenberg_criterion() -> Check {
    let fixture = fixtures::load_tilde().map_err(|e| format!("tilde fixture: {e}"))?;
    let doc = suites::verify_heisenberg(1000, DEFAULT_SEED, Some(&fixture)).map_err(|e| e.to_string())?;
    ensure(doc.generating_order == 6 && doc.generating_nonzero == 0, || "generating identity".into())?;
    ensure(doc.confluence.trials == 1000 && doc.confluence.mismatches == 0, || "confluence mismatch".into())?;
    ensure(doc.confluence.negative == 0 && doc.fock_failures == 0, || "negative coefficient".into())?;
    ensure(doc.tilde_matches_fixture, || "tilde table differs from fixture".into())?;
    let cell = |n, m| doc.tilde_table.iter().find(|r| r.n == n && r.m == m).map(|r| r.commutator.as_str());
    ensure(cell(1, 1) == Some("1") && cell(2, 2) == Some("1") && cell(2, 1) == Some("0"), || "spot commutators".into())
}

fn adelman_criterion() -> Check {
    let fixture = fixtures::load_adelman().map_err(|e| format!("adelman fixture: {e}"))?;
    let doc = suites::verify_adelman(100, DEFAULT_SEED, Some(&fixture)).map_err(|e| e.to_string())?;
    let c = &doc.congruence_checks;
    ensure(c.trials >= 100 && c.reflexive.min(c.symmetric).min(c.transitive) == c.trials, || "congruence".into())?;
    ensure(c.pre_composition == c.trials && c.post_composition == c.trials, || "composition".into())?;
    ensure(doc.universal_property_trials.failed == 0, || "universal property".into())?;
    ensure(doc.special_cases.failed == 0, || "kernel/cokernel of identity and zero".into())?;
    ensure(doc.stable && doc.matches_fixture, || "interpretation not stable".into())?;
    ensure(doc.passed, || "adelman report".into())
}

fn end_to_end_criterion() -> Check {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_verma-lab"))
            .args(["report", "--n-max", "8"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
        })?;
        Ok::<_, String>(out.stdout)
    };
    let start = Instant::now();
    let (a, b) = (run()?, run()?);
    let elapsed = start.elapsed();
    ensure(a == b, || "outputs differ between runs".into())?;
    ensure(elapsed < Duration::from_secs(300), || format!("two runs took {elapsed:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("index sets match the closed form; disjoint union up to n=64", index_sets_criterion),
        ("highest weight vectors: 1-dim kernels, proportional to p, positive integers", hwv_criterion),
        ("alpha and beta recursion residuals vanish", recursion_criterion),
        ("projective generators: Jordan structure and positive shifted coefficients", projgen_criterion),
        ("decomposition audit: per-weight dimensions agree", audit_criterion),
        ("Casimir blocks: eigenvalues, 2-step nilpotency, excess", casimir_criterion),
        ("pseudoadjoint identity and B−C = Ω", pseudoadjoint_criterion),
        ("positivity and the Grothendieck map", decategorification_criterion),
        ("Hecke relations and degeneration", hecke_criterion),
        ("Heisenberg identity, confluence, tilde fixture", heisenberg_criterion),
        ("Adelman congruence, universal properties, stable reading", adelman_criterion),
        ("report --n-max 8 is fast and byte-deterministic", end_to_end_criterion),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
