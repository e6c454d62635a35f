use super::*;
use crate::exactla::int;
use crate::trial_rng;

fn m(rows: &[&[i64]]) -> Mat {
    Mat::from_dense(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
}

#[test]
fn kernel_of_embedded_identity_vanishes() {
    let t = TripleMorphism::embed(&Mat::identity(1));
    assert!(is_zero_equivalent(kernel(&t).unwrap().source()).unwrap());
    assert!(is_zero_equivalent(cokernel(&t).unwrap().target()).unwrap());
}

#[test]
fn cokernel_of_zero_line_into_plane_is_the_plane() {
    let t = TripleMorphism::embed(&Mat::zeros(2, 1));
    let proj = cokernel(&t).unwrap();
    assert!(homotopy_inverse(&proj).unwrap().is_some());
}

#[test]
fn embedded_rank_examples() {
    let inj = TripleMorphism::embed(&m(&[&[1], &[2]]));
    assert!(is_zero_equivalent(kernel(&inj).unwrap().source()).unwrap());
    assert!(!is_zero_equivalent(cokernel(&inj).unwrap().target()).unwrap());
    let surj = TripleMorphism::embed(&m(&[&[1, 2]]));
    assert!(!is_zero_equivalent(kernel(&surj).unwrap().source()).unwrap());
    assert!(is_zero_equivalent(cokernel(&surj).unwrap().target()).unwrap());
}

#[test]
fn kernel_inclusion_kills_t() {
    let mut rng = trial_rng(11, 0);
    for _ in 0..10 {
        let x = random_object(&mut rng, 3);
        let y = random_object(&mut rng, 3);
        let t = random_morphism(&mut rng, &x, &y).unwrap();
        assert!(t.is_morphism());
        let incl = kernel(&t).unwrap();
        assert!(incl.is_morphism());
        assert!(null_homotopic(&t.after(&incl).unwrap()).unwrap().is_some());
        let proj = cokernel(&t).unwrap();
        assert!(proj.is_morphism());
        assert!(null_homotopic(&proj.after(&t).unwrap()).unwrap().is_some());
    }
}

#[test]
fn samplers_respect_their_constraints() {
    let mut rng = trial_rng(5, 3);
    for _ in 0..10 {
        let x = random_object(&mut rng, 3);
        let y = random_object(&mut rng, 3);
        let w = random_object(&mut rng, 3);
        let t = random_morphism(&mut rng, &x, &y).unwrap();
        let u = random_killed_by(&mut rng, &t, &w).unwrap();
        assert!(u.is_morphism() && null_homotopic(&t.after(&u).unwrap()).unwrap().is_some());
        let v = random_killing(&mut rng, &t, &w).unwrap();
        assert!(v.is_morphism() && null_homotopic(&v.after(&t).unwrap()).unwrap().is_some());
        let g = random_homotopic(&mut rng, &t).unwrap();
        assert!(g.is_morphism() && homotopic(&t, &g).unwrap().is_some());
    }
}

#[test]
fn plain_kernel_reading_fails_somewhere() {
    let sel = select_interpretation(2024, 30, 4).unwrap();
    assert_eq!(sel.kernel, Some(KernelReading::AugmentedMiddle), "{sel:?}");
    assert_eq!(sel.cokernel, Some(CokernelReading::AugmentedMiddle), "{sel:?}");
    assert!(sel.kernel_scores[1].failed > 0);
    assert!(sel.cokernel_scores[1].failed > 0);
}

#[test]
fn small_report_passes() {
    let cfg = AdelmanConfig { trials: 12, tests: 3, stability_instances: 40, stability_tests: 2 };
    let report = adelman_report(7, &cfg).unwrap();
    assert!(report.passed(), "{report:?}");
    assert!(report.stable());
    assert_eq!(report.congruence.trials, 12);
}

#[test]
fn report_notices_instability() {
    let mut report =
        adelman_report(7, &AdelmanConfig { trials: 4, tests: 1, stability_instances: 0, stability_tests: 0 }).unwrap();
    report.stability = alloc::vec![(99, Some(KernelReading::PlainMiddle), Some(CokernelReading::AugmentedMiddle))];
    assert!(!report.stable() && !report.passed());
}
