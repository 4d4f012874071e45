mod common;

use common::{config, heisenberg, strict_coadjoint, strict_identity_complex};
use group2::cocycle::random_polymatrix;
use group2::rep::f2_coherence_residual;
use group2::{check_group_rep, check_group_rep_on, integrate_nilpotent, symbolic_fbar_defect, GroupError, GroupModel};
use lie2::catalog;
use lie2::rep::{random_rep, string_datum, ActionKind};
use lie2::scalar::{int, q};
use lie2::{Matrix, Ring, Scalar};

#[test]
fn strict_reps_pass() {
    for r in [
        strict_coadjoint(&catalog::heis3(), "H3"),
        strict_identity_complex(&catalog::heis3(), "H3"),
        strict_identity_complex(&catalog::filiform4(), "F4"),
    ] {
        let report = check_group_rep(&r, &config(32, 1));
        assert!(report.passed(), "{}", report.to_human());
    }
}

#[test]
fn heisenberg_integration_passes_exactly_and_in_floating_point() {
    let r = heisenberg();
    let report = check_group_rep(&r, &config(64, 7));
    assert!(report.passed(), "{}", report.to_human());
    for name in ["fbar_cocycle", "fbar_normalized", "f2_from_fbar"] {
        assert!(report.check(name).is_some(), "{name}");
    }
    let float = check_group_rep(&r, &config(64, 7).floating());
    assert!(float.passed(), "{}", float.to_human());
    assert_eq!(float.tolerance, Some(1e-10));
}

#[test]
fn integration_over_the_nilpotent_catalog() {
    for (name, g) in [
        ("abelian:3", catalog::abelian(3)),
        ("heis3", catalog::heis3()),
        ("filiform4", catalog::filiform4()),
    ] {
        let r = integrate_nilpotent(name, &string_datum(&g)).unwrap();
        assert!(symbolic_fbar_defect(&r).unwrap().is_zero(), "{name}");
        assert!(check_group_rep(&r, &config(24, 3)).passed(), "{name}");
    }
}

#[test]
fn integration_of_random_nilpotent_reps() {
    // Trivial actions with a random ν on heis3; coadjoint μ₀ with random ν
    // on the abelian algebra.
    let cases = [
        (catalog::heis3(), ActionKind::Trivial(2), ActionKind::Trivial(1)),
        (catalog::abelian(2), ActionKind::Coadjoint, ActionKind::Trivial(2)),
    ];
    let mut exercised = 0;
    for (g, k0, k1) in cases {
        for seed in 0..4 {
            let mut r = random_rep(&g, &k0, &k1, seed).unwrap();
            r.complex.d = Matrix::zeros(r.v0(), r.v1());
            if !lie2::check_rep(&r).passed() {
                continue;
            }
            let rep = integrate_nilpotent("G", &r).unwrap();
            assert!(symbolic_fbar_defect(&rep).unwrap().is_zero());
            assert!(check_group_rep(&rep, &config(16, seed)).passed());
            exercised += 1;
        }
    }
    assert!(exercised >= 4, "only {exercised} valid reps");
}

#[test]
fn non_nilpotent_algebras_are_rejected() {
    let r = string_datum(&catalog::so3());
    assert!(matches!(integrate_nilpotent("SO3", &r), Err(GroupError::NotNilpotent)));
}

#[test]
fn tampering_one_pair_flags_only_f2_coherence() {
    let a = vec![q(1, 2), int(0), int(-1)];
    let b = vec![int(0), int(1), q(1, 2)];
    let c = vec![int(1), int(1), int(0)];
    let delta = Matrix::from_fn(1, 3, |_, j| if j == 2 { int(1) } else { <Scalar as Ring>::zero() });
    let r = heisenberg().with_f2_tamper(a.clone(), b.clone(), delta);
    let elements = vec![GroupModel::nilpotent("H3", &catalog::heis3()).unwrap().identity(), a, b, c];
    let report = check_group_rep_on(&r, &elements, &config(0, 0)).unwrap();
    assert_eq!(report.failures(), vec!["f2_coherence", "f2_from_fbar"]);
    let eq = report.check("f2_coherence").unwrap();
    // The pair (a, b) enters as (g₁, g₂) or (g₂, g₃), once per free slot.
    assert!(eq.counterexamples.iter().all(|c| c.tuple.windows(2).any(|w| w == [1, 2])));
}

#[test]
fn perturbation_of_f2_breaks_coherence_for_zero_differential() {
    let r = heisenberg();
    let p = random_polymatrix(1, 3, 6, 2, 11);
    let r = r.with_f2_perturbation(&p).unwrap();
    let report = check_group_rep(&r, &config(16, 0));
    assert!(report.check("f1_homotopy").unwrap().passed);
    assert!(!report.check("f2_coherence").unwrap().passed);
}

#[test]
fn coherence_residual_vanishes_at_identity_triples() {
    let r = heisenberg();
    let one: Vec<Scalar> = r.group.identity();
    let res = f2_coherence_residual(&r, &one, &one, &one);
    assert!(res.is_zero());
}

#[test]
fn wrong_element_length_is_a_dimension_error() {
    let r = heisenberg();
    let err = check_group_rep_on(&r, &[vec![int(1)]], &config(0, 0)).unwrap_err();
    assert!(matches!(err, GroupError::Dimension { .. }));
}
