use courant::{check_courant_linfty, check_courant_rep, check_id_complex_rep, CourantConfig, Mutation};
use lie2::report::{Exec, Report};
use lie2::AlgebraError;

fn cfg(n_vars: usize, degree: u32, trials: usize, seed: u64, mutation: Mutation) -> CourantConfig {
    CourantConfig { n_vars, degree, trials, seed, mutation, ..CourantConfig::default() }
}

fn all(c: &CourantConfig) -> [Report; 3] {
    [check_courant_rep(c).unwrap(), check_courant_linfty(c).unwrap(), check_id_complex_rep(c).unwrap()]
}

#[test]
fn affine_data_in_the_plane() {
    for r in all(&cfg(2, 1, 8, 0, Mutation::None)) {
        assert!(r.passed(), "{}", r.to_human());
    }
}

#[test]
fn seeded_quadratic_trials_in_space() {
    for r in all(&cfg(3, 2, 6, 7, Mutation::None)) {
        assert!(r.passed(), "{}", r.to_human());
        assert!(r.checks.iter().all(|c| c.evaluated >= 6));
    }
}

#[test]
fn dropping_the_half_in_mu1_breaks_the_chain_map() {
    let [rep, linfty, id] = all(&cfg(2, 2, 3, 1, Mutation::DropHalfInMu1));
    assert!(!rep.check("chain_map").unwrap().passed);
    assert!(rep.check("mu0_bracket_homotopy").unwrap().passed);
    assert!(rep.check("jacobiator_equals_dT").unwrap().passed);
    assert!(!linfty.check("b_d_equivariant").unwrap().passed);
    assert!(linfty.check("agrees_with_semidirect_l2_fn").unwrap().passed);
    assert!(!id.check("chain_map").unwrap().passed);
}

#[test]
fn zero_homotopy_is_detected() {
    let [rep, linfty, id] = all(&cfg(2, 2, 3, 1, Mutation::ZeroNu));
    assert!(!rep.check("mu0_bracket_homotopy").unwrap().passed);
    assert!(!linfty.check("d0_jacobiator").unwrap().passed);
    assert!(!id.check("mu0_bracket_homotopy").unwrap().passed);
}

#[test]
fn changed_bracket_coefficient_is_detected() {
    let [rep, linfty, id] = all(&cfg(2, 2, 3, 1, Mutation::DropHalfInBracket));
    assert!(!rep.check("jacobiator_equals_dT").unwrap().passed);
    assert!(!linfty.check("d0_jacobiator").unwrap().passed);
    assert!(!id.passed());
}

#[test]
fn residuals_are_printed_as_polynomials() {
    let rep = check_courant_rep(&cfg(2, 1, 2, 3, Mutation::DropHalfInMu1)).unwrap();
    let chain = rep.check("chain_map").unwrap();
    assert_eq!(chain.counterexamples.len(), chain.violations);
    assert!(chain.counterexamples.iter().all(|c| c.residual.contains('d')));
    assert_eq!(rep.seed, Some(3));
}

#[test]
fn parallel_runs_agree() {
    let mut c = cfg(2, 2, 4, 9, Mutation::DropHalfInMu1);
    let seq = check_courant_rep(&c).unwrap();
    c.exec = Exec { parallel: true };
    let par = check_courant_rep(&c).unwrap();
    assert_eq!(seq.checks, par.checks);
}

#[test]
fn degree_zero_is_rejected() {
    let c = cfg(3, 0, 1, 0, Mutation::None);
    assert!(matches!(check_courant_rep(&c), Err(AlgebraError::InvalidArgument(_))));
    let c = cfg(0, 1, 1, 0, Mutation::None);
    assert!(matches!(check_id_complex_rep(&c), Err(AlgebraError::InvalidArgument(_))));
}

#[test]
fn mutation_names_round_trip() {
    for m in [Mutation::None, Mutation::DropHalfInMu1, Mutation::DropHalfInBracket, Mutation::ZeroNu] {
        assert_eq!(Mutation::parse(m.name()), Some(m));
    }
    assert_eq!(Mutation::parse("other"), None);
}
