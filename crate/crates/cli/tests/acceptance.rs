//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero when any criterion's outcome
//! differs from `EXPECTED_RED` (criteria known to be unattainable as stated).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use courant::{check_courant_linfty, check_courant_rep, check_id_complex_rep, CourantConfig, Mutation};
use group2::cocycle::random_polymatrix;
use group2::differentiate::{differentiate_central, differentiate_jet};
use group2::rep::f2_coherence_residual;
use group2::{
    check_group_3cocycle, check_two_group, exactness_transfer, integrate_nilpotent, two_group, GroupModel, GroupRep,
    Object, SampleConfig, Sampler,
};
use lie2::linfty::{check_semidirect_defect, extract_quadruple};
use lie2::oracle::{compare, random_structure};
use lie2::quadratic::{check_nonexactness, double, nu_tilde, nu_tilde_of, omni_lie, omni_linfty, string_lie2};
use lie2::rep::{check_rep, sample_rep, string_datum};
use lie2::scalar::q;
use lie2::{catalog, check_lie_algebra, check_linfty, semidirect, AlternatingMap, LieAlgebra, Matrix, Ring, Scalar};

/// Criteria whose statement cannot hold; each still runs in full.
/// 4: ν̃ = dφ with φ(X+ξ, Y+η) = ½(η(X) − ξ(Y)) for every g.
/// 9: F̃₂ of the Heisenberg instance is exactly c·t₁t₂t₃ along the curves,
///    so the stencil has no truncation error and the error ratio is 0/0.
const EXPECTED_RED: &[&str] = &["4", "9"];

const SAMPLES: usize = 64;
const FD_STEP: f64 = 1e-3;
const FD_TOL: f64 = 1e-5;
const RATIO_RANGE: (f64, f64) = (3.0, 5.0);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn cfg(samples: usize, seed: u64) -> SampleConfig {
    SampleConfig {
        samples,
        seed,
        ..SampleConfig::default()
    }
}

fn heisenberg() -> GroupRep {
    integrate_nilpotent("heis3", &string_datum(&catalog::heis3())).expect("heis3 integrates")
}

fn strict_coadjoint(g: &LieAlgebra, name: &str) -> GroupRep {
    let mut r = string_datum(g);
    r.nu = AlternatingMap::zero(2, g.dim(), g.dim());
    GroupRep::strict(GroupModel::nilpotent(name, g).expect("nilpotent"), &r).expect("strict rep")
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn c1_jacobi() -> Outcome {
    let start = Instant::now();
    let names = ["abelian:1", "abelian:3", "so3", "sl2", "heis3", "fil4", "gl:2", "gl:3"];
    let failing: Vec<&str> = names
        .iter()
        .filter(|n| !check_lie_algebra(&catalog::by_name(n).unwrap(), n).passed())
        .copied()
        .collect();
    let so3 = catalog::so3();
    let mut undetected = 0;
    let mut mutations = 0;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut g = so3.clone();
                let v = g.constant(i, j, k).clone() + q(1, 1);
                g.set_constant(i, j, k, v);
                mutations += 1;
                if check_lie_algebra(&g, "so3 mutated").passed() {
                    undetected += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        failing.is_empty() && undetected == 0 && within(t, Duration::from_secs(1)),
        format!(
            "{} catalog algebras, failing {failing:?}; {}/{mutations} so3 mutations detected; {:.0} ms (< 1 s)",
            names.len(),
            mutations - undetected,
            t.as_secs_f64() * 1e3
        ),
    )
}

fn c2_semidirect() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let n = 50;
    for seed in 0..n {
        let r = sample_rep(seed).unwrap();
        let small = r.g.dim() <= 3 && r.v0() <= 3 && r.v1() <= 3 && r.complex.d.is_zero();
        let ok = match semidirect(&r) {
            Ok(l) => {
                let quad = extract_quadruple(&l);
                small
                    && check_linfty(&l).passed()
                    && check_semidirect_defect(&r).passed()
                    && quad.is_ok_and(|qd| qd.theta == nu_tilde_of(&r).scale(&q(-1, 1)))
            }
            Err(_) => false,
        };
        if !ok {
            bad.push(seed);
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && within(t, Duration::from_secs(30)),
        format!("{n} seeded reps, failing seeds {bad:?}; {:.1} s (< 30 s)", t.as_secs_f64()),
    )
}

fn c3_string() -> Outcome {
    let mut failing = Vec::new();
    let mut trivial_action = true;
    for name in ["so3", "sl2", "heis3", "abelian:3"] {
        let q2 = double(&catalog::by_name(name).unwrap());
        let l = string_lie2(&q2).unwrap();
        if !check_linfty(&l).passed() {
            failing.push(name);
        }
        match extract_quadruple(&l) {
            Ok(quad) => trivial_action &= quad.phi.iter().all(Matrix::is_zero),
            Err(_) => trivial_action = false,
        }
    }
    let pinned = nu_tilde(&catalog::so3()).eval(&[0, 1, 5])[0].clone();
    outcome(
        failing.is_empty() && trivial_action && pinned == q(1, 2),
        format!(
            "check_linfty failing {failing:?}; nu_tilde(e1,e2,e3*) = {}; l2(e,c) = 0: {trivial_action}",
            lie2::scalar::format_scalar(&pinned)
        ),
    )
}

fn c4_nonexactness() -> Outcome {
    let start = Instant::now();
    let verdict = |n: &str| check_nonexactness(&catalog::by_name(n).unwrap()).unwrap();
    let (so3, sl2, ab3) = (verdict("so3"), verdict("sl2"), verdict("abelian:3"));
    let t = start.elapsed();
    let rank = |v: &lie2::quadratic::Nonexactness| format!("{}/{}", v.certificate.rank, v.certificate.augmented_rank);
    outcome(
        so3.not_exact && sl2.not_exact && !ab3.not_exact && within(t, Duration::from_secs(5)),
        format!(
            "not exact: so3 {} (rank D/[D|nu] {}), sl2 {} ({}), abelian:3 {} ({}); {:.0} ms (< 5 s)",
            so3.not_exact,
            rank(&so3),
            sl2.not_exact,
            rank(&sl2),
            ab3.not_exact,
            rank(&ab3),
            t.as_secs_f64() * 1e3
        ),
    )
}

fn c5_omni() -> Outcome {
    let r = omni_lie(2);
    let rep_ok = check_rep(&r).passed();
    let linfty_ok = check_linfty(&omni_linfty(2)).passed();
    let equal = r.mu0 == r.mu1;
    let mut forced = true;
    for i in 0..r.g.dim() {
        let mut bad = r.clone();
        bad.mu1[i] = Matrix::zeros(2, 2);
        forced &= !check_rep(&bad).check("chain_map").unwrap().passed;
    }
    outcome(
        rep_ok && linfty_ok && equal && forced,
        format!("check_rep {rep_ok}, check_linfty {linfty_ok}, mu0 = mu1 {equal}, other mu1 rejected {forced}"),
    )
}

fn c6_courant() -> Outcome {
    let start = Instant::now();
    let base = CourantConfig {
        n_vars: 3,
        degree: 3,
        trials: 50,
        seed: 6,
        ..CourantConfig::default()
    };
    let run = |c: &CourantConfig| {
        [check_courant_rep(c), check_courant_linfty(c), check_id_complex_rep(c)]
            .into_iter()
            .map(|r| r.expect("shapes"))
            .collect::<Vec<_>>()
    };
    let clean = run(&base);
    let clean_ok = clean.iter().all(|r| r.passed());
    let mutated = run(&CourantConfig {
        mutation: Mutation::DropHalfInMu1,
        ..base
    });
    let caught: Vec<&str> = mutated.iter().flat_map(|r| r.failures()).collect();
    let t = start.elapsed();
    outcome(
        clean_ok && !caught.is_empty() && within(t, Duration::from_secs(120)),
        format!(
            "R^3, degree <= 3, 50 trials: all residuals zero {clean_ok}; half dropped in mu1 caught by {} checks; {:.1} s (< 2 min)",
            caught.len(),
            t.as_secs_f64()
        ),
    )
}

fn c7_two_group() -> Outcome {
    let strict = check_two_group(&two_group(strict_coadjoint(&catalog::heis3(), "heis3")), &cfg(SAMPLES, 7));
    let heis = check_two_group(&two_group(heisenberg()), &cfg(SAMPLES, 7));
    let enough = strict.checks.iter().chain(&heis.checks).all(|c| c.evaluated >= SAMPLES);

    // Pentagon versus coherence per tuple, on mutated F₂.
    let mut agree = 0;
    let mut disagree = 0;
    let mut both_sides = (0, 0);
    for seed in 0..6u64 {
        let r = heisenberg()
            .with_f2_perturbation(&random_polymatrix(1, 3, 6, 1 + seed as u32 % 2, seed))
            .unwrap();
        let t = two_group(r);
        let mut s = Sampler::new(500 + seed);
        for k in 0..24 {
            let mut objs: Vec<Object<Scalar>> = (0..4)
                .map(|_| Object {
                    g: s.element(3),
                    xi: s.vector(3),
                })
                .collect();
            if k % 3 == 0 {
                objs[3].xi = vec![<Scalar as Ring>::zero(); 3];
            }
            let pent = t.pentagon_residual(&objs[0], &objs[1], &objs[2], &objs[3]);
            let coh = f2_coherence_residual(t.rep(), &objs[0].g, &objs[1].g, &objs[2].g).apply(&objs[3].xi);
            let p0 = pent.iter().all(Ring::is_zero);
            let c0 = coh.iter().all(Ring::is_zero);
            if p0 == c0 {
                agree += 1;
            } else {
                disagree += 1;
            }
            if p0 {
                both_sides.0 += 1;
            } else {
                both_sides.1 += 1;
            }
        }
    }
    outcome(
        strict.passed() && heis.passed() && enough && disagree == 0 && both_sides.0 > 0 && both_sides.1 > 0,
        format!(
            "strict {} / heisenberg {} over {} families x {SAMPLES} tuples; pentagon <=> coherence on {agree}/{} mutated tuples ({} zero, {} nonzero)",
            strict.passed(),
            heis.passed(),
            heis.checks.len(),
            agree + disagree,
            both_sides.0,
            both_sides.1
        ),
    )
}

fn c8_cocycle() -> Outcome {
    let report = check_group_3cocycle(&heisenberg(), &cfg(SAMPLES, 8)).unwrap();
    let closed = report.check("f2_tilde_closed").unwrap();
    outcome(
        closed.passed && closed.evaluated >= SAMPLES,
        format!(
            "d(F2~) on {} quadruples: max residual {}",
            closed.evaluated, closed.max_residual
        ),
    )
}

fn c9_round_trip() -> (Outcome, Outcome) {
    let start = Instant::now();
    let g = catalog::heis3();
    let exact = nu_tilde(&g);
    let r = heisenberg();
    let jet_ok = differentiate_jet(&r).unwrap() == exact;
    let e1 = differentiate_central(&r, FD_STEP).unwrap().max_error(&exact);
    let e2 = differentiate_central(&r, FD_STEP / 2.0).unwrap().max_error(&exact);
    let ratio = e1 / e2;
    let second_order = ratio >= RATIO_RANGE.0 && ratio <= RATIO_RANGE.1;
    let t = start.elapsed();
    let main = outcome(
        jet_ok && e1 < FD_TOL && second_order && within(t, Duration::from_secs(60)),
        format!(
            "jet = nu_tilde {jet_ok}; err(h={FD_STEP:e}) = {e1:e} (< {FD_TOL:e}); err(h/2) = {e2:e}; ratio {ratio} (want {}..{}); {:.2} s (< 1 min)",
            RATIO_RANGE.0,
            RATIO_RANGE.1,
            t.as_secs_f64()
        ),
    );

    // Same cocycle class with F̄₂ shifted by dα, α without constant or linear
    // part: the jet is unchanged and the stencil now has t⁵ terms to miss.
    let mut alpha = random_polymatrix(1, 3, 3, 3, 21);
    alpha = alpha.map(|p| p - &p.truncate(1));
    let shift = exactness_transfer(&strict_coadjoint(&g, "heis3"), &alpha, &cfg(4, 0)).unwrap();
    let shifted = r.with_f2_perturbation(shift.rep.f2_polys()).unwrap();
    let jet_ok = differentiate_jet(&shifted).unwrap() == exact;
    let s1 = differentiate_central(&shifted, 1e-2).unwrap().max_error(&exact);
    let s2 = differentiate_central(&shifted, 5e-3).unwrap().max_error(&exact);
    let s_ratio = s1 / s2;
    let supplement = outcome(
        jet_ok && s1 > 0.0 && s_ratio >= RATIO_RANGE.0 && s_ratio <= RATIO_RANGE.1,
        format!("gauge-shifted heis3: jet = nu_tilde {jet_ok}; err(1e-2) = {s1:e}, err(5e-3) = {s2:e}, ratio {s_ratio:.3}"),
    );
    (main, supplement)
}

fn c10_transfer() -> Outcome {
    let mut failing = Vec::new();
    let mut trials = 0;
    for (name, g) in [("heis3", catalog::heis3()), ("abelian:3", catalog::abelian(3))] {
        let base = strict_coadjoint(&g, name);
        for seed in 0..20 {
            let alpha = random_polymatrix(1, 3, 3, 2, 1000 + seed);
            let t = exactness_transfer(&base, &alpha, &cfg(16, seed)).unwrap();
            trials += 1;
            if !t.report.passed() {
                failing.push(format!("{name}/{seed}"));
            }
        }
    }
    outcome(
        failing.is_empty(),
        format!("{trials} random alpha (20 per algebra): F2~ = d(beta) exactly, failing {failing:?}"),
    )
}

fn c11_oracle() -> Outcome {
    let mut tuples = 0;
    let mut mismatches = 0;
    let mut instances = 0;
    for l0 in 1..=3 {
        for l1 in 1..=3 {
            for seed in 0..3 {
                let c = compare(&random_structure(l0, l1, 7_000 + (l0 * 10 + l1) as u64 * 5 + seed));
                tuples += c.tuples;
                mismatches += c.mismatches.len();
                instances += 1;
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{instances} random structures with dim L0, dim L1 <= 3, {tuples} ordered basis tuples, {mismatches} mismatches"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (c9, c9b) = c9_round_trip();
    let results: Vec<(&str, &str, Outcome)> = vec![
        ("1", "Jacobi / classification", c1_jacobi()),
        ("2", "semidirect soundness", c2_semidirect()),
        ("3", "string Lie 2-algebra", c3_string()),
        ("4", "non-exactness", c4_nonexactness()),
        ("5", "omni-Lie", c5_omni()),
        ("6", "Courant model", c6_courant()),
        ("7", "2-group coherence", c7_two_group()),
        ("8", "group 3-cocycle", c8_cocycle()),
        ("9", "integration / differentiation", c9),
        ("9b", "second order, supplementary", c9b),
        ("10", "exactness transfer", c10_transfer()),
        ("11", "sign oracle", c11_oracle()),
    ];
    let mut unexpected = Vec::new();
    for (id, name, o) in &results {
        let expected_red = EXPECTED_RED.contains(id);
        let tag = match (o.pass, expected_red) {
            (true, false) => "PASS",
            (false, true) => "FAIL (expected)",
            (false, false) => "FAIL",
            (true, true) => "PASS (unexpected)",
        };
        println!("criterion {id:>3} [{tag}] {name}: {}", o.detail);
        if o.pass == expected_red {
            unexpected.push(*id);
        }
    }
    println!("acceptance: {:.1} s total", start.elapsed().as_secs_f64());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: outcome differs from expectation for {unexpected:?}");
        ExitCode::FAILURE
    }
}
