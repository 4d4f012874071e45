//! Randomized exact verification of the Courant identities on polynomial
//! sections. Every residual is a polynomial and must vanish identically.

use std::time::Instant;

use lie2::poly::Poly;
use lie2::report::{Check, Exec, Report};
use lie2::scalar::to_f64;
use lie2::{AlgebraError, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::calculus::{d_r, pairing_unchecked, OneForm, Section};
use crate::model::{CourantModel, Mutation};
use crate::sample::{random_form, random_poly, random_section, random_vf};

#[derive(Clone, Copy, Debug)]
pub struct CourantConfig {
    pub n_vars: usize,
    pub degree: u32,
    pub trials: usize,
    pub seed: u64,
    pub mutation: Mutation,
    pub exec: Exec,
}

impl Default for CourantConfig {
    fn default() -> Self {
        CourantConfig { n_vars: 3, degree: 3, trials: 50, seed: 0, mutation: Mutation::None, exec: Exec::SEQUENTIAL }
    }
}

/// A residual of any of the three shapes.
pub enum Residual {
    Function(Poly),
    Form(OneForm),
    Section(Section),
}

impl Residual {
    fn is_zero(&self) -> bool {
        match self {
            Residual::Function(p) => p.is_zero(),
            Residual::Form(f) => f.is_zero(),
            Residual::Section(s) => s.is_zero(),
        }
    }

    fn size(&self) -> f64 {
        to_f64(&match self {
            Residual::Function(p) => p.max_abs(),
            Residual::Form(f) => f.max_abs(),
            Residual::Section(s) => s.max_abs(),
        })
    }

    fn text(&self) -> String {
        match self {
            Residual::Function(p) => p.to_string(),
            Residual::Form(f) => f.to_string(),
            Residual::Section(s) => s.to_string(),
        }
    }
}

type Trial = Vec<(&'static str, Residual)>;

fn run(suite: &str, cfg: &CourantConfig, trial: impl Fn(&mut ChaCha8Rng, &CourantModel) -> Trial + Sync + Send) -> Result<Report> {
    if cfg.degree == 0 {
        return Err(AlgebraError::InvalidArgument("degree bound must be at least 1".into()));
    }
    if cfg.n_vars == 0 {
        return Err(AlgebraError::InvalidArgument("need at least one variable".into()));
    }
    let start = Instant::now();
    let model = CourantModel::new(cfg.mutation);
    let results = cfg.exec.map((0..cfg.trials).collect(), |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(t as u64);
        trial(&mut rng, &model)
    });
    let mut checks: Vec<Check> = Vec::new();
    for (t, residuals) in results.into_iter().enumerate() {
        for (name, r) in residuals {
            let pos = match checks.iter().position(|c| c.name() == name) {
                Some(p) => p,
                None => {
                    checks.push(Check::exact(name));
                    checks.len() - 1
                }
            };
            checks[pos].record_raw(&[t], r.size(), r.text(), !r.is_zero());
        }
    }
    let mut report = Report::new(
        suite,
        format!("R^{}, degree <= {}, {} trials, mutation {}", cfg.n_vars, cfg.degree, cfg.trials, cfg.mutation.name()),
    );
    report.seed = Some(cfg.seed);
    for c in checks {
        report.push(c);
    }
    report.set_duration(start.elapsed());
    Ok(report)
}

fn sub_form(a: &OneForm, b: &OneForm) -> OneForm {
    a.sub(b).expect("shared n_vars")
}

fn add_form(a: &OneForm, b: &OneForm) -> OneForm {
    a.add(b).expect("shared n_vars")
}

fn sub_section(a: &Section, b: &Section) -> Section {
    a.sub(b).expect("shared n_vars")
}

fn add_section(a: &Section, b: &Section) -> Section {
    a.add(b).expect("shared n_vars")
}

/// Identities of the representation up to homotopy on `C^∞ --d--> Ω¹`,
/// plus the bracket's Jacobiator `= dT` and the pairing identity used for
/// the cocycle condition. Residual tuples are trial indices.
pub fn check_courant_rep(cfg: &CourantConfig) -> Result<Report> {
    let (n, deg) = (cfg.n_vars, cfg.degree);
    run("courant-rep", cfg, |rng, m| {
        let x = random_vf(rng, n, deg);
        let y = random_vf(rng, n, deg);
        let z = random_vf(rng, n, deg);
        let xi = random_form(rng, n, deg);
        let f = random_poly(rng, n, deg);
        let xy = m.vf_bracket(&x, &y);

        let chain = sub_form(&m.mu0(&x, &d_r(&f)), &d_r(&m.mu1(&x, &f)));

        let mu0_lhs = sub_form(
            &m.mu0(&xy, &xi),
            &sub_form(&m.mu0(&x, &m.mu0(&y, &xi)), &m.mu0(&y, &m.mu0(&x, &xi))),
        );
        let mu0_res = sub_form(&mu0_lhs, &d_r(&m.nu(&x, &y, &xi)));

        let mu1_lhs = m.mu1(&xy, &f) - (m.mu1(&x, &m.mu1(&y, &f)) - m.mu1(&y, &m.mu1(&x, &f)));
        let mu1_res = mu1_lhs - m.nu(&x, &y, &d_r(&f));

        let mut cocycle = Poly::zero(n);
        let mut pairing_id = Poly::zero(n);
        for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
            let ab = m.vf_bracket(a, b);
            let a_xi = m.mu0(a, &xi);
            cocycle = cocycle + m.mu1(a, &m.nu(b, c, &xi)) - m.nu(b, c, &a_xi) - m.nu(&ab, c, &xi);
            let sa = Section::from_vf(a.clone());
            let sb = Section::from_vf(b.clone());
            let sc = Section::from_vf(c.clone());
            let sxi = Section::from_form(xi.clone());
            let dt = Section::from_form(d_r(&m.t3(&sb, &sc, &sxi)));
            pairing_id = pairing_id + pairing_unchecked(&sa, &dt)
                - m.t3(&Section::from_vf(ab), &sc, &sxi)
                - m.t3(&sb, &sc, &Section::from_form(a_xi));
        }

        let e1 = random_section(rng, n, deg);
        let e2 = random_section(rng, n, deg);
        let e3 = random_section(rng, n, deg);
        let mut jac = Section::zero(n);
        for (a, b, c) in [(&e1, &e2, &e3), (&e2, &e3, &e1), (&e3, &e1, &e2)] {
            jac = add_section(&jac, &m.bracket(&m.bracket(a, b), c));
        }
        let jac = sub_section(&jac, &Section::from_form(d_r(&m.t3(&e1, &e2, &e3))));

        let t = m.t3(&e1, &e2, &e3);
        let t_swap = &t + &m.t3(&e2, &e1, &e3);
        let t_cycle = &t - &m.t3(&e2, &e3, &e1);

        vec![
            ("chain_map", Residual::Form(chain)),
            ("mu0_bracket_homotopy", Residual::Form(mu0_res)),
            ("mu1_bracket_homotopy", Residual::Function(mu1_res)),
            ("nu_cocycle", Residual::Function(cocycle)),
            ("pairing_identity", Residual::Function(pairing_id)),
            ("jacobiator_equals_dT", Residual::Section(jac)),
            ("t3_antisymmetric", Residual::Function(t_swap)),
            ("t3_antisymmetric", Residual::Function(t_cycle)),
        ]
    })
}

/// Two-term L∞ relations for `C^∞ --(0, d)--> 𝔛 ⊕ Ω¹` with `l₂ = ⟦·,·⟧`,
/// `l₂(e, f) = ⟨e, df⟩`, `l₃ = −T`, and agreement with the semidirect
/// product brackets built from `μ₀, μ₁, ν`.
pub fn check_courant_linfty(cfg: &CourantConfig) -> Result<Report> {
    let (n, deg) = (cfg.n_vars, cfg.degree);
    run("courant-linfty", cfg, |rng, m| {
        let x = random_section(rng, n, deg);
        let y = random_section(rng, n, deg);
        let z = random_section(rng, n, deg);
        let w = random_section(rng, n, deg);
        let f = random_poly(rng, n, deg);
        let g = random_poly(rng, n, deg);

        let agree_l2 = sub_section(&m.l2(&x, &y), &m.semidirect_l2(&x, &y));
        let agree_fn = m.l2_fn(&x, &f) - m.semidirect_l2_fn(&x, &f);
        let agree_l3 = m.l3(&x, &y, &z) - m.semidirect_l3(&x, &y, &z);

        let b = sub_section(&m.d(&m.l2_fn(&x, &f)), &m.l2(&x, &m.d(&f)));
        let c = m.l2_fn(&m.d(&f), &g) + m.l2_fn(&m.d(&g), &f);

        let l2 = |a: &Section, b: &Section| m.l2(a, b);
        let mut d0 = m.d(&m.l3(&x, &y, &z));
        d0 = add_section(&d0, &l2(&l2(&x, &y), &z));
        d0 = sub_section(&d0, &l2(&l2(&x, &z), &y));
        d0 = add_section(&d0, &l2(&l2(&y, &z), &x));

        let d1 = m.l2_fn(&l2(&x, &y), &f) - m.l2_fn(&x, &m.l2_fn(&y, &f)) + m.l2_fn(&y, &m.l2_fn(&x, &f))
            + m.l3(&x, &y, &m.d(&f));

        let l3b = |a: &Section, b: &Section, c: &Section, e: &Section| m.l3(&l2(a, b), c, e);
        let act = |a: &Section, b: &Section, c: &Section, e: &Section| m.l2_fn(a, &m.l3(b, c, e));
        let e = l3b(&x, &y, &z, &w) - l3b(&x, &z, &y, &w) + l3b(&x, &w, &y, &z) + l3b(&y, &z, &x, &w)
            - l3b(&y, &w, &x, &z)
            + l3b(&z, &w, &x, &y)
            + act(&w, &x, &y, &z)
            - act(&z, &x, &y, &w)
            + act(&y, &x, &z, &w)
            - act(&x, &y, &z, &w);

        vec![
            ("agrees_with_semidirect_l2", Residual::Section(agree_l2)),
            ("agrees_with_semidirect_l2_fn", Residual::Function(agree_fn)),
            ("agrees_with_semidirect_l3", Residual::Function(agree_l3)),
            ("b_d_equivariant", Residual::Section(b)),
            ("c_degree_one_pair", Residual::Function(c)),
            ("d0_jacobiator", Residual::Section(d0)),
            ("d1_mixed_jacobiator", Residual::Function(d1)),
            ("e_coherence", Residual::Function(e)),
        ]
    })
}

/// Identities of the representation up to homotopy on `Ω¹ --Id--> Ω¹` with
/// `μ₀ = μ₁ = ⟦X, ·⟧` and `ν(X,Y)ξ = dT(X,Y,ξ)`.
pub fn check_id_complex_rep(cfg: &CourantConfig) -> Result<Report> {
    let (n, deg) = (cfg.n_vars, cfg.degree);
    run("courant-id-complex", cfg, |rng, m| {
        let x = random_vf(rng, n, deg);
        let y = random_vf(rng, n, deg);
        let z = random_vf(rng, n, deg);
        let xi = random_form(rng, n, deg);
        let xy = m.vf_bracket(&x, &y);

        // d = Id, so d∘μ₁ − μ₀∘d = μ₁ − μ₀
        let chain = sub_form(&m.id_mu1(&x, &xi), &m.id_mu0(&x, &xi));
        let comm0 = sub_form(&m.id_mu0(&x, &m.id_mu0(&y, &xi)), &m.id_mu0(&y, &m.id_mu0(&x, &xi)));
        let mu0_res = sub_form(&sub_form(&m.id_mu0(&xy, &xi), &comm0), &m.id_nu(&x, &y, &xi));
        let comm1 = sub_form(&m.id_mu1(&x, &m.id_mu1(&y, &xi)), &m.id_mu1(&y, &m.id_mu1(&x, &xi)));
        let mu1_res = sub_form(&sub_form(&m.id_mu1(&xy, &xi), &comm1), &m.id_nu(&x, &y, &xi));

        let mut cocycle = OneForm::zero(n);
        for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
            let ab = m.vf_bracket(a, b);
            cocycle = add_form(&cocycle, &m.id_mu1(a, &m.id_nu(b, c, &xi)));
            cocycle = sub_form(&cocycle, &m.id_nu(b, c, &m.id_mu0(a, &xi)));
            cocycle = sub_form(&cocycle, &m.id_nu(&ab, c, &xi));
        }
        vec![
            ("chain_map", Residual::Form(chain)),
            ("mu0_bracket_homotopy", Residual::Form(mu0_res)),
            ("mu1_bracket_homotopy", Residual::Form(mu1_res)),
            ("nu_cocycle", Residual::Form(cocycle)),
        ]
    })
}
