//! Unital two-term representations up to homotopy of a nilpotent group.

use std::time::Instant;

use lie2::{check_rep, Exec, Matrix, Measured, Mode, Report, RepUpToHomotopy, Ring, Scalar, TwoTermComplex};

use crate::error::{dim, GroupError, Result};
use crate::model::GroupModel;
use crate::polymat::PolyMatrix;
use crate::sample::{exhaustive, lift, run_check, seeded_elements, SampleConfig};

#[derive(Clone, Debug, PartialEq)]
struct PointTamper {
    g1: Vec<Scalar>,
    g2: Vec<Scalar>,
    delta: Matrix,
}

/// `F₁` on `V0` and `V1` as polynomial matrices in the coordinates of `g`,
/// and `F₂(g₁, g₂): V0 → V1` in the coordinates of `(g₁, g₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRep {
    pub group: GroupModel,
    pub complex: TwoTermComplex,
    f1_0: PolyMatrix,
    f1_1: PolyMatrix,
    f2: PolyMatrix,
    fbar: Option<PolyMatrix>,
    tamper: Option<PointTamper>,
}

impl GroupRep {
    /// Checks shapes only; use [`check_group_rep`] for the identities.
    pub fn new(
        group: GroupModel,
        complex: TwoTermComplex,
        f1_0: PolyMatrix,
        f1_1: PolyMatrix,
        f2: PolyMatrix,
    ) -> Result<Self> {
        let n = group.dim();
        let (v0, v1) = (complex.v0, complex.v1);
        if (f1_0.rows(), f1_0.cols()) != (v0, v0) {
            return Err(dim("F1 on V0", v0, f1_0.rows()));
        }
        if (f1_1.rows(), f1_1.cols()) != (v1, v1) {
            return Err(dim("F1 on V1", v1, f1_1.rows()));
        }
        if (f2.rows(), f2.cols()) != (v1, v0) {
            return Err(dim("F2 target", v1 * v0, f2.rows() * f2.cols()));
        }
        if f1_0.n_vars() != n || f1_1.n_vars() != n {
            return Err(dim("F1 variables", n, f1_0.n_vars()));
        }
        if f2.n_vars() != 2 * n {
            return Err(dim("F2 variables", 2 * n, f2.n_vars()));
        }
        Ok(GroupRep {
            group,
            complex,
            f1_0,
            f1_1,
            f2,
            fbar: None,
            tamper: None,
        })
    }

    /// `F₁ = exp ∘ μ`, `F₂ = 0` for a rep of the algebra with `ν = 0`.
    pub fn strict(group: GroupModel, r: &RepUpToHomotopy) -> Result<Self> {
        if &r.g != group.algebra() {
            return Err(GroupError::InvalidRep("rep is over a different Lie algebra".into()));
        }
        if !r.nu.is_zero() {
            return Err(GroupError::InvalidRep("strict integration needs ν = 0".into()));
        }
        let (f1_0, f1_1) = exponentiate(r)?;
        let n = group.dim();
        let f2 = PolyMatrix::zeros(r.v1(), r.v0(), 2 * n);
        GroupRep::new(group, r.complex.clone(), f1_0, f1_1, f2)
    }

    pub(crate) fn with_fbar(mut self, fbar: PolyMatrix) -> Self {
        self.fbar = Some(fbar);
        self
    }

    /// Adds `delta` to `F₂` at the single pair `(g₁, g₂)`.
    pub fn with_f2_tamper(mut self, g1: Vec<Scalar>, g2: Vec<Scalar>, delta: Matrix) -> Self {
        self.tamper = Some(PointTamper { g1, g2, delta });
        self
    }

    /// Adds a polynomial map to `F₂` everywhere.
    pub fn with_f2_perturbation(mut self, p: &PolyMatrix) -> Result<Self> {
        if (p.rows(), p.cols(), p.n_vars()) != (self.f2.rows(), self.f2.cols(), self.f2.n_vars()) {
            return Err(dim("F2 perturbation", self.f2.rows() * self.f2.cols(), p.rows() * p.cols()));
        }
        self.f2 = self.f2.add(p);
        Ok(self)
    }

    pub fn v0(&self) -> usize {
        self.complex.v0
    }

    pub fn v1(&self) -> usize {
        self.complex.v1
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn f1_0_polys(&self) -> &PolyMatrix {
        &self.f1_0
    }

    pub fn f1_1_polys(&self) -> &PolyMatrix {
        &self.f1_1
    }

    pub fn f2_polys(&self) -> &PolyMatrix {
        &self.f2
    }

    /// `F̄₂` when the rep came from integrating a cocycle.
    pub fn fbar_polys(&self) -> Option<&PolyMatrix> {
        self.fbar.as_ref()
    }

    pub fn f1_0_at<R: Ring>(&self, g: &[R]) -> Matrix<R> {
        self.f1_0.eval(g)
    }

    pub fn f1_1_at<R: Ring>(&self, g: &[R]) -> Matrix<R> {
        self.f1_1.eval(g)
    }

    pub fn f2_at<R: Ring>(&self, g1: &[R], g2: &[R]) -> Matrix<R> {
        let point: Vec<R> = g1.iter().chain(g2).cloned().collect();
        let value = self.f2.eval(&point);
        match &self.tamper {
            Some(t) if lift::<R>(&t.g1) == g1 && lift::<R>(&t.g2) == g2 => &value + &t.delta.map(R::from_scalar),
            _ => value,
        }
    }

    pub fn fbar_at<R: Ring>(&self, g1: &[R], g2: &[R]) -> Option<Matrix<R>> {
        let point: Vec<R> = g1.iter().chain(g2).cloned().collect();
        self.fbar.as_ref().map(|f| f.eval(&point))
    }

    pub fn d<R: Ring>(&self) -> Matrix<R> {
        self.complex.d.map(R::from_scalar)
    }

    pub fn describe(&self) -> String {
        format!(
            "{} (dim {}), V1 = R^{} -> V0 = R^{}",
            self.group.name(),
            self.dim(),
            self.v1(),
            self.v0()
        )
    }
}

/// `(exp μ₀(x), exp μ₁(x))`; fails unless both are nilpotent.
pub(crate) fn exponentiate(r: &RepUpToHomotopy) -> Result<(PolyMatrix, PolyMatrix)> {
    let n = r.g.dim();
    let m0 = PolyMatrix::linear_combination(&r.mu0, r.v0(), n, 0);
    let m1 = PolyMatrix::linear_combination(&r.mu1, r.v1(), n, 0);
    let nilpotent = |m: PolyMatrix, which: &str| {
        m.exp_nilpotent()
            .ok_or_else(|| GroupError::InvalidRep(format!("{which} is not nilpotent, so exp is not polynomial")))
    };
    Ok((nilpotent(m0, "μ0")?, nilpotent(m1, "μ1")?))
}

pub(crate) fn require_valid(r: &RepUpToHomotopy) -> Result<()> {
    let report = check_rep(r);
    if report.passed() {
        Ok(())
    } else {
        Err(GroupError::InvalidRep(format!("failing identities: {}", report.failures().join(", "))))
    }
}

fn entries<R: Ring>(m: &Matrix<R>) -> Vec<R> {
    m.entries().to_vec()
}

/// `F₁(g₁)∘F₂(g₂,g₃) − F₂(g₁g₂,g₃) + F₂(g₁,g₂g₃) − F₂(g₁,g₂)∘F₁(g₃)`.
pub fn f2_coherence_residual<R: Ring>(r: &GroupRep, g1: &[R], g2: &[R], g3: &[R]) -> Matrix<R> {
    let g = &r.group;
    let a = &r.f1_1_at(g1) * &r.f2_at(g2, g3);
    let b = r.f2_at(&g.mul(g1, g2), g3);
    let c = r.f2_at(g1, &g.mul(g2, g3));
    let e = &r.f2_at(g1, g2) * &r.f1_0_at(g3);
    &(&(&a - &b) + &c) - &e
}

/// `F₁(g₁)F₁(g₂) − F₁(g₁g₂) − [d, F₂(g₁,g₂)]` on `V0` then on `V1`.
pub fn f1_homotopy_residual<R: Ring>(r: &GroupRep, g1: &[R], g2: &[R]) -> (Matrix<R>, Matrix<R>) {
    let g12 = r.group.mul(g1, g2);
    let d = r.d::<R>();
    let f2 = r.f2_at(g1, g2);
    let on_v0 = &(&(&r.f1_0_at(g1) * &r.f1_0_at(g2)) - &r.f1_0_at(&g12)) - &(&d * &f2);
    let on_v1 = &(&(&r.f1_1_at(g1) * &r.f1_1_at(g2)) - &r.f1_1_at(&g12)) - &(&f2 * &d);
    (on_v0, on_v1)
}

/// Group coboundary residual of `F̄₂` with `g·A = F₁(g)∘A∘F₁(g)⁻¹`.
fn fbar_cocycle_residual<R: Ring>(r: &GroupRep, g1: &[R], g2: &[R], g3: &[R]) -> Vec<R> {
    let g = &r.group;
    let fb = |a: &[R], b: &[R]| r.fbar_at(a, b).expect("F̄₂ present");
    let conj = &(&r.f1_1_at(g1) * &fb(g2, g3)) * &r.f1_0_at(&g.inverse(g1));
    let res = &(&(&conj - &fb(&g.mul(g1, g2), g3)) + &fb(g1, &g.mul(g2, g3))) - &fb(g1, g2);
    entries(&res)
}

/// Element lists for the three arities of a group suite.
pub(crate) struct ElementTuples {
    pub singles: Vec<(Vec<usize>, Vec<Vec<Scalar>>)>,
    pub pairs: Vec<(Vec<usize>, Vec<Vec<Scalar>>)>,
    pub triples: Vec<(Vec<usize>, Vec<Vec<Scalar>>)>,
}

impl ElementTuples {
    pub fn seeded(n: usize, samples: usize, seed: u64) -> Self {
        let triples = seeded_elements(n, 3, samples, seed);
        let take = |k: usize| -> Vec<(Vec<usize>, Vec<Vec<Scalar>>)> {
            triples.iter().map(|(i, t)| (i.clone(), t[..k].to_vec())).collect()
        };
        ElementTuples {
            singles: take(1),
            pairs: take(2),
            triples,
        }
    }

    pub fn exhaustive(elements: &[Vec<Scalar>]) -> Self {
        ElementTuples {
            singles: exhaustive(elements, 1),
            pairs: exhaustive(elements, 2),
            triples: exhaustive(elements, 3),
        }
    }
}

fn group_rep_checks<R: Measured + Send + Sync>(r: &GroupRep, t: &ElementTuples, tol: f64, exec: Exec) -> Report {
    let mut report = Report::new("group-rep", r.describe());
    let id = r.group.identity::<R>();
    let unit = vec![(vec![], ())];
    report.push(run_check("unital", tol, unit, exec, |_| {
        let a = &r.f1_0_at(&id) - &Matrix::identity(r.v0());
        let b = &r.f1_1_at(&id) - &Matrix::identity(r.v1());
        [entries(&a), entries(&b)].concat()
    }));
    report.push(run_check("chain_map", tol, t.singles.clone(), exec, |g| {
        let g: Vec<R> = lift(&g[0]);
        let d = r.d::<R>();
        entries(&(&(&d * &r.f1_1_at(&g)) - &(&r.f1_0_at(&g) * &d)))
    }));
    report.push(run_check("f1_homotopy", tol, t.pairs.clone(), exec, |p| {
        let (a, b) = f1_homotopy_residual::<R>(r, &lift(&p[0]), &lift(&p[1]));
        [entries(&a), entries(&b)].concat()
    }));
    report.push(run_check("f2_coherence", tol, t.triples.clone(), exec, |p| {
        entries(&f2_coherence_residual::<R>(r, &lift(&p[0]), &lift(&p[1]), &lift(&p[2])))
    }));
    if r.fbar.is_some() {
        report.push(run_check("fbar_normalized", tol, t.singles.clone(), exec, |g| {
            let g: Vec<R> = lift(&g[0]);
            let a = r.fbar_at(&id, &g).expect("F̄₂ present");
            let b = r.fbar_at(&g, &id).expect("F̄₂ present");
            [entries(&a), entries(&b)].concat()
        }));
        report.push(run_check("fbar_cocycle", tol, t.triples.clone(), exec, |p| {
            fbar_cocycle_residual::<R>(r, &lift(&p[0]), &lift(&p[1]), &lift(&p[2]))
        }));
        report.push(run_check("f2_from_fbar", tol, t.pairs.clone(), exec, |p| {
            let (g1, g2): (Vec<R>, Vec<R>) = (lift(&p[0]), lift(&p[1]));
            let fb = r.fbar_at(&g1, &g2).expect("F̄₂ present");
            let rhs = &fb * &r.f1_0_at(&r.group.mul(&g1, &g2));
            entries(&(&r.f2_at(&g1, &g2) - &rhs))
        }));
    }
    report
}

fn finish(mut report: Report, cfg: &SampleConfig, seed: Option<u64>, start: Instant) -> Report {
    report.mode = cfg.mode;
    report.seed = seed;
    report.tolerance = cfg.tolerance_for();
    report.set_duration(start.elapsed());
    report
}

pub(crate) fn dispatch(
    cfg: &SampleConfig,
    exact: impl FnOnce() -> Report,
    floating: impl FnOnce() -> Report,
) -> Report {
    match cfg.mode {
        Mode::Exact => exact(),
        Mode::Floating => floating(),
    }
}

/// Unitality, chain compatibility, the `F₁` defect homotopy and the `F₂`
/// coherence on `cfg.samples` seeded tuples. Integrated reps also report the
/// normalization and cocycle condition of `F̄₂`, separately.
pub fn check_group_rep(r: &GroupRep, cfg: &SampleConfig) -> Report {
    let start = Instant::now();
    let t = ElementTuples::seeded(r.dim(), cfg.samples, cfg.seed);
    let report = dispatch(
        cfg,
        || group_rep_checks::<Scalar>(r, &t, 0.0, cfg.exec),
        || group_rep_checks::<f64>(r, &t, cfg.tolerance, cfg.exec),
    );
    finish(report, cfg, Some(cfg.seed), start)
}

/// [`check_group_rep`] over every tuple drawn from a finite list.
pub fn check_group_rep_on(r: &GroupRep, elements: &[Vec<Scalar>], cfg: &SampleConfig) -> Result<Report> {
    if let Some(e) = elements.iter().find(|e| e.len() != r.dim()) {
        return Err(dim("group element", r.dim(), e.len()));
    }
    let start = Instant::now();
    let t = ElementTuples::exhaustive(elements);
    let report = dispatch(
        cfg,
        || group_rep_checks::<Scalar>(r, &t, 0.0, cfg.exec),
        || group_rep_checks::<f64>(r, &t, cfg.tolerance, cfg.exec),
    );
    Ok(finish(report, cfg, None, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie2::catalog;
    use lie2::AlternatingMap;

    fn adjoint_on_id_complex() -> GroupRep {
        let g = catalog::heis3();
        let r = RepUpToHomotopy::new(
            g.clone(),
            TwoTermComplex::identity(3),
            g.adjoint(),
            g.adjoint(),
            AlternatingMap::zero(2, 3, 9),
        )
        .unwrap();
        GroupRep::strict(GroupModel::nilpotent("H", &g).unwrap(), &r).unwrap()
    }

    #[test]
    fn strict_rep_passes_both_modes() {
        let r = adjoint_on_id_complex();
        let cfg = SampleConfig {
            samples: 16,
            ..SampleConfig::default()
        };
        let report = check_group_rep(&r, &cfg);
        assert!(report.passed(), "{}", report.to_human());
        assert!(check_group_rep(&r, &cfg.floating()).passed());
    }

    #[test]
    fn nonzero_nu_is_not_strict() {
        let g = catalog::heis3();
        let model = GroupModel::nilpotent("H", &g).unwrap();
        let r = lie2::rep::string_datum(&g);
        assert!(matches!(GroupRep::strict(model, &r), Err(GroupError::InvalidRep(_))));
    }

    #[test]
    fn perturbing_f2_breaks_the_homotopy_when_d_is_nonzero() {
        let r = adjoint_on_id_complex();
        let x = lie2::Poly::var(6, 0);
        let p = PolyMatrix::from_fn(3, 3, 6, |i, j| if i == j { x.clone() } else { lie2::Poly::zero(6) });
        let r = r.with_f2_perturbation(&p).unwrap();
        let cfg = SampleConfig {
            samples: 16,
            ..SampleConfig::default()
        };
        let report = check_group_rep(&r, &cfg);
        assert_eq!(report.failures(), vec!["f1_homotopy", "f2_coherence"]);
    }
}
