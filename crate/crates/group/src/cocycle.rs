//! The group 3-cochain `F̃₂` on `G ⋉ V0` and the exactness transfer.

use std::time::Instant;

use lie2::{Measured, Poly, Report, Ring, Scalar, TwoTermComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GroupError, Result};
use crate::polymat::PolyMatrix;
use crate::rep::{dispatch, GroupRep};
use crate::sample::{lift, run_check, SampleConfig, Sampler};
use crate::twogroup::{two_group, Object, TwoGroup};

/// `F̃₂((g₁,ξ₁),(g₂,ξ₂),(g₃,ξ₃)) = F₂(g₁,g₂)(ξ₃)`.
pub fn f2_tilde<R: Ring>(r: &GroupRep, a1: &Object<R>, a2: &Object<R>, a3: &Object<R>) -> Vec<R> {
    r.f2_at(&a1.g, &a2.g).apply(&a3.xi)
}

/// Differential of a 3-cochain on `G ⋉ V0` with values in `V1`, where
/// `(g, ξ)` acts by `F₁(g)`.
pub fn group_d3<R: Ring>(
    t: &TwoGroup,
    c: impl Fn(&Object<R>, &Object<R>, &Object<R>) -> Vec<R>,
    a: &[Object<R>; 4],
) -> Vec<R> {
    let m = |x: &Object<R>, y: &Object<R>| t.mul_objects(x, y);
    let terms = [
        t.rep().f1_1_at(&a[0].g).apply(&c(&a[1], &a[2], &a[3])),
        c(&m(&a[0], &a[1]), &a[2], &a[3]),
        c(&a[0], &m(&a[1], &a[2]), &a[3]),
        c(&a[0], &a[1], &m(&a[2], &a[3])),
        c(&a[0], &a[1], &a[2]),
    ];
    alternate(terms)
}

/// Differential of a 2-cochain on `G ⋉ V0` with values in `V1`.
pub fn group_d2<R: Ring>(t: &TwoGroup, c: impl Fn(&Object<R>, &Object<R>) -> Vec<R>, a: &[Object<R>; 3]) -> Vec<R> {
    let m = |x: &Object<R>, y: &Object<R>| t.mul_objects(x, y);
    let terms = [
        t.rep().f1_1_at(&a[0].g).apply(&c(&a[1], &a[2])),
        c(&m(&a[0], &a[1]), &a[2]),
        c(&a[0], &m(&a[1], &a[2])),
        c(&a[0], &a[1]),
    ];
    alternate(terms)
}

fn alternate<R: Ring, const K: usize>(terms: [Vec<R>; K]) -> Vec<R> {
    let mut out = vec![R::zero(); terms[0].len()];
    for (k, t) in terms.into_iter().enumerate() {
        for (o, x) in out.iter_mut().zip(t) {
            *o = if k % 2 == 0 { o.clone() + x } else { o.clone() - x };
        }
    }
    out
}

fn objects<R: Ring>(tuple: &[(Vec<Scalar>, Vec<Scalar>)]) -> Vec<Object<R>> {
    tuple.iter().map(|(g, xi)| Object { g: lift(g), xi: lift(xi) }).collect()
}

fn sampled_objects(r: &GroupRep, arity: usize, cfg: &SampleConfig) -> Vec<(Vec<usize>, Vec<(Vec<Scalar>, Vec<Scalar>)>)> {
    let mut s = Sampler::new(cfg.seed);
    (0..cfg.samples)
        .map(|i| (vec![i], (0..arity).map(|_| (s.element(r.dim()), s.vector(r.v0()))).collect()))
        .collect()
}

/// `F₁(g₁)F₁(g₂) − F₁(g₁g₂)` on `V0` and `V1`.
fn morphism_defect<R: Ring>(r: &GroupRep, g1: &[R], g2: &[R]) -> Vec<R> {
    let g12 = r.group.mul(g1, g2);
    let a = &(&r.f1_0_at(g1) * &r.f1_0_at(g2)) - &r.f1_0_at(&g12);
    let b = &(&r.f1_1_at(g1) * &r.f1_1_at(g2)) - &r.f1_1_at(&g12);
    [a.entries(), b.entries()].concat()
}

/// Largest morphism defect of `F₁` over sampled pairs, in the configured
/// arithmetic.
fn morphism_failure(r: &GroupRep, cfg: &SampleConfig) -> Option<String> {
    fn worst<R: Measured>(r: &GroupRep, pairs: &[(Vec<usize>, Vec<(Vec<Scalar>, Vec<Scalar>)>)], tol: f64) -> Option<String> {
        pairs.iter().find_map(|(i, p)| {
            let d = morphism_defect::<R>(r, &lift(&p[0].0), &lift(&p[1].0));
            let bad = d.iter().any(|x| if R::EXACT { !x.is_zero() } else { !(x.magnitude() <= tol) });
            bad.then(|| format!("sample {}", i[0]))
        })
    }
    let pairs = sampled_objects(r, 2, cfg);
    match cfg.mode {
        lie2::Mode::Exact => worst::<Scalar>(r, &pairs, 0.0),
        lie2::Mode::Floating => worst::<f64>(r, &pairs, cfg.tolerance),
    }
}

fn require_zero_differential(r: &GroupRep) -> Result<()> {
    if r.complex.d.is_zero() {
        Ok(())
    } else {
        Err(GroupError::InvalidRep("F̃₂ needs d = 0".into()))
    }
}

fn cocycle_checks<R: Measured + Send + Sync>(
    t: &TwoGroup,
    quads: Vec<(Vec<usize>, Vec<(Vec<Scalar>, Vec<Scalar>)>)>,
    tol: f64,
    cfg: &SampleConfig,
) -> Report {
    let r = t.rep();
    let mut report = Report::new("group-3-cocycle", r.describe());
    let ft = |a: &Object<R>, b: &Object<R>, c: &Object<R>| f2_tilde(r, a, b, c);
    report.push(run_check("f2_tilde_closed", tol, quads.clone(), cfg.exec, |q| {
        let o = objects::<R>(q);
        group_d3(t, ft, &[o[0].clone(), o[1].clone(), o[2].clone(), o[3].clone()])
    }));
    report.push(run_check("f2_tilde_normalized", tol, quads, cfg.exec, |q| {
        let o = objects::<R>(q);
        let one = t.unit_object::<R>();
        [
            ft(&one, &o[1], &o[2]),
            ft(&o[0], &one, &o[2]),
            ft(&o[0], &o[1], &one),
        ]
        .concat()
    }));
    report
}

/// Closedness of `F̃₂` under the group differential on sampled quadruples,
/// and its normalization. Needs `d = 0` and `F₁` a group morphism.
pub fn check_group_3cocycle(r: &GroupRep, cfg: &SampleConfig) -> Result<Report> {
    require_zero_differential(r)?;
    if let Some(at) = morphism_failure(r, cfg) {
        return Err(GroupError::NotAssociative(at));
    }
    let start = Instant::now();
    let t = two_group(r.clone());
    let quads = sampled_objects(r, 4, cfg);
    let mut report = dispatch(
        cfg,
        || cocycle_checks::<Scalar>(&t, quads.clone(), 0.0, cfg),
        || cocycle_checks::<f64>(&t, quads.clone(), cfg.tolerance, cfg),
    );
    report.mode = cfg.mode;
    report.seed = Some(cfg.seed);
    report.tolerance = cfg.tolerance_for();
    report.set_duration(start.elapsed());
    Ok(report)
}

/// Result of [`exactness_transfer`].
#[derive(Clone, Debug)]
pub struct ExactnessTransfer {
    /// The rep with `F̄₂ = dα` and `F₂(g₁,g₂) = F̄₂(g₁,g₂)∘F₁(g₁g₂)`.
    pub rep: GroupRep,
    pub alpha: PolyMatrix,
    pub report: Report,
}

impl ExactnessTransfer {
    /// `β((g₁,ξ₁),(g₂,ξ₂)) = α(g₁)F₁(g₁)(ξ₂)`.
    pub fn beta<R: Ring>(&self, a1: &Object<R>, a2: &Object<R>) -> Vec<R> {
        beta(&self.alpha, &self.rep, a1, a2)
    }
}

fn beta<R: Ring>(alpha: &PolyMatrix, r: &GroupRep, a1: &Object<R>, a2: &Object<R>) -> Vec<R> {
    alpha.eval(&a1.g).apply(&r.f1_0_at(&a1.g).apply(&a2.xi))
}

/// For `α: G → Hom(V0, V1)` and the `F₁` of `base` (a morphism, `d = 0`):
/// builds `F̄₂ = dα`, `F₂`, `F̃₂`, and `β`, and checks `F̃₂ = dβ` on sampled
/// triples.
pub fn exactness_transfer(base: &GroupRep, alpha: &PolyMatrix, cfg: &SampleConfig) -> Result<ExactnessTransfer> {
    require_zero_differential(base)?;
    let n = base.dim();
    if (alpha.rows(), alpha.cols(), alpha.n_vars()) != (base.v1(), base.v0(), n) {
        return Err(crate::error::dim("α shape", base.v1() * base.v0(), alpha.rows() * alpha.cols()));
    }
    if let Some(at) = morphism_failure(base, cfg) {
        return Err(GroupError::NotMorphism(at));
    }
    let start = Instant::now();
    let group = base.group.clone();
    let m = 2 * n;
    let x: Vec<Poly> = (0..n).map(|i| Poly::var(m, i)).collect();
    let y: Vec<Poly> = (0..n).map(|i| Poly::var(m, n + i)).collect();
    let neg_x: Vec<Poly> = x.iter().map(|p| -p).collect();
    let xy = group.product_of(&x, &y);
    let conj = base
        .f1_1_polys()
        .compose(&x)
        .mul(&alpha.compose(&y))
        .mul(&base.f1_0_polys().compose(&neg_x));
    let fbar = conj.sub(&alpha.compose(&xy)).add(&alpha.compose(&x));
    let f2 = fbar.mul(&base.f1_0_polys().compose(&xy));
    let complex = TwoTermComplex::zero_differential(base.v1(), base.v0());
    let rep = GroupRep::new(group, complex, base.f1_0_polys().clone(), base.f1_1_polys().clone(), f2)?.with_fbar(fbar);

    fn checks<R: Measured + Send + Sync>(
        rep: &GroupRep,
        alpha: &PolyMatrix,
        triples: Vec<(Vec<usize>, Vec<(Vec<Scalar>, Vec<Scalar>)>)>,
        tol: f64,
        cfg: &SampleConfig,
    ) -> Report {
        let t = two_group(rep.clone());
        let mut report = Report::new("exactness-transfer", rep.describe());
        report.push(run_check("f2_tilde_equals_d_beta", tol, triples, cfg.exec, |q| {
            let o = objects::<R>(q);
            let lhs = f2_tilde(rep, &o[0], &o[1], &o[2]);
            let rhs = group_d2(&t, |a, b| beta(alpha, rep, a, b), &[o[0].clone(), o[1].clone(), o[2].clone()]);
            lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect()
        }));
        report
    }
    let triples = sampled_objects(&rep, 3, cfg);
    let mut report = dispatch(
        cfg,
        || checks::<Scalar>(&rep, alpha, triples.clone(), 0.0, cfg),
        || checks::<f64>(&rep, alpha, triples.clone(), cfg.tolerance, cfg),
    );
    report.mode = cfg.mode;
    report.seed = Some(cfg.seed);
    report.tolerance = cfg.tolerance_for();
    report.set_duration(start.elapsed());
    Ok(ExactnessTransfer {
        rep,
        alpha: alpha.clone(),
        report,
    })
}

/// `rows × cols` matrix of polynomials in `n_vars` variables of degree at
/// most `degree`, each monomial with an integer coefficient in `−2..=2`.
pub fn random_polymatrix(rows: usize, cols: usize, n_vars: usize, degree: u32, seed: u64) -> PolyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut monomials: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n_vars {
        monomials = monomials
            .into_iter()
            .flat_map(|e| {
                let used: u32 = e.iter().sum();
                (0..=degree - used).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    PolyMatrix::from_fn(rows, cols, n_vars, |_, _| {
        let mut p = Poly::zero(n_vars);
        for e in &monomials {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                p.add_term(e.clone(), lie2::scalar::int(c));
            }
        }
        p
    })
}
