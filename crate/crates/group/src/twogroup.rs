//! The semidirect-product 2-group of a group rep up to homotopy.
//!
//! Objects are pairs `(g, ξ)` with `ξ ∈ V0`; morphisms are triples
//! `(g, ξ, m)` with `m ∈ V1`, from `(g, ξ)` to `(g, ξ + dm)`. The unitors and
//! the counit are identities.

use std::time::Instant;

use lie2::{Measured, Report, Ring, Scalar};

use crate::error::{GroupError, Result};
use crate::rep::{check_group_rep, dispatch, GroupRep};
use crate::sample::{lift, run_check, SampleConfig, Sampler};

#[derive(Clone, Debug, PartialEq)]
pub struct Object<R> {
    pub g: Vec<R>,
    pub xi: Vec<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<R> {
    pub g: Vec<R>,
    pub xi: Vec<R>,
    pub m: Vec<R>,
}

/// A vertical composite together with the mismatch between the target of
/// the first factor and the source of the second (zero when composable).
#[derive(Clone, Debug, PartialEq)]
pub struct Composite<R> {
    pub morphism: Morphism<R>,
    pub mismatch: Vec<R>,
}

impl<R: Ring> Object<R> {
    pub fn coords(&self) -> Vec<R> {
        self.g.iter().chain(&self.xi).cloned().collect()
    }
}

impl<R: Ring> Morphism<R> {
    pub fn source(&self) -> Object<R> {
        Object {
            g: self.g.clone(),
            xi: self.xi.clone(),
        }
    }

    pub fn coords(&self) -> Vec<R> {
        self.g.iter().chain(&self.xi).chain(&self.m).cloned().collect()
    }
}

fn diff<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn add<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn neg<R: Ring>(a: &[R]) -> Vec<R> {
    a.iter().map(|x| -x.clone()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoGroup {
    rep: GroupRep,
}

/// The 2-group of `r`, without checking `r`.
pub fn two_group(r: GroupRep) -> TwoGroup {
    TwoGroup { rep: r }
}

impl TwoGroup {
    /// The 2-group of `r` after `check_group_rep` passes.
    pub fn validated(r: GroupRep, cfg: &SampleConfig) -> Result<Self> {
        let report = check_group_rep(&r, cfg);
        if !report.passed() {
            return Err(GroupError::InvalidRep(format!("failing identities: {}", report.failures().join(", "))));
        }
        Ok(two_group(r))
    }

    pub fn rep(&self) -> &GroupRep {
        &self.rep
    }

    pub fn unit_object<R: Ring>(&self) -> Object<R> {
        Object {
            g: self.rep.group.identity(),
            xi: vec![R::zero(); self.rep.v0()],
        }
    }

    pub fn source<R: Ring>(&self, f: &Morphism<R>) -> Object<R> {
        f.source()
    }

    pub fn target<R: Ring>(&self, f: &Morphism<R>) -> Object<R> {
        Object {
            g: f.g.clone(),
            xi: add(&f.xi, &self.rep.d::<R>().apply(&f.m)),
        }
    }

    pub fn identity<R: Ring>(&self, x: &Object<R>) -> Morphism<R> {
        Morphism {
            g: x.g.clone(),
            xi: x.xi.clone(),
            m: vec![R::zero(); self.rep.v1()],
        }
    }

    pub fn mul_objects<R: Ring>(&self, x: &Object<R>, y: &Object<R>) -> Object<R> {
        Object {
            g: self.rep.group.mul(&x.g, &y.g),
            xi: add(&x.xi, &self.rep.f1_0_at(&x.g).apply(&y.xi)),
        }
    }

    pub fn mul_morphisms<R: Ring>(&self, f: &Morphism<R>, h: &Morphism<R>) -> Morphism<R> {
        Morphism {
            g: self.rep.group.mul(&f.g, &h.g),
            xi: add(&f.xi, &self.rep.f1_0_at(&f.g).apply(&h.xi)),
            m: add(&f.m, &self.rep.f1_1_at(&f.g).apply(&h.m)),
        }
    }

    /// `later ∘ earlier`.
    pub fn compose<R: Ring>(&self, later: &Morphism<R>, earlier: &Morphism<R>) -> Composite<R> {
        Composite {
            morphism: Morphism {
                g: earlier.g.clone(),
                xi: earlier.xi.clone(),
                m: add(&earlier.m, &later.m),
            },
            mismatch: diff(&self.target(earlier).coords(), &later.source().coords()),
        }
    }

    /// Inverse for vertical composition.
    pub fn invert<R: Ring>(&self, f: &Morphism<R>) -> Morphism<R> {
        Morphism {
            g: f.g.clone(),
            xi: self.target(f).xi,
            m: neg(&f.m),
        }
    }

    pub fn inv_object<R: Ring>(&self, x: &Object<R>) -> Object<R> {
        let g_inv = self.rep.group.inverse(&x.g);
        Object {
            xi: neg(&self.rep.f1_0_at(&g_inv).apply(&x.xi)),
            g: g_inv,
        }
    }

    /// `inv(g, ξ, m) = (g⁻¹, −F₁(g⁻¹)ξ, −F₁(g⁻¹)m)`, a morphism from
    /// `inv(g, ξ)` to `inv(g, ξ + dm)`.
    pub fn inv_morphism<R: Ring>(&self, f: &Morphism<R>) -> Morphism<R> {
        let g_inv = self.rep.group.inverse(&f.g);
        Morphism {
            xi: neg(&self.rep.f1_0_at(&g_inv).apply(&f.xi)),
            m: neg(&self.rep.f1_1_at(&g_inv).apply(&f.m)),
            g: g_inv,
        }
    }

    /// `a_{x,y,z}: (x·y)·z → x·(y·z)`.
    pub fn associator<R: Ring>(&self, x: &Object<R>, y: &Object<R>, z: &Object<R>) -> Morphism<R> {
        let group = &self.rep.group;
        let g12 = group.mul(&x.g, &y.g);
        let xi = add(
            &add(&x.xi, &self.rep.f1_0_at(&x.g).apply(&y.xi)),
            &self.rep.f1_0_at(&g12).apply(&z.xi),
        );
        Morphism {
            g: group.mul(&g12, &z.g),
            xi,
            m: self.rep.f2_at(&x.g, &y.g).apply(&z.xi),
        }
    }

    /// `i_x: 1 → x·inv(x)`.
    pub fn unit<R: Ring>(&self, x: &Object<R>) -> Morphism<R> {
        let g_inv = self.rep.group.inverse(&x.g);
        Morphism {
            g: self.rep.group.identity(),
            xi: vec![R::zero(); self.rep.v0()],
            m: neg(&self.rep.f2_at(&x.g, &g_inv).apply(&x.xi)),
        }
    }

    /// Source of `a_{x,y,z}` minus `(x·y)·z`, then target minus `x·(y·z)`.
    pub fn associator_typing_residual<R: Ring>(&self, x: &Object<R>, y: &Object<R>, z: &Object<R>) -> Vec<R> {
        let a = self.associator(x, y, z);
        let left = self.mul_objects(&self.mul_objects(x, y), z);
        let right = self.mul_objects(x, &self.mul_objects(y, z));
        [diff(&a.source().coords(), &left.coords()), diff(&self.target(&a).coords(), &right.coords())].concat()
    }

    /// `a_{w,x,y·z} ∘ a_{w·x,y,z}` minus
    /// `(1_w·a_{x,y,z}) ∘ a_{w,x·y,z} ∘ (a_{w,x,y}·1_z)`, followed by the
    /// composability mismatches of the lower path.
    pub fn pentagon_residual<R: Ring>(&self, w: &Object<R>, x: &Object<R>, y: &Object<R>, z: &Object<R>) -> Vec<R> {
        let top = self.compose(
            &self.associator(w, x, &self.mul_objects(y, z)),
            &self.associator(&self.mul_objects(w, x), y, z),
        );
        let first = self.mul_morphisms(&self.associator(w, x, y), &self.identity(z));
        let middle = self.associator(w, &self.mul_objects(x, y), z);
        let last = self.mul_morphisms(&self.identity(w), &self.associator(x, y, z));
        let lower = self.compose(&middle, &first);
        let bottom = self.compose(&last, &lower.morphism);
        composite_residual(&top, &bottom.morphism, &[&lower.mismatch, &bottom.mismatch])
    }

    /// `e_x: inv(x)·x → 1`, an identity.
    pub fn counit<R: Ring>(&self, x: &Object<R>) -> Morphism<R> {
        self.identity(&self.mul_objects(&self.inv_object(x), x))
    }
}

type Sampled = Vec<(Vec<Scalar>, Vec<Scalar>, Vec<Scalar>)>;

fn sample_tuples(t: &TwoGroup, cfg: &SampleConfig) -> Vec<(Vec<usize>, Sampled)> {
    let r = t.rep();
    let mut s = Sampler::new(cfg.seed);
    (0..cfg.samples)
        .map(|i| {
            let tuple = (0..4).map(|_| (s.element(r.dim()), s.vector(r.v0()), s.vector(r.v1()))).collect();
            (vec![i], tuple)
        })
        .collect()
}

fn morphisms<R: Ring>(tuple: &Sampled) -> Vec<Morphism<R>> {
    tuple
        .iter()
        .map(|(g, xi, m)| Morphism {
            g: lift(g),
            xi: lift(xi),
            m: lift(m),
        })
        .collect()
}

fn composite_residual<R: Ring>(c: &Composite<R>, expected: &Morphism<R>, extra: &[&[R]]) -> Vec<R> {
    let mut out = diff(&c.morphism.coords(), &expected.coords());
    out.extend(c.mismatch.iter().cloned());
    for e in extra {
        out.extend(e.iter().cloned());
    }
    out
}

fn two_group_checks<R: Measured + Send + Sync>(t: &TwoGroup, items: &[(Vec<usize>, Sampled)], tol: f64, cfg: &SampleConfig) -> Report {
    let mut report = Report::new("two-group", t.rep().describe());
    let exec = cfg.exec;
    let run = |name: &str, f: &(dyn Fn(&[Morphism<R>]) -> Vec<R> + Sync)| {
        run_check(name, tol, items.to_vec(), exec, |tuple: &Sampled| f(&morphisms::<R>(tuple)))
    };

    report.push(run("source_target", &|fs| {
        let fh = t.mul_morphisms(&fs[0], &fs[1]);
        let s = t.mul_objects(&fs[0].source(), &fs[1].source());
        let tt = t.mul_objects(&t.target(&fs[0]), &t.target(&fs[1]));
        [diff(&fh.source().coords(), &s.coords()), diff(&t.target(&fh).coords(), &tt.coords())].concat()
    }));

    report.push(run("interchange", &|fs| {
        let (f, h) = (&fs[0], &fs[1]);
        let f2 = Morphism {
            m: fs[2].m.clone(),
            ..t.identity(&t.target(f))
        };
        let h2 = Morphism {
            m: fs[3].m.clone(),
            ..t.identity(&t.target(h))
        };
        let lhs = t.compose(&t.mul_morphisms(&f2, &h2), &t.mul_morphisms(f, h));
        let (vf, vh) = (t.compose(&f2, f), t.compose(&h2, h));
        let rhs = t.mul_morphisms(&vf.morphism, &vh.morphism);
        composite_residual(&lhs, &rhs, &[&vf.mismatch, &vh.mismatch])
    }));

    report.push(run("associator_typed", &|fs| {
        t.associator_typing_residual(&fs[0].source(), &fs[1].source(), &fs[2].source())
    }));

    report.push(run("associator_natural", &|fs| {
        let (f, h, k) = (&fs[0], &fs[1], &fs[2]);
        let a_t = t.associator(&t.target(f), &t.target(h), &t.target(k));
        let a_s = t.associator(&f.source(), &h.source(), &k.source());
        let left = t.compose(&a_t, &t.mul_morphisms(&t.mul_morphisms(f, h), k));
        let right = t.compose(&t.mul_morphisms(f, &t.mul_morphisms(h, k)), &a_s);
        composite_residual(&left, &right.morphism, &[&right.mismatch])
    }));

    report.push(run("pentagon", &|fs| {
        t.pentagon_residual(&fs[0].source(), &fs[1].source(), &fs[2].source(), &fs[3].source())
    }));

    report.push(run("triangle", &|fs| {
        let (x, y) = (fs[0].source(), fs[1].source());
        let one = t.unit_object::<R>();
        let a = t.associator(&x, &one, &y);
        let xy = t.mul_objects(&x, &y);
        let unitors = [
            diff(&t.mul_objects(&x, &one).coords(), &x.coords()),
            diff(&t.mul_objects(&one, &y).coords(), &y.coords()),
        ]
        .concat();
        [diff(&a.coords(), &t.identity(&xy).coords()), unitors].concat()
    }));

    report.push(run("zigzag_first", &|fs| {
        let x = fs[0].source();
        let ix = t.inv_object(&x);
        let e1 = t.mul_morphisms(&t.unit(&x), &t.identity(&x));
        let e2 = t.associator(&x, &ix, &x);
        let e3 = t.mul_morphisms(&t.identity(&x), &t.counit(&x));
        let c12 = t.compose(&e2, &e1);
        let c = t.compose(&e3, &c12.morphism);
        composite_residual(&c, &t.identity(&x), &[&c12.mismatch])
    }));

    report.push(run("zigzag_second", &|fs| {
        let x = fs[0].source();
        let ix = t.inv_object(&x);
        let e1 = t.mul_morphisms(&t.identity(&ix), &t.unit(&x));
        let e2 = t.invert(&t.associator(&ix, &x, &ix));
        let e3 = t.mul_morphisms(&t.counit(&x), &t.identity(&ix));
        let c12 = t.compose(&e2, &e1);
        let c = t.compose(&e3, &c12.morphism);
        composite_residual(&c, &t.identity(&ix), &[&c12.mismatch])
    }));

    report.push(run("unit_typed", &|fs| {
        let x = fs[0].source();
        let i = t.unit(&x);
        let xx = t.mul_objects(&x, &t.inv_object(&x));
        [
            diff(&i.source().coords(), &t.unit_object::<R>().coords()),
            diff(&t.target(&i).coords(), &xx.coords()),
        ]
        .concat()
    }));

    report.push(run("unit_natural", &|fs| {
        let f = &fs[0];
        let left = t.compose(&t.mul_morphisms(f, &t.inv_morphism(f)), &t.unit(&f.source()));
        composite_residual(&left, &t.unit(&t.target(f)), &[])
    }));
    report
}

/// Coherence of the semidirect 2-group on `cfg.samples` seeded tuples:
/// source/target compatibility, interchange, associator typing and
/// naturality, pentagon, triangle, both zig-zags, and unit typing and
/// naturality.
pub fn check_two_group(t: &TwoGroup, cfg: &SampleConfig) -> Report {
    let start = Instant::now();
    let items = sample_tuples(t, cfg);
    let mut report = dispatch(
        cfg,
        || two_group_checks::<Scalar>(t, &items, 0.0, cfg),
        || two_group_checks::<f64>(t, &items, cfg.tolerance, cfg),
    );
    report.mode = cfg.mode;
    report.seed = Some(cfg.seed);
    report.tolerance = cfg.tolerance_for();
    report.set_duration(start.elapsed());
    report
}
