//! The antisymmetrized third mixed derivative of `F̃₂` at the identity,
//! along the curves `t ↦ (exp(tX), tξ)`.

use std::collections::BTreeMap;

use lie2::alternating::{combinations, permutation_sign, permutations};
use lie2::{AlternatingMap, Ring, Scalar};

use crate::cocycle::f2_tilde;
use crate::error::{GroupError, Result};
use crate::jet::Jet;
use crate::rep::GroupRep;
use crate::twogroup::Object;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DiffMode {
    /// Formal jets; exact.
    Jet,
    /// Central differences with the given step.
    CentralDifference { step: f64 },
}

/// Floating values of an alternating 3-cochain on sorted basis triples.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatCochain {
    pub source_dim: usize,
    pub target_dim: usize,
    pub values: BTreeMap<Vec<usize>, Vec<f64>>,
}

impl FloatCochain {
    /// Largest entrywise distance to an exact cochain.
    pub fn max_error(&self, exact: &AlternatingMap) -> f64 {
        self.values
            .iter()
            .flat_map(|(t, v)| {
                let e = exact.eval(t);
                v.iter()
                    .zip(e)
                    .map(|(a, b)| (a - <f64 as Ring>::from_scalar(&b)).abs())
                    .collect::<Vec<_>>()
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Derivative {
    Exact(AlternatingMap),
    Floating(FloatCochain),
}

/// Point `t·u` on the curve of basis vector `u` of `g ⊕ V0`.
fn curve<R: Ring>(r: &GroupRep, u: usize, t: &R) -> Object<R> {
    let n = r.dim();
    let mut g = vec![R::zero(); n];
    let mut xi = vec![R::zero(); r.v0()];
    if u < n {
        g[u] = t.clone();
    } else {
        xi[u - n] = t.clone();
    }
    Object { g, xi }
}

/// `Σ_σ ε(σ) F̃₂(c_{σ1}(t_{σ1}), c_{σ2}(t_{σ2}), c_{σ3}(t_{σ3}))`.
fn antisymmetrized<R: Ring>(r: &GroupRep, basis: &[usize], params: &[R; 3]) -> Vec<R> {
    let mut out = vec![R::zero(); r.v1()];
    for sigma in permutations(3) {
        let obj: Vec<Object<R>> = sigma.iter().map(|&k| curve(r, basis[k], &params[k])).collect();
        let v = f2_tilde(r, &obj[0], &obj[1], &obj[2]);
        let positive = permutation_sign(&sigma) > 0;
        for (o, x) in out.iter_mut().zip(v) {
            *o = if positive { o.clone() + x } else { o.clone() - x };
        }
    }
    out
}

fn require_zero_differential(r: &GroupRep) -> Result<()> {
    if r.complex.d.is_zero() {
        Ok(())
    } else {
        Err(GroupError::InvalidRep("F̃₂ needs d = 0".into()))
    }
}

/// Exact third mixed derivative via jets in `t₁, t₂, t₃`.
pub fn differentiate_jet(r: &GroupRep) -> Result<AlternatingMap> {
    require_zero_differential(r)?;
    let params = [Jet::param(0), Jet::param(1), Jet::param(2)];
    Ok(AlternatingMap::from_fn(3, r.dim() + r.v0(), r.v1(), |t| {
        antisymmetrized(r, t, &params).iter().map(|j| j.mixed().clone()).collect::<Vec<Scalar>>()
    }))
}

/// Third mixed derivative by the central-difference stencil
/// `Σ_{s ∈ {±1}³} s₁s₂s₃ f(s·h) / (8h³)`.
pub fn differentiate_central(r: &GroupRep, step: f64) -> Result<FloatCochain> {
    require_zero_differential(r)?;
    if !(step.is_finite() && step > 0.0) {
        return Err(GroupError::ModeUnsupported(format!("central differences need a positive finite step, got {step}")));
    }
    let dim = r.dim() + r.v0();
    let mut values = BTreeMap::new();
    for t in combinations(dim, 3) {
        let mut acc = vec![0.0; r.v1()];
        for s in 0..8 {
            let sign = |i: usize| if s & (1 << i) == 0 { 1.0 } else { -1.0 };
            let params = [sign(0) * step, sign(1) * step, sign(2) * step];
            let w = sign(0) * sign(1) * sign(2);
            for (a, v) in acc.iter_mut().zip(antisymmetrized(r, &t, &params)) {
                *a += w * v;
            }
        }
        let scale = 8.0 * step * step * step;
        values.insert(t, acc.into_iter().map(|a| a / scale).collect());
    }
    Ok(FloatCochain {
        source_dim: dim,
        target_dim: r.v1(),
        values,
    })
}

pub fn differentiate_3cocycle(r: &GroupRep, mode: DiffMode) -> Result<Derivative> {
    match mode {
        DiffMode::Jet => differentiate_jet(r).map(Derivative::Exact),
        DiffMode::CentralDifference { step } => differentiate_central(r, step).map(Derivative::Floating),
    }
}
