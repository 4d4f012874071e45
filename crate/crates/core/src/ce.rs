//! Chevalley–Eilenberg cochains with values in a representation.

use crate::alternating::{combinations, AlternatingMap};
use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{int, Ring, Scalar};

/// A representation given by one matrix per basis element of `g`.
pub type Action = Vec<Matrix>;

pub fn trivial_action(g: &LieAlgebra, dim: usize) -> Action {
    vec![Matrix::zeros(dim, dim); g.dim()]
}

fn check_action_shape(g: &LieAlgebra, action: &[Matrix], target: usize) -> Result<()> {
    if action.len() != g.dim() {
        return Err(AlgebraError::dim("action", g.dim(), action.len()));
    }
    for a in action {
        if a.shape() != (target, target) {
            return Err(AlgebraError::dim("action matrix", target, a.rows().max(a.cols())));
        }
    }
    Ok(())
}

/// Basis pairs `(i, j)`, `i < j`, where `ρ[eᵢ,eⱼ] ≠ [ρeᵢ, ρeⱼ]`.
pub fn action_defects(g: &LieAlgebra, action: &[Matrix]) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            if !morphism_residual(g, action, i, j).is_zero() {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// `ρ[eᵢ,eⱼ] − [ρeᵢ, ρeⱼ]`.
pub fn morphism_residual(g: &LieAlgebra, action: &[Matrix], i: usize, j: usize) -> Matrix {
    let n = action[i].rows();
    let mut lhs = Matrix::zeros(n, n);
    for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
        if !c.is_zero() {
            lhs = &lhs + &action[k].scale(c);
        }
    }
    &lhs - &action[i].commutator(&action[j])
}

pub fn is_morphism(g: &LieAlgebra, action: &[Matrix]) -> bool {
    action_defects(g, action).is_empty()
}

/// `(dφ)(x₀,…,x_p) = Σᵢ (−1)ⁱ ρ(xᵢ) φ(…x̂ᵢ…) + Σ_{i<j} (−1)^{i+j} φ([xᵢ,xⱼ], …x̂ᵢ…x̂ⱼ…)`.
pub fn ce_differential(g: &LieAlgebra, action: &[Matrix], phi: &AlternatingMap) -> Result<AlternatingMap> {
    let n = g.dim();
    let m = phi.target_dim();
    if phi.source_dim() != n {
        return Err(AlgebraError::dim("cochain source", n, phi.source_dim()));
    }
    check_action_shape(g, action, m)?;
    let p = phi.arity();
    let mut out = AlternatingMap::zero(p + 1, n, m);
    for t in combinations(n, p + 1) {
        let mut val = vec![Scalar::zero(); m];
        for i in 0..=p {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(s, _)| s != i).map(|(_, &x)| x).collect();
            let inner = phi.eval(&rest);
            if inner.iter().all(Ring::is_zero) {
                continue;
            }
            let acted = action[t[i]].apply(&inner);
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            for (v, a) in val.iter_mut().zip(acted) {
                *v += sign.clone() * a;
            }
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let br = g.bracket_basis(t[i], t[j]);
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != i && s != j)
                    .map(|(_, &x)| x)
                    .collect();
                let sign = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
                for (k, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut tuple = Vec::with_capacity(p);
                    tuple.push(k);
                    tuple.extend(&rest);
                    let inner = phi.eval(&tuple);
                    let w = sign.clone() * c.clone();
                    for (v, a) in val.iter_mut().zip(inner) {
                        *v += w.clone() * a;
                    }
                }
            }
        }
        out.set(&t, val)?;
    }
    Ok(out)
}

/// Matrix of `d` from `p`-cochains to `(p+1)`-cochains in the coordinates of
/// [`AlternatingMap::to_coords`].
pub fn differential_matrix(g: &LieAlgebra, action: &[Matrix], p: usize, target: usize) -> Result<Matrix> {
    let n = g.dim();
    let src = AlternatingMap::space_dim(p, n, target);
    let dst = AlternatingMap::space_dim(p + 1, n, target);
    let mut m = Matrix::zeros(dst, src);
    let mut e = vec![Scalar::zero(); src];
    for col in 0..src {
        e[col] = int(1);
        let phi = AlternatingMap::from_coords(p, n, target, &e)?;
        e[col] = Scalar::zero();
        let image = ce_differential(g, action, &phi)?.to_coords();
        for (row, v) in image.into_iter().enumerate() {
            m[(row, col)] = v;
        }
    }
    Ok(m)
}

/// Outcome of a coboundary solve, with the rank data behind the verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct CoboundaryCertificate {
    /// `Some(φ)` with `dφ = target` when the target is exact.
    pub primitive: Option<AlternatingMap>,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    /// Rank of `[D | target]`; exceeds `rank` exactly when no primitive exists.
    pub augmented_rank: usize,
}

impl CoboundaryCertificate {
    pub fn is_exact(&self) -> bool {
        self.primitive.is_some()
    }
}

/// Solves `dφ = target` exactly, free variables set to zero.
///
/// Fails with [`AlgebraError::NotACocycle`] if `d(target) ≠ 0`.
pub fn solve_coboundary_certified(
    g: &LieAlgebra,
    action: &[Matrix],
    target: &AlternatingMap,
) -> Result<CoboundaryCertificate> {
    let p = target.arity();
    if p == 0 {
        return Err(AlgebraError::Parse("a 0-cochain has no primitive".into()));
    }
    if !ce_differential(g, action, target)?.is_zero() {
        return Err(AlgebraError::NotACocycle);
    }
    let m = target.target_dim();
    let d = differential_matrix(g, action, p - 1, m)?;
    let b = target.to_coords();
    let rank = d.rank();
    let aug = Matrix::from_fn(d.rows(), d.cols() + 1, |i, j| {
        if j < d.cols() {
            d[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let augmented_rank = aug.rank();
    let primitive = match d.solve(&b) {
        Some(x) => Some(AlternatingMap::from_coords(p - 1, g.dim(), m, &x)?),
        None => None,
    };
    Ok(CoboundaryCertificate {
        primitive,
        unknowns: d.cols(),
        equations: d.rows(),
        rank,
        augmented_rank,
    })
}

pub fn solve_coboundary(
    g: &LieAlgebra,
    action: &[Matrix],
    target: &AlternatingMap,
) -> Result<Option<AlternatingMap>> {
    Ok(solve_coboundary_certified(g, action, target)?.primitive)
}

/// Action of `g` on `Hom(V0, V1)` flattened row-major (`A[a][b]` at
/// `a·v0 + b`): `A ↦ μ₁(X)A − Aμ₀(X)`.
pub fn hom_action(mu0: &[Matrix], mu1: &[Matrix], v0: usize, v1: usize) -> Action {
    mu0.iter()
        .zip(mu1)
        .map(|(m0, m1)| {
            let n = v0 * v1;
            let mut out = Matrix::zeros(n, n);
            for a in 0..v1 {
                for b in 0..v0 {
                    let col = a * v0 + b;
                    // image of the unit matrix E_ab
                    for r in 0..v1 {
                        let c = &m1[(r, a)];
                        if !c.is_zero() {
                            let row = r * v0 + b;
                            out[(row, col)] += c.clone();
                        }
                    }
                    for s in 0..v0 {
                        let c = &m0[(b, s)];
                        if !c.is_zero() {
                            let row = a * v0 + s;
                            out[(row, col)] -= c.clone();
                        }
                    }
                }
            }
            out
        })
        .collect()
}
