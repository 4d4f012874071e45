//! Integration of the homotopy `ν` of a nilpotent rep to a normalized group
//! 2-cocycle `F̄₂`, solved degree by degree in exponential coordinates.

use std::collections::BTreeMap;

use lie2::scalar::q;
use lie2::{Matrix, Poly, RepUpToHomotopy, Ring, Scalar};

use crate::error::{GroupError, Result};
use crate::model::GroupModel;
use crate::polymat::PolyMatrix;
use crate::rep::{exponentiate, require_valid, GroupRep};

/// Substitutions and conjugation matrices for the cocycle equation in the
/// variables `x, y, z` of three group elements.
struct CocycleEquation {
    n: usize,
    xy: Vec<Poly>,
    yz: Vec<Poly>,
    prod_xy_z: Vec<Poly>,
    x_prod_yz: Vec<Poly>,
    sum_xy_z: Vec<Poly>,
    x_sum_yz: Vec<Poly>,
    left: PolyMatrix,
    right: PolyMatrix,
}

impl CocycleEquation {
    fn new(group: &GroupModel, f1_0: &PolyMatrix, f1_1: &PolyMatrix) -> Self {
        let n = group.dim();
        let m = 3 * n;
        let var = |block: usize| -> Vec<Poly> { (0..n).map(|i| Poly::var(m, block * n + i)).collect() };
        let (x, y, z) = (var(0), var(1), var(2));
        let cat = |a: &[Poly], b: &[Poly]| -> Vec<Poly> { a.iter().chain(b).cloned().collect() };
        let sum = |a: &[Poly], b: &[Poly]| -> Vec<Poly> { a.iter().zip(b).map(|(p, q)| p + q).collect() };
        let neg_x: Vec<Poly> = (0..n).map(|i| -&Poly::var(n, i)).collect();
        CocycleEquation {
            n,
            xy: cat(&x, &y),
            yz: cat(&y, &z),
            prod_xy_z: cat(&group.product_of(&x, &y), &z),
            x_prod_yz: cat(&x, &group.product_of(&y, &z)),
            sum_xy_z: cat(&sum(&x, &y), &z),
            x_sum_yz: cat(&x, &sum(&y, &z)),
            left: f1_1.embed(m, 0),
            right: f1_0.compose(&neg_x).embed(m, 0),
        }
    }

    /// `F₁(x)F̄(y,z)F₁(x)⁻¹ − F̄(xy,z) + F̄(x,yz) − F̄(x,y)`, optionally
    /// truncated at a total degree.
    fn defect(&self, fbar: &PolyMatrix, max_deg: Option<u32>) -> PolyMatrix {
        let sub = |s: &[Poly]| match max_deg {
            Some(d) => fbar.compose_truncated(s, d),
            None => fbar.compose(s),
        };
        let conj = self.left.mul_truncated(&sub(&self.yz), max_deg).mul_truncated(&self.right, max_deg);
        conj.sub(&sub(&self.prod_xy_z)).add(&sub(&self.x_prod_yz)).sub(&sub(&self.xy))
    }

    /// Abelian coboundary `u(y,z) − u(x+y,z) + u(x,y+z) − u(x,y)`.
    fn abelian_coboundary(&self, u: &Poly) -> Poly {
        let a = &u.compose(&self.yz) - &u.compose(&self.sum_xy_z);
        &(&a + &u.compose(&self.x_sum_yz)) - &u.compose(&self.xy)
    }

    /// Index multidegree of a monomial in `x, y, z`: per coordinate `i`, the
    /// total exponent of `xᵢ, yᵢ, zᵢ`.
    fn multidegree(&self, e: &[u32]) -> Vec<u32> {
        (0..self.n).map(|i| e[i] + e[self.n + i] + e[2 * self.n + i]).collect()
    }

    /// Monomials in `x, y` (2n variables) with the given index multidegree
    /// that involve both `x` and `y`.
    fn mixed_monomials(&self, m: &[u32]) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut out: Vec<Vec<u32>> = vec![vec![0; 2 * n]];
        for (i, &mi) in m.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..=mi).map(move |a| {
                        let mut e = e.clone();
                        e[i] = a;
                        e[n + i] = mi - a;
                        e
                    })
                })
                .collect();
        }
        out.retain(|e| e[..n].iter().any(|&a| a > 0) && e[n..].iter().any(|&b| b > 0));
        out
    }

    /// Homogeneous `u` of degree `deg` with `L(u) = target`, one index
    /// multidegree at a time.
    fn solve_degree(&self, target: &Poly, deg: u32) -> Result<Poly> {
        let n2 = 2 * self.n;
        let mut blocks: BTreeMap<Vec<u32>, Vec<(Vec<u32>, Scalar)>> = BTreeMap::new();
        for (e, c) in target.terms() {
            blocks.entry(self.multidegree(e)).or_default().push((e.clone(), c.clone()));
        }
        let mut out = Poly::zero(n2);
        for (m, rhs_terms) in blocks {
            let unknowns = self.mixed_monomials(&m);
            let images: Vec<Poly> = unknowns
                .iter()
                .map(|e| self.abelian_coboundary(&Poly::monomial(n2, e.clone(), <Scalar as Ring>::one())))
                .collect();
            let mut rows: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for e in images.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).chain(rhs_terms.iter().map(|(e, _)| e.clone())) {
                let next = rows.len();
                rows.entry(e).or_insert(next);
            }
            let mut a = Matrix::zeros(rows.len(), unknowns.len());
            for (j, p) in images.iter().enumerate() {
                for (e, c) in p.terms() {
                    a[(rows[e], j)] = c.clone();
                }
            }
            let mut b = vec![<Scalar as Ring>::zero(); rows.len()];
            for (e, c) in &rhs_terms {
                b[rows[e]] = c.clone();
            }
            let sol = a.solve(&b).ok_or(GroupError::NoSolution { degree: deg })?;
            for (e, c) in unknowns.into_iter().zip(sol) {
                if !Ring::is_zero(&c) {
                    out.add_term(e, c);
                }
            }
        }
        Ok(out)
    }
}

/// Lowest degree with a nonzero term, if any.
fn lowest_degree(m: &PolyMatrix) -> Option<u32> {
    m.entries()
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.iter().sum::<u32>()))
        .min()
}

/// Integrates a rep with `d = 0` of a nilpotent algebra whose actions `μ₀`,
/// `μ₁` are nilpotent. `F₁ = exp ∘ μ`, and `F̄₂` is the normalized group
/// 2-cocycle with values in `Hom(V0, V1)` whose bilinear part at the
/// identity is `½ν`; `F₂(g₁,g₂) = F̄₂(g₁,g₂)∘F₁(g₁g₂)`.
///
/// The ansatz has degree at most twice the nilpotency class, and the result
/// is verified symbolically; any remainder is reported as
/// [`GroupError::NoSolution`].
pub fn integrate_nilpotent(name: &str, r: &RepUpToHomotopy) -> Result<GroupRep> {
    if !r.complex.d.is_zero() {
        return Err(GroupError::InvalidRep("integration needs d = 0".into()));
    }
    require_valid(r)?;
    let group = GroupModel::nilpotent(name, &r.g)?;
    let (f1_0, f1_1) = exponentiate(r)?;
    let n = group.dim();
    let (v0, v1) = (r.v0(), r.v1());
    let eq = CocycleEquation::new(&group, &f1_0, &f1_1);

    let half = q(1, 2);
    let mut fbar = PolyMatrix::from_fn(v1, v0, 2 * n, |a, b| {
        let mut p = Poly::zero(2 * n);
        for i in 0..n {
            for j in 0..n {
                let c = r.nu_matrix(i, j)[(a, b)].clone();
                if !Ring::is_zero(&c) {
                    let mut e = vec![0; 2 * n];
                    e[i] = 1;
                    e[n + j] = 1;
                    p.add_term(e, half.clone() * c);
                }
            }
        }
        p
    });

    let bound = (2 * group.class()).max(2) as u32;
    for deg in 3..=bound {
        let defect = eq.defect(&fbar, Some(deg));
        if lowest_degree(&defect).is_some_and(|d| d < deg) {
            return Err(GroupError::NoSolution { degree: deg - 1 });
        }
        let mut next = Vec::with_capacity(v0 * v1);
        for target in defect.entries() {
            next.push(eq.solve_degree(&(-target), deg)?);
        }
        let correction = PolyMatrix::from_fn(v1, v0, 2 * n, |a, b| next[a * v0 + b].clone());
        fbar = fbar.add(&correction);
    }
    if let Some(d) = lowest_degree(&eq.defect(&fbar, None)) {
        return Err(GroupError::NoSolution { degree: d });
    }

    let f2 = fbar.mul(&f1_0.compose(group.product_polys()));
    Ok(GroupRep::new(group, r.complex.clone(), f1_0, f1_1, f2)?.with_fbar(fbar))
}

/// The cocycle defect of `F̄₂` as a polynomial in `x, y, z`; zero exactly
/// when `F̄₂` is a 2-cocycle. `None` for reps without `F̄₂`.
pub fn symbolic_fbar_defect(r: &GroupRep) -> Option<PolyMatrix> {
    let fbar = r.fbar_polys()?;
    let eq = CocycleEquation::new(&r.group, r.f1_0_polys(), r.f1_1_polys());
    Some(eq.defect(fbar, None))
}
