//! Two-term L∞ algebras `L₁ --d--> L₀`.
//!
//! With `ρ(x) = l₂(x, ·)` on `L₁`, the relations checked are, on basis
//! elements `x, y, z, w ∈ L₀` and `m, n ∈ L₁`:
//!
//! - (b) `d(ρ(x)m) = l₂(x, dm)`
//! - (c) `ρ(dm)n + ρ(dn)m = 0`
//! - (d0) `l₂(l₂(x,y),z) − l₂(l₂(x,z),y) + l₂(l₂(y,z),x) + d l₃(x,y,z) = 0`
//! - (d1) `ρ(l₂(x,y))m − [ρ(x),ρ(y)]m + l₃(x,y,dm) = 0`
//! - (e) `l₃(l₂(x,y),z,w) − l₃(l₂(x,z),y,w) + l₃(l₂(x,w),y,z) + l₃(l₂(y,z),x,w)
//!   − l₃(l₂(y,w),x,z) + l₃(l₂(z,w),x,y) + ρ(w)l₃(x,y,z) − ρ(z)l₃(x,y,w)
//!   + ρ(y)l₃(x,z,w) − ρ(x)l₃(y,z,w) = 0`
//!
//! (a) is `l₁ ∘ l₁ = 0`, automatic for two terms. These come from the
//! unshuffle relations with `l₂(m, x) = −ρ(x)m`, `l₂(m, n) = 0`, and `l₃`
//! vanishing on degree-one inputs.

use std::time::Instant;

use crate::alternating::{combinations, AlternatingMap};
use crate::ce;
use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rep::{check_rep, RepUpToHomotopy};
use crate::report::{Check, Exec, Report};
use crate::scalar::{int, Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermLInfinity {
    pub l1_dim: usize,
    pub l0_dim: usize,
    /// `l0_dim × l1_dim`.
    pub d: Matrix,
    /// `L₀ ∧ L₀ → L₀`.
    pub l2_00: AlternatingMap,
    /// `ρ(eᵢ)` on `L₁`, one `l1_dim × l1_dim` matrix per basis element of `L₀`.
    pub l2_01: Vec<Matrix>,
    /// `L₀ ∧ L₀ ∧ L₀ → L₁`.
    pub l3: AlternatingMap,
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = int(1);
    v
}

fn add_into(acc: &mut [Scalar], v: &[Scalar], sign: i64) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            if sign > 0 {
                *a += b.clone();
            } else {
                *a -= b.clone();
            }
        }
    }
}

impl TwoTermLInfinity {
    pub fn new(d: Matrix, l2_00: AlternatingMap, l2_01: Vec<Matrix>, l3: AlternatingMap) -> Result<Self> {
        let (l0, l1) = d.shape();
        if l2_00.arity() != 2 || l2_00.source_dim() != l0 || l2_00.target_dim() != l0 {
            return Err(AlgebraError::dim("l2_00", l0, l2_00.source_dim()));
        }
        if l2_01.len() != l0 {
            return Err(AlgebraError::dim("l2_01 family", l0, l2_01.len()));
        }
        if let Some(m) = l2_01.iter().find(|m| m.shape() != (l1, l1)) {
            return Err(AlgebraError::dim("l2_01 matrix", l1, m.rows()));
        }
        if l3.arity() != 3 || l3.source_dim() != l0 || l3.target_dim() != l1 {
            return Err(AlgebraError::dim("l3", l1, l3.target_dim()));
        }
        Ok(TwoTermLInfinity {
            l1_dim: l1,
            l0_dim: l0,
            d,
            l2_00,
            l2_01,
            l3,
        })
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    /// `l₂` on `L₀`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.l2_00.eval_vectors(&[x, y]).expect("bracket arguments")
    }

    /// `ρ(x)` on `L₁`.
    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.l1_dim, self.l1_dim);
        for (c, a) in x.iter().zip(&self.l2_01) {
            if !c.is_zero() {
                m = &m + &a.scale(c);
            }
        }
        m
    }

    fn e0(&self, i: usize) -> Vec<Scalar> {
        unit(self.l0_dim, i)
    }

    /// Residual of (b) at `(x, m)`.
    pub fn residual_b(&self, x: usize, m: usize) -> Vec<Scalar> {
        let lhs = self.d.apply(&self.l2_01[x].apply(&unit(self.l1_dim, m)));
        let rhs = self.bracket(&self.e0(x), &self.d.column(m));
        lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect()
    }

    /// Residual of (c) at `(m, n)`.
    pub fn residual_c(&self, m: usize, n: usize) -> Vec<Scalar> {
        let a = self.rho(&self.d.column(m)).apply(&unit(self.l1_dim, n));
        let b = self.rho(&self.d.column(n)).apply(&unit(self.l1_dim, m));
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    }

    /// Residual of (d0) at basis `(x, y, z)`.
    pub fn residual_d0(&self, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let b = |i: usize, j: usize| self.l2_00.eval(&[i, j]);
        let mut acc = self.d.apply(&self.l3.eval(&[x, y, z]));
        add_into(&mut acc, &self.bracket(&b(x, y), &self.e0(z)), 1);
        add_into(&mut acc, &self.bracket(&b(x, z), &self.e0(y)), -1);
        add_into(&mut acc, &self.bracket(&b(y, z), &self.e0(x)), 1);
        acc
    }

    /// Residual of (d1) at `(x, y, m)`.
    pub fn residual_d1(&self, x: usize, y: usize, m: usize) -> Vec<Scalar> {
        let em = unit(self.l1_dim, m);
        let lhs = self.rho(&self.l2_00.eval(&[x, y])).apply(&em);
        let comm = self.l2_01[x].commutator(&self.l2_01[y]).apply(&em);
        let dm = self.d.column(m);
        let third = self
            .l3
            .eval_vectors(&[&self.e0(x), &self.e0(y), &dm])
            .expect("l3 arguments");
        let mut acc = lhs;
        add_into(&mut acc, &comm, -1);
        add_into(&mut acc, &third, 1);
        acc
    }

    /// Residual of (e) at basis `(x, y, z, w)`.
    pub fn residual_e(&self, x: usize, y: usize, z: usize, w: usize) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.l1_dim];
        let l3b = |a: usize, b: usize, c: usize, e: usize| -> Vec<Scalar> {
            let br = self.l2_00.eval(&[a, b]);
            self.l3
                .eval_vectors(&[&br, &self.e0(c), &self.e0(e)])
                .expect("l3 arguments")
        };
        add_into(&mut acc, &l3b(x, y, z, w), 1);
        add_into(&mut acc, &l3b(x, z, y, w), -1);
        add_into(&mut acc, &l3b(x, w, y, z), 1);
        add_into(&mut acc, &l3b(y, z, x, w), 1);
        add_into(&mut acc, &l3b(y, w, x, z), -1);
        add_into(&mut acc, &l3b(z, w, x, y), 1);
        let act = |a: usize, b: usize, c: usize, e: usize| self.l2_01[a].apply(&self.l3.eval(&[b, c, e]));
        add_into(&mut acc, &act(w, x, y, z), 1);
        add_into(&mut acc, &act(z, x, y, w), -1);
        add_into(&mut acc, &act(y, x, z, w), 1);
        add_into(&mut acc, &act(x, y, z, w), -1);
        acc
    }
}

pub fn check_linfty(l: &TwoTermLInfinity) -> Report {
    check_linfty_with(l, Exec::SEQUENTIAL)
}

/// Relations (a)–(e) on all basis tuples.
pub fn check_linfty_with(l: &TwoTermLInfinity, exec: Exec) -> Report {
    let start = Instant::now();
    let (n0, n1) = (l.l0_dim, l.l1_dim);
    let mut report = Report::new("linfty", format!("L1 dim {n1}, L0 dim {n0}"));
    report.push(Check::exact("a_differential_squares_to_zero"));

    let mut b = Check::exact("b_d_equivariant");
    for x in 0..n0 {
        for m in 0..n1 {
            b.record(&[x, m], &l.residual_b(x, m));
        }
    }
    report.push(b);

    let mut c = Check::exact("c_degree_one_pair");
    for m in 0..n1 {
        for n in m..n1 {
            c.record(&[m, n], &l.residual_c(m, n));
        }
    }
    report.push(c);

    let triples = combinations(n0, 3);
    let res = exec.map(triples.clone(), |t| l.residual_d0(t[0], t[1], t[2]));
    let mut d0 = Check::exact("d0_jacobiator");
    for (t, r) in triples.iter().zip(res) {
        d0.record(t, &r);
    }
    report.push(d0);

    let mut d1 = Check::exact("d1_mixed_jacobiator");
    for t in combinations(n0, 2) {
        for m in 0..n1 {
            d1.record(&[t[0], t[1], m], &l.residual_d1(t[0], t[1], m));
        }
    }
    report.push(d1);

    let quads = combinations(n0, 4);
    let res = exec.map(quads.clone(), |t| l.residual_e(t[0], t[1], t[2], t[3]));
    let mut e = Check::exact("e_coherence");
    for (t, r) in quads.iter().zip(res) {
        e.record(t, &r);
    }
    report.push(e);
    report.set_duration(start.elapsed());
    report
}

/// `L₀ = g ⊕ V0`, `L₁ = V1`, with
/// `l₂(X+ξ, Y+η) = [X,Y] + μ₀(X)η − μ₀(Y)ξ`, `l₂(X+ξ, f) = μ₁(X)f` and
/// `l₃(X+ξ, Y+η, Z+γ) = −(ν(X,Y)γ + c.p.)`.
pub fn semidirect(r: &RepUpToHomotopy) -> Result<TwoTermLInfinity> {
    let rep_report = check_rep(r);
    if !rep_report.passed() {
        return Err(AlgebraError::InvalidRep(format!(
            "failing identities: {}",
            rep_report.failures().join(", ")
        )));
    }
    Ok(semidirect_unchecked(r))
}

/// [`semidirect`] without validating the input.
pub fn semidirect_unchecked(r: &RepUpToHomotopy) -> TwoTermLInfinity {
    let n = r.g.dim();
    let (v0, v1) = (r.v0(), r.v1());
    let l0 = n + v0;
    let d = Matrix::from_fn(l0, v1, |i, j| {
        if i >= n {
            r.complex.d[(i - n, j)].clone()
        } else {
            Scalar::zero()
        }
    });
    let l2_00 = AlternatingMap::from_fn(2, l0, l0, |t| {
        let (a, b) = (t[0], t[1]);
        let mut v = vec![Scalar::zero(); l0];
        if b < n {
            v[..n].clone_from_slice(&r.g.bracket_basis(a, b));
        } else if a < n {
            for s in 0..v0 {
                v[n + s] = r.mu0[a][(s, b - n)].clone();
            }
        }
        v
    });
    let l2_01 = (0..l0)
        .map(|i| if i < n { r.mu1[i].clone() } else { Matrix::zeros(v1, v1) })
        .collect();
    let l3 = AlternatingMap::from_fn(3, l0, v1, |t| {
        // Only (X, Y, γ) with two algebra slots survives on increasing tuples.
        if t[1] < n && t[2] >= n {
            let nu = r.nu_matrix(t[0], t[1]);
            nu.column(t[2] - n).into_iter().map(|x| -x).collect()
        } else {
            vec![Scalar::zero(); v1]
        }
    });
    TwoTermLInfinity {
        l1_dim: v1,
        l0_dim: l0,
        d,
        l2_00,
        l2_01,
        l3,
    }
}

/// The degree-zero defect of the semidirect product:
/// `l₂(l₂(a,b),c) + c.p. = d(ν(X_a,X_b)γ_c) + c.p.` on basis triples.
pub fn check_semidirect_defect(r: &RepUpToHomotopy) -> Report {
    let l = semidirect_unchecked(r);
    let n = r.g.dim();
    let l0 = l.l0_dim;
    let mut report = Report::new("semidirect_defect", format!("L0 dim {l0}"));
    let mut check = Check::exact("jacobiator_equals_d_nu");
    let split = |i: usize| -> (Vec<Scalar>, Vec<Scalar>) {
        let e = unit(l0, i);
        (e[..n].to_vec(), e[n..].to_vec())
    };
    for t in combinations(l0, 3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut lhs = vec![Scalar::zero(); l0];
        let mut rhs = vec![Scalar::zero(); l0];
        for (p, q, s) in [(a, b, c), (b, c, a), (c, a, b)] {
            let inner = l.l2_00.eval(&[p, q]);
            add_into(&mut lhs, &l.bracket(&inner, &unit(l0, s)), 1);
            let (xp, _) = split(p);
            let (xq, _) = split(q);
            let (_, gs) = split(s);
            let val = r.nu_of(&xp, &xq).expect("nu arguments").apply(&gs);
            let dv = l.d.apply(&val);
            add_into(&mut rhs, &dv, 1);
        }
        let res: Vec<Scalar> = lhs.into_iter().zip(rhs).map(|(x, y)| x - y).collect();
        check.record(&t, &res);
    }
    report.push(check);
    report
}

/// `(k₁, k₂, φ, θ)` classifying a skeletal 2-term L∞ algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeletalQuadruple {
    pub k1: LieAlgebra,
    pub k2_dim: usize,
    pub phi: Vec<Matrix>,
    pub theta: AlternatingMap,
}

impl SkeletalQuadruple {
    /// Checks that `φ` is a morphism and `θ` is closed.
    pub fn validate(&self) -> Result<()> {
        self.k1
            .validate()
            .map_err(|e| AlgebraError::InvalidQuadruple(e.to_string()))?;
        if let Some((i, j)) = ce::action_defects(&self.k1, &self.phi).first() {
            return Err(AlgebraError::InvalidQuadruple(format!(
                "action is not a morphism on ({i},{j})"
            )));
        }
        let dtheta = ce::ce_differential(&self.k1, &self.phi, &self.theta)?;
        if let Some((t, _)) = dtheta.entries().next() {
            return Err(AlgebraError::InvalidQuadruple(format!("theta is not closed at {t:?}")));
        }
        Ok(())
    }

    pub fn to_linfty(&self) -> TwoTermLInfinity {
        let n = self.k1.dim();
        TwoTermLInfinity {
            l1_dim: self.k2_dim,
            l0_dim: n,
            d: Matrix::zeros(n, self.k2_dim),
            l2_00: AlternatingMap::from_fn(2, n, n, |t| self.k1.bracket_basis(t[0], t[1])),
            l2_01: self.phi.clone(),
            l3: self.theta.clone(),
        }
    }
}

/// Reads off the quadruple of a skeletal algebra and validates it.
pub fn extract_quadruple(l: &TwoTermLInfinity) -> Result<SkeletalQuadruple> {
    if !l.is_skeletal() {
        return Err(AlgebraError::NotSkeletal);
    }
    let n = l.l0_dim;
    let tensor = (0..n)
        .map(|i| (0..n).map(|j| l.l2_00.eval(&[i, j])).collect())
        .collect();
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    let k1 = LieAlgebra::from_tensor(labels, tensor)?;
    let quad = SkeletalQuadruple {
        k1,
        k2_dim: l.l1_dim,
        phi: l.l2_01.clone(),
        theta: l.l3.clone(),
    };
    quad.validate()?;
    Ok(quad)
}

/// True iff the class of `θ` vanishes, i.e. `θ = dφ` for some 2-cochain.
pub fn is_strict_class(l: &TwoTermLInfinity) -> Result<bool> {
    let quad = extract_quadruple(l)?;
    Ok(ce::solve_coboundary(&quad.k1, &quad.phi, &quad.theta)?.is_some())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::string_datum;

    #[test]
    fn dgla_from_lie_algebra() {
        let g = catalog::sl2();
        let quad = SkeletalQuadruple {
            k1: g.clone(),
            k2_dim: 3,
            phi: g.adjoint(),
            theta: AlternatingMap::zero(3, 3, 3),
        };
        let l = quad.to_linfty();
        assert!(check_linfty(&l).passed());
        assert!(extract_quadruple(&l).unwrap().theta.is_zero());
        assert!(is_strict_class(&l).unwrap());
    }

    #[test]
    fn semidirect_of_string_datum() {
        let r = string_datum(&catalog::so3());
        let l = semidirect(&r).unwrap();
        assert!(check_linfty(&l).passed());
        // l3(e1, e2, e3*) = −ν(e1,e2)(e3*)
        assert_eq!(l.l3.eval(&[0, 1, 5]), vec![-crate::scalar::q(1, 2)]);
        assert!(check_semidirect_defect(&r).passed());
    }

    #[test]
    fn tampered_l3_detected() {
        let base = semidirect(&string_datum(&catalog::so3())).unwrap();
        let tamper = |t: &[usize]| {
            let mut l = base.clone();
            let v = l.l3.eval(t)[0].clone() + int(1);
            l.l3.set(t, vec![v]).unwrap();
            l
        };
        let l = tamper(&[0, 1, 3]);
        let rep = check_linfty(&l);
        assert_eq!(rep.failures(), vec!["e_coherence"]);
        assert!(matches!(extract_quadruple(&l), Err(AlgebraError::InvalidQuadruple(_))));
        // e¹∧e²∧ξ³ is itself closed, so this perturbation stays valid.
        assert!(check_linfty(&tamper(&[0, 1, 5])).passed());
    }

    #[test]
    fn not_skeletal() {
        let r = crate::quadratic::omni_lie(2);
        let l = semidirect(&r).unwrap();
        assert_eq!(extract_quadruple(&l), Err(AlgebraError::NotSkeletal));
        assert_eq!(is_strict_class(&l), Err(AlgebraError::NotSkeletal));
    }
}
