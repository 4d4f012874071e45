//! Two-term representations up to homotopy of a Lie algebra.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alternating::{combinations, AlternatingMap};
use crate::ce::{self, Action};
use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::quadratic;
use crate::report::{Check, Exec, Report};
use crate::scalar::{int, q, Ring, Scalar};

/// `V1 --d--> V0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermComplex {
    pub v1: usize,
    pub v0: usize,
    /// `v0 × v1`.
    pub d: Matrix,
}

impl TwoTermComplex {
    pub fn new(v1: usize, v0: usize, d: Matrix) -> Result<Self> {
        if d.shape() != (v0, v1) {
            return Err(AlgebraError::dim("complex differential", v0 * v1, d.rows() * d.cols()));
        }
        Ok(TwoTermComplex { v1, v0, d })
    }

    pub fn zero_differential(v1: usize, v0: usize) -> Self {
        TwoTermComplex {
            v1,
            v0,
            d: Matrix::zeros(v0, v1),
        }
    }

    pub fn identity(n: usize) -> Self {
        TwoTermComplex {
            v1: n,
            v0: n,
            d: Matrix::identity(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepUpToHomotopy {
    pub g: LieAlgebra,
    pub complex: TwoTermComplex,
    pub mu0: Vec<Matrix>,
    pub mu1: Vec<Matrix>,
    /// Values in `Hom(V0, V1)` flattened row-major: entry `(a, b)` at
    /// `a·v0 + b`.
    pub nu: AlternatingMap,
}

impl RepUpToHomotopy {
    /// Checks shapes only; use [`check_rep`] for the identities.
    pub fn new(
        g: LieAlgebra,
        complex: TwoTermComplex,
        mu0: Vec<Matrix>,
        mu1: Vec<Matrix>,
        nu: AlternatingMap,
    ) -> Result<Self> {
        let n = g.dim();
        let (v0, v1) = (complex.v0, complex.v1);
        if mu0.len() != n {
            return Err(AlgebraError::dim("mu0 family", n, mu0.len()));
        }
        if mu1.len() != n {
            return Err(AlgebraError::dim("mu1 family", n, mu1.len()));
        }
        if let Some(m) = mu0.iter().find(|m| m.shape() != (v0, v0)) {
            return Err(AlgebraError::dim("mu0 matrix", v0, m.rows()));
        }
        if let Some(m) = mu1.iter().find(|m| m.shape() != (v1, v1)) {
            return Err(AlgebraError::dim("mu1 matrix", v1, m.rows()));
        }
        if nu.arity() != 2 || nu.source_dim() != n || nu.target_dim() != v0 * v1 {
            return Err(AlgebraError::dim("nu target", v0 * v1, nu.target_dim()));
        }
        Ok(RepUpToHomotopy {
            g,
            complex,
            mu0,
            mu1,
            nu,
        })
    }

    pub fn v0(&self) -> usize {
        self.complex.v0
    }

    pub fn v1(&self) -> usize {
        self.complex.v1
    }

    /// `ν(eᵢ, eⱼ)` as a `v1 × v0` matrix.
    pub fn nu_matrix(&self, i: usize, j: usize) -> Matrix {
        let flat = self.nu.eval(&[i, j]);
        Matrix::from_fn(self.v1(), self.v0(), |a, b| flat[a * self.v0() + b].clone())
    }

    /// `ν(x, y)` for coordinate vectors.
    pub fn nu_of(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        let flat = self.nu.eval_vectors(&[x, y])?;
        Ok(Matrix::from_fn(self.v1(), self.v0(), |a, b| flat[a * self.v0() + b].clone()))
    }

    fn combine(family: &[Matrix], x: &[Scalar], n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for (c, a) in x.iter().zip(family) {
            if !c.is_zero() {
                m = &m + &a.scale(c);
            }
        }
        m
    }

    pub fn mu0_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.mu0, x, self.v0())
    }

    pub fn mu1_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.mu1, x, self.v1())
    }

    /// `[μ(eᵢ), A] = μ₁(eᵢ)A − Aμ₀(eᵢ)` for `A: V0 → V1`.
    pub fn hom_bracket(&self, i: usize, a: &Matrix) -> Matrix {
        &(&self.mu1[i] * a) - &(a * &self.mu0[i])
    }

    /// Action of `g` on flattened `Hom(V0, V1)`.
    pub fn hom_action(&self) -> Action {
        ce::hom_action(&self.mu0, &self.mu1, self.v0(), self.v1())
    }
}

/// `μ[eᵢ,eⱼ] − [μeᵢ, μeⱼ]` for a family.
fn bracket_defect(g: &LieAlgebra, family: &[Matrix], i: usize, j: usize) -> Matrix {
    ce::morphism_residual(g, family, i, j)
}

pub fn check_rep(r: &RepUpToHomotopy) -> Report {
    check_rep_with(r, Exec::SEQUENTIAL)
}

/// Residuals of the four defining identities on all basis tuples.
pub fn check_rep_with(r: &RepUpToHomotopy, exec: Exec) -> Report {
    let start = Instant::now();
    let n = r.g.dim();
    let d = &r.complex.d;
    let mut report = Report::new("rep", format!("g dim {n}, V1 dim {}, V0 dim {}", r.v1(), r.v0()));

    let mut eq4 = Check::exact("chain_map");
    for i in 0..n {
        let res = &(d * &r.mu1[i]) - &(&r.mu0[i] * d);
        eq4.record(&[i], res.entries());
    }
    report.push(eq4);

    let pairs = combinations(n, 2);
    let results = exec.map(pairs.clone(), |t| {
        let (i, j) = (t[0], t[1]);
        let nu = r.nu_matrix(i, j);
        let e5 = &bracket_defect(&r.g, &r.mu0, i, j) - &(d * &nu);
        let e6 = &bracket_defect(&r.g, &r.mu1, i, j) - &(&nu * d);
        (e5, e6)
    });
    let mut eq5 = Check::exact("mu0_bracket_homotopy");
    let mut eq6 = Check::exact("mu1_bracket_homotopy");
    for (t, (e5, e6)) in pairs.iter().zip(results) {
        eq5.record(t, e5.entries());
        eq6.record(t, e6.entries());
    }
    report.push(eq5);
    report.push(eq6);

    let triples = combinations(n, 3);
    let results = exec.map(triples.clone(), |t| nu_cocycle_residual(r, t[0], t[1], t[2]));
    let mut eq7 = Check::exact("nu_cocycle");
    for (t, res) in triples.iter().zip(results) {
        eq7.record(t, res.entries());
    }
    report.push(eq7);
    report.set_duration(start.elapsed());
    report
}

/// `[μ(X₁), ν(X₂,X₃)] + c.p. − (ν([X₁,X₂],X₃) + c.p.)` on basis elements.
pub fn nu_cocycle_residual(r: &RepUpToHomotopy, i: usize, j: usize, k: usize) -> Matrix {
    let mut res = Matrix::zeros(r.v1(), r.v0());
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        res = &res + &r.hom_bracket(a, &r.nu_matrix(b, c));
        for (m, coef) in r.g.bracket_basis(a, b).iter().enumerate() {
            if !coef.is_zero() {
                res = &res - &r.nu_matrix(m, c).scale(coef);
            }
        }
    }
    res
}

/// Building blocks for strict actions of a Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum ActionKind {
    Trivial(usize),
    Adjoint,
    Coadjoint,
    Sum(Vec<ActionKind>),
}

impl ActionKind {
    pub fn dim(&self, g: &LieAlgebra) -> usize {
        match self {
            ActionKind::Trivial(k) => *k,
            ActionKind::Adjoint | ActionKind::Coadjoint => g.dim(),
            ActionKind::Sum(parts) => parts.iter().map(|p| p.dim(g)).sum(),
        }
    }

    pub fn matrices(&self, g: &LieAlgebra) -> Action {
        match self {
            ActionKind::Trivial(k) => ce::trivial_action(g, *k),
            ActionKind::Adjoint => g.adjoint(),
            ActionKind::Coadjoint => g.coadjoint(),
            ActionKind::Sum(parts) => {
                let each: Vec<Action> = parts.iter().map(|p| p.matrices(g)).collect();
                (0..g.dim())
                    .map(|i| {
                        let blocks: Vec<&Matrix> = each.iter().map(|a| &a[i]).collect();
                        Matrix::block_diag(&blocks)
                    })
                    .collect()
            }
        }
    }
}

/// Random rep with `d = 0`: `ν` is a seeded integer combination (weights in
/// `−2..=2`) of a basis of 2-cocycles for the `Hom(V0,V1)` action.
pub fn random_rep(g: &LieAlgebra, mu0: &ActionKind, mu1: &ActionKind, seed: u64) -> Result<RepUpToHomotopy> {
    let m0 = mu0.matrices(g);
    let m1 = mu1.matrices(g);
    let (v0, v1) = (mu0.dim(g), mu1.dim(g));
    let act = ce::hom_action(&m0, &m1, v0, v1);
    let dmat = ce::differential_matrix(g, &act, 2, v0 * v1)?;
    let kernel = dmat.nullspace();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![Scalar::zero(); AlternatingMap::space_dim(2, g.dim(), v0 * v1)];
    for k in &kernel {
        let w = int(rng.gen_range(-2..=2));
        if w.is_zero() {
            continue;
        }
        for (c, x) in coords.iter_mut().zip(k) {
            *c += w.clone() * x.clone();
        }
    }
    let nu = AlternatingMap::from_coords(2, g.dim(), v0 * v1, &coords)?;
    RepUpToHomotopy::new(g.clone(), TwoTermComplex::zero_differential(v1, v0), m0, m1, nu)
}

/// A seeded random `(g, μ₀, μ₁)` with `dim g ≤ 3` and `dim Vᵢ ≤ 3`, fed to
/// [`random_rep`].
pub fn sample_rep(seed: u64) -> Result<RepUpToHomotopy> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0f_2e9);
    let names = ["abelian:1", "abelian:2", "abelian:3", "so3", "sl2", "heis3"];
    let g = crate::catalog::by_name(names[rng.gen_range(0..names.len())])?;
    let pick = |rng: &mut ChaCha8Rng| -> ActionKind {
        let small = 3 - g.dim().min(3);
        match rng.gen_range(0..4) {
            0 => ActionKind::Adjoint,
            1 => ActionKind::Coadjoint,
            2 if small > 0 => ActionKind::Sum(vec![ActionKind::Trivial(1), ActionKind::Adjoint])
                .clamp_to(&g, 3),
            _ => ActionKind::Trivial(rng.gen_range(1..=3)),
        }
    };
    let mu0 = pick(&mut rng);
    let mu1 = pick(&mut rng);
    random_rep(&g, &mu0, &mu1, rng.gen())
}

impl ActionKind {
    /// Falls back to a trivial action when the module would exceed `max`.
    fn clamp_to(self, g: &LieAlgebra, max: usize) -> ActionKind {
        if self.dim(g) <= max {
            self
        } else {
            ActionKind::Trivial(max)
        }
    }
}

/// Scale of the canonical pairing on `g ⊕ g*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingScale {
    /// `⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X))`.
    Half,
    /// `⟨X+ξ, Y+η⟩ = ξ(Y) + η(X)`.
    Unit,
}

/// Canonical pairing on `g ⊕ g*` (basis `Xᵢ` then `ξᵢ`).
pub fn double_pairing(g: &LieAlgebra, scale: PairingScale) -> Matrix {
    let n = g.dim();
    let s = match scale {
        PairingScale::Half => q(1, 2),
        PairingScale::Unit => int(1),
    };
    Matrix::from_fn(2 * n, 2 * n, |i, j| if i + n == j || j + n == i { s.clone() } else { Scalar::zero() })
}

/// The rep `ℝ --0--> g*` with `μ₀ = ad*`, `μ₁ = 0`, and
/// `ν(X,Y)(ξ) = ⟨[X,Y], ξ⟩` for a pairing on `g ⊕ g*`.
pub fn rep_from_quadratic(g: &LieAlgebra, pairing: &Matrix) -> Result<RepUpToHomotopy> {
    let n = g.dim();
    let dbl = quadratic::double_algebra(g);
    quadratic::validate_pairing(&dbl, pairing).map_err(|e| match e {
        AlgebraError::InvalidQuadratic(s) => AlgebraError::InvalidPairing(s),
        other => other,
    })?;
    let mut nu = AlternatingMap::zero(2, n, n);
    for t in combinations(n, 2) {
        let br = g.bracket_basis(t[0], t[1]);
        let val: Vec<Scalar> = (0..n)
            .map(|k| {
                br.iter()
                    .enumerate()
                    .fold(Scalar::zero(), |acc, (m, c)| acc + c.clone() * pairing[(m, n + k)].clone())
            })
            .collect();
        nu.set(&t, val)?;
    }
    RepUpToHomotopy::new(
        g.clone(),
        TwoTermComplex::zero_differential(1, n),
        g.coadjoint(),
        ce::trivial_action(g, 1),
        nu,
    )
}

/// [`rep_from_quadratic`] with the half pairing.
pub fn string_datum(g: &LieAlgebra) -> RepUpToHomotopy {
    rep_from_quadratic(g, &double_pairing(g, PairingScale::Half)).expect("canonical pairing is valid")
}
