//! Quadratic Lie algebras, the double `g ⊕ g*`, string Lie 2-algebras and
//! the omni-Lie algebra `gl(n) ⊕ ℝⁿ`.

use crate::alternating::{combinations, AlternatingMap};
use crate::ce::{self, CoboundaryCertificate};
use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::linfty::{semidirect_unchecked, TwoTermLInfinity};
use crate::matrix::Matrix;
use crate::rep::{double_pairing, PairingScale, RepUpToHomotopy, TwoTermComplex};
use crate::scalar::{int, q, Ring, Scalar};

/// `g ⋉ g*` with the coadjoint action; basis `Xᵢ` then `ξᵢ`.
pub fn double_algebra(g: &LieAlgebra) -> LieAlgebra {
    let n = g.dim();
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend(g.labels().iter().map(|l| format!("{l}*")));
    let mut k = LieAlgebra::abelian_on(labels).expect("nonempty");
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                k.set_constant(i, j, m, g.constant(i, j, m).clone());
                // [Xᵢ, ξⱼ] = ad*_{Xᵢ} ξⱼ = −Σₘ c[i][m][j] ξₘ
                let c = -g.constant(i, m, j).clone();
                k.set_constant(i, n + j, n + m, c.clone());
                k.set_constant(n + j, i, n + m, -c);
            }
        }
    }
    k
}

/// Symmetric, nondegenerate and `ad`-invariant.
pub fn validate_pairing(k: &LieAlgebra, p: &Matrix) -> Result<()> {
    let n = k.dim();
    if p.shape() != (n, n) {
        return Err(AlgebraError::InvalidQuadratic(format!(
            "pairing is {}x{}, expected {n}x{n}",
            p.rows(),
            p.cols()
        )));
    }
    if p != &p.transpose() {
        return Err(AlgebraError::InvalidQuadratic("pairing is not symmetric".into()));
    }
    if p.det().is_zero() {
        return Err(AlgebraError::InvalidQuadratic("pairing is degenerate".into()));
    }
    if let Some((x, y, z)) = invariance_defects(k, p).first() {
        return Err(AlgebraError::InvalidQuadratic(format!(
            "pairing is not invariant on ({x},{y},{z})"
        )));
    }
    Ok(())
}

/// Basis triples with `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ ≠ 0`.
pub fn invariance_defects(k: &LieAlgebra, p: &Matrix) -> Vec<(usize, usize, usize)> {
    let n = k.dim();
    let mut bad = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut s = Scalar::zero();
                for m in 0..n {
                    s += k.constant(x, y, m).clone() * p[(m, z)].clone();
                    s += k.constant(x, z, m).clone() * p[(y, m)].clone();
                }
                if !s.is_zero() {
                    bad.push((x, y, z));
                }
            }
        }
    }
    bad
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticLieAlgebra {
    pub algebra: LieAlgebra,
    pub pairing: Matrix,
}

impl QuadraticLieAlgebra {
    pub fn new(algebra: LieAlgebra, pairing: Matrix) -> Result<Self> {
        algebra
            .validate()
            .map_err(|e| AlgebraError::InvalidQuadratic(e.to_string()))?;
        validate_pairing(&algebra, &pairing)?;
        Ok(QuadraticLieAlgebra { algebra, pairing })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let py = self.pairing.apply(y);
        x.iter().zip(py).fold(Scalar::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    /// `⟨[eₐ, e_b], e_c⟩`.
    pub fn cartan_3form(&self) -> AlternatingMap {
        AlternatingMap::from_fn(3, self.dim(), 1, |t| {
            let br = self.algebra.bracket_basis(t[0], t[1]);
            let v = br
                .iter()
                .enumerate()
                .fold(Scalar::zero(), |acc, (m, c)| acc + c.clone() * self.pairing[(m, t[2])].clone());
            vec![v]
        })
    }
}

/// `g ⊕ g*` with the half pairing `½(ξ(Y) + η(X))`.
pub fn double(g: &LieAlgebra) -> QuadraticLieAlgebra {
    QuadraticLieAlgebra {
        algebra: double_algebra(g),
        pairing: double_pairing(g, PairingScale::Half),
    }
}

/// `ℝ --0--> k` with `l₂` the bracket of `k`, zero action on `ℝ`, and
/// `l₃(e₁,e₂,e₃) = ⟨[e₁,e₂],e₃⟩`.
pub fn string_lie2(q: &QuadraticLieAlgebra) -> Result<TwoTermLInfinity> {
    string_lie2_with_sign(q, 1)
}

/// [`string_lie2`] with `l₃` multiplied by `sign` (±1).
pub fn string_lie2_with_sign(q: &QuadraticLieAlgebra, sign: i64) -> Result<TwoTermLInfinity> {
    let q = QuadraticLieAlgebra::new(q.algebra.clone(), q.pairing.clone())?;
    let n = q.dim();
    Ok(TwoTermLInfinity {
        l1_dim: 1,
        l0_dim: n,
        d: Matrix::zeros(n, 1),
        l2_00: AlternatingMap::from_fn(2, n, n, |t| q.algebra.bracket_basis(t[0], t[1])),
        l2_01: vec![Matrix::zeros(1, 1); n],
        l3: q.cartan_3form().scale(&int(sign)),
    })
}

/// `ν̃(X₁+ξ₁, X₂+ξ₂, X₃+ξ₃) = ⟨[X₁,X₂], ξ₃⟩ + c.p.` on `g ⊕ g*`, half
/// pairing.
pub fn nu_tilde(g: &LieAlgebra) -> AlternatingMap {
    let n = g.dim();
    let term = |a: usize, b: usize, c: usize| -> Scalar {
        if a < n && b < n && c >= n {
            q(1, 2) * g.constant(a, b, c - n).clone()
        } else {
            Scalar::zero()
        }
    };
    AlternatingMap::from_fn(3, 2 * n, 1, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        vec![term(a, b, c) + term(b, c, a) + term(c, a, b)]
    })
}

/// For a rep with `d = 0`: `ν̃(X₁+ξ₁, X₂+ξ₂, X₃+ξ₃) = ν(X₁,X₂)ξ₃ + c.p.`
/// on `g ⋉ V0` with values in `V1`.
pub fn nu_tilde_of(r: &RepUpToHomotopy) -> AlternatingMap {
    let n = r.g.dim();
    let (v0, v1) = (r.v0(), r.v1());
    let term = |a: usize, b: usize, c: usize| -> Vec<Scalar> {
        if a < n && b < n && c >= n {
            r.nu_matrix(a, b).column(c - n)
        } else {
            vec![Scalar::zero(); v1]
        }
    };
    AlternatingMap::from_fn(3, n + v0, v1, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut v = term(a, b, c);
        for y in [term(b, c, a), term(c, a, b)] {
            for (s, u) in v.iter_mut().zip(y) {
                *s += u;
            }
        }
        v
    })
}

/// Verdict plus the rank data of the coboundary solve.
#[derive(Clone, Debug, PartialEq)]
pub struct Nonexactness {
    pub not_exact: bool,
    pub certificate: CoboundaryCertificate,
}

/// Whether `ν̃` fails to be a coboundary on `g ⊕ g*` (trivial coefficients).
pub fn check_nonexactness(g: &LieAlgebra) -> Result<Nonexactness> {
    let k = double_algebra(g);
    let target = nu_tilde(g);
    let certificate = ce::solve_coboundary_certified(&k, &ce::trivial_action(&k, 1), &target)?;
    Ok(Nonexactness {
        not_exact: !certificate.is_exact(),
        certificate,
    })
}

/// `gl(n)` acting on `ℝⁿ --Id--> ℝⁿ` by `μ₀(A) = μ₁(A) = ½A`, with
/// `ν(A,B) = ¼[A,B]`.
pub fn omni_lie(n: usize) -> RepUpToHomotopy {
    assert!(n >= 1, "omni-Lie algebra needs n >= 1");
    let g = crate::catalog::gl(n);
    let basis: Vec<Matrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| crate::catalog::elementary(n, i, j)))
        .collect();
    let mu: Vec<Matrix> = basis.iter().map(|a| a.scale(&q(1, 2))).collect();
    let mut nu = AlternatingMap::zero(2, n * n, n * n);
    for t in combinations(n * n, 2) {
        let c = basis[t[0]].commutator(&basis[t[1]]).scale(&q(1, 4));
        nu.set(&t, c.entries().to_vec()).expect("shape");
    }
    RepUpToHomotopy::new(g, TwoTermComplex::identity(n), mu.clone(), mu, nu).expect("omni shapes")
}

/// Semidirect product of [`omni_lie`].
pub fn omni_linfty(n: usize) -> TwoTermLInfinity {
    semidirect_unchecked(&omni_lie(n))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linfty::check_linfty;
    use crate::rep::check_rep;

    #[test]
    fn double_is_quadratic() {
        for name in catalog::STANDARD {
            let g = catalog::by_name(name).unwrap();
            let d = double(&g);
            assert!(QuadraticLieAlgebra::new(d.algebra.clone(), d.pairing.clone()).is_ok(), "{name}");
        }
    }

    #[test]
    fn so3_pairing_value() {
        let d = double(&catalog::so3());
        let mut x = vec![int(0); 6];
        let mut y = vec![int(0); 6];
        x[2] = int(1);
        y[5] = int(1);
        assert_eq!(d.pair(&x, &y), q(1, 2));
    }

    #[test]
    fn nu_tilde_values() {
        let nt = nu_tilde(&catalog::so3());
        assert_eq!(nt.eval(&[0, 1, 5]), vec![q(1, 2)]);
        assert_eq!(nt.eval(&[0, 1, 2]), vec![int(0)]);
        assert_eq!(nt.eval(&[3, 4, 5]), vec![int(0)]);
        assert!(nu_tilde(&catalog::abelian(3)).is_zero());
    }

    #[test]
    fn nu_tilde_is_a_coboundary() {
        // ν̃ = dφ with φ(X+ξ, Y+η) = ½(η(X) − ξ(Y)), for every g.
        for name in ["so3", "sl2", "heis3", "abelian:3"] {
            let g = catalog::by_name(name).unwrap();
            let n = g.dim();
            let cert = check_nonexactness(&g).unwrap();
            assert!(!cert.not_exact, "{name}");
            assert_eq!(cert.certificate.rank, cert.certificate.augmented_rank);
            let mut phi = AlternatingMap::zero(2, 2 * n, 1);
            for i in 0..n {
                phi.set(&[i, n + i], vec![q(1, 2)]).unwrap();
            }
            let k = double_algebra(&g);
            let dphi = ce::ce_differential(&k, &ce::trivial_action(&k, 1), &phi).unwrap();
            assert_eq!(dphi, nu_tilde(&g), "{name}");
        }
    }

    #[test]
    fn omni_two() {
        let r = omni_lie(2);
        assert_eq!(r.mu0[0].apply(&[int(1), int(0)]), vec![q(1, 2), int(0)]);
        assert!(check_rep(&r).passed());
        assert!(check_linfty(&omni_linfty(2)).passed());
        assert!(omni_lie(1).nu.is_zero());
    }
}
