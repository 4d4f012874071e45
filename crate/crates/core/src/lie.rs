//! Finite-dimensional Lie algebras given by structure constants.

use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::report::{Check, Report};
use crate::scalar::{Ring, Scalar};

/// `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ`, stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    /// Raw constructor: checks shapes only. Use [`validate`](Self::validate)
    /// for the algebraic invariants.
    pub fn from_tensor(labels: Vec<String>, c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::InvalidLieAlgebra("dimension must be positive".into()));
        }
        if c.len() != dim {
            return Err(AlgebraError::dim("structure constants", dim, c.len()));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in c {
            if row.len() != dim {
                return Err(AlgebraError::dim("structure constants", dim, row.len()));
            }
            for v in row {
                if v.len() != dim {
                    return Err(AlgebraError::dim("structure constants", dim, v.len()));
                }
                flat.extend(v);
            }
        }
        Ok(LieAlgebra { dim, labels, c: flat })
    }

    /// Zero bracket on `labels`.
    pub fn abelian_on(labels: Vec<String>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::InvalidLieAlgebra("dimension must be positive".into()));
        }
        Ok(LieAlgebra {
            dim,
            labels,
            c: vec![Scalar::zero(); dim * dim * dim],
        })
    }

    /// Builds from brackets `[eᵢ,eⱼ] = Σ coeffs` for listed pairs; the
    /// antisymmetric partner `[eⱼ,eᵢ]` is filled in.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<Self> {
        let mut g = Self::abelian_on(labels)?;
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            for idx in [i, j] {
                if idx >= g.dim {
                    return Err(AlgebraError::dim("bracket index", g.dim, idx + 1));
                }
            }
            for (k, v) in coeffs {
                if *k >= g.dim {
                    return Err(AlgebraError::dim("bracket index", g.dim, k + 1));
                }
                g.set_constant(i, j, *k, v.clone());
                if i != j {
                    g.set_constant(j, i, *k, -v.clone());
                }
            }
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Overwrites a single entry, with no antisymmetric partner.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let d = self.dim;
        self.c[(i * d + j) * d + k] = v;
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// `[eᵢ, eⱼ]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim {
            return Err(AlgebraError::dim("bracket argument", self.dim, x.len()));
        }
        if y.len() != self.dim {
            return Err(AlgebraError::dim("bracket argument", self.dim, y.len()));
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += w.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entries `(i, j, k)` where `c[i][j][k] ≠ −c[j][i][k]`, with `i ≤ j`.
    pub fn check_antisymmetry(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in 0..self.dim {
                    let s = self.constant(i, j, k).clone() + self.constant(j, i, k).clone();
                    if !s.is_zero() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Jacobiator component `l` on `(i, j, k)`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        let mut s = Scalar::zero();
        for m in 0..self.dim {
            s += self.constant(i, j, m).clone() * self.constant(m, k, l).clone();
            s += self.constant(j, k, m).clone() * self.constant(m, i, l).clone();
            s += self.constant(k, i, m).clone() * self.constant(m, j, l).clone();
        }
        s
    }

    /// Index tuples `(i, j, k, l)` with `i < j < k` on which the Jacobiator
    /// has a nonzero `l`-component. Assumes antisymmetry.
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    for l in 0..self.dim {
                        if !self.jacobiator(i, j, k, l).is_zero() {
                            bad.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        bad
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(&(i, j, k)) = self.check_antisymmetry().first() {
            return Err(AlgebraError::InvalidLieAlgebra(format!(
                "antisymmetry fails at c[{i}][{j}][{k}]"
            )));
        }
        if let Some(&(i, j, k, l)) = self.check_jacobi().first() {
            return Err(AlgebraError::InvalidLieAlgebra(format!(
                "Jacobi fails on ({i},{j},{k}) component {l}"
            )));
        }
        Ok(())
    }

    /// `ad(eᵢ)` as a matrix: column `j` is `[eᵢ, eⱼ]`.
    pub fn ad(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// `ad(x)` for a coordinate vector.
    pub fn ad_vector(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.ad(i).scale(xi);
            }
        }
        m
    }

    pub fn adjoint(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.ad(i)).collect()
    }

    /// `ad*(eᵢ) = −ad(eᵢ)ᵀ` in the dual basis.
    pub fn coadjoint(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| -&self.ad(i).transpose()).collect()
    }

    /// `K(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> Matrix {
        let ads = self.adjoint();
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let p = &ads[i] * &ads[j];
            (0..self.dim).fold(Scalar::zero(), |acc, k| acc + p[(k, k)].clone())
        })
    }

    /// Cartan's criterion.
    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().det().is_zero()
    }

    /// Dimensions of the lower central series `g ⊇ [g,g] ⊇ …`, stopping
    /// once it stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        // Current term spanned by the columns of `span`.
        let mut span = Matrix::<Scalar>::identity(self.dim);
        let mut dims = vec![self.dim];
        loop {
            let mut cols = Vec::new();
            for i in 0..self.dim {
                let ad = self.ad(i);
                for j in 0..span.cols() {
                    cols.push(ad.apply(&span.column(j)));
                }
            }
            let next = basis_of_span(self.dim, cols);
            let d = next.cols();
            if d == *dims.last().unwrap() {
                return dims;
            }
            dims.push(d);
            if d == 0 {
                return dims;
            }
            span = next;
        }
    }

    /// Smallest `c` with `g⁽ᶜ⁺¹⁾ = 0`, or `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let dims = self.lower_central_series();
        (*dims.last().unwrap() == 0).then(|| dims.len() - 1).map(|c| c.max(1))
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    /// Direct sum, with `other`'s basis following `self`'s.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut g = LieAlgebra {
            dim: n,
            labels,
            c: vec![Scalar::zero(); n * n * n],
        };
        for (src, off) in [(self, 0), (other, self.dim)] {
            for i in 0..src.dim {
                for j in 0..src.dim {
                    for k in 0..src.dim {
                        g.set_constant(i + off, j + off, k + off, src.constant(i, j, k).clone());
                    }
                }
            }
        }
        g
    }

    /// Lie algebra spanned by linearly independent matrices closed under the
    /// commutator.
    pub fn from_matrix_basis(labels: Vec<String>, basis: &[Matrix]) -> Result<Self> {
        if labels.len() != basis.len() {
            return Err(AlgebraError::dim("matrix basis labels", basis.len(), labels.len()));
        }
        let flat: Vec<Vec<Scalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let len = flat.first().map_or(0, Vec::len);
        let coords = Matrix::from_fn(len, basis.len(), |r, c| flat[c][r].clone());
        if coords.rank() != basis.len() {
            return Err(AlgebraError::InvalidLieAlgebra("matrix basis is not independent".into()));
        }
        let mut g = Self::abelian_on(labels)?;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let comm = basis[i].commutator(&basis[j]);
                let x = coords.solve(comm.entries()).ok_or_else(|| {
                    AlgebraError::InvalidLieAlgebra("matrix span is not closed under [·,·]".into())
                })?;
                for (k, v) in x.into_iter().enumerate() {
                    g.set_constant(i, j, k, v);
                }
            }
        }
        Ok(g)
    }
}

/// Column basis of the span of `vectors` in `ℚⁿ`.
fn basis_of_span(n: usize, vectors: Vec<Vec<Scalar>>) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zeros(n, 0);
    }
    let m = Matrix::from_fn(vectors.len(), n, |i, j| vectors[i][j].clone());
    let (r, pivots) = crate::matrix::rref(&m);
    Matrix::from_fn(n, pivots.len(), |i, j| r[(j, i)].clone())
}


/// Antisymmetry (tuples `(i, j, k)`, `i ≤ j`) and Jacobi (tuples
/// `(i, j, k, l)`, `i < j < k`) as a report.
pub fn check_lie_algebra(g: &LieAlgebra, instance: &str) -> Report {
    let mut report = Report::new("jacobi", instance);
    let n = g.dim();
    let mut anti = Check::exact("antisymmetry");
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let s = g.constant(i, j, k).clone() + g.constant(j, i, k).clone();
                anti.record_scalar(&[i, j, k], &s);
            }
        }
    }
    report.push(anti);
    let mut jac = Check::exact("jacobi");
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in 0..n {
                    jac.record_scalar(&[i, j, k, l], &g.jacobiator(i, j, k, l));
                }
            }
        }
    }
    report.push(jac);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::int;

    #[test]
    fn so3_bracket() {
        let g = catalog::so3();
        let e1 = [int(1), int(0), int(0)];
        let e2 = [int(0), int(1), int(0)];
        assert_eq!(g.bracket(&e1, &e2).unwrap(), vec![int(0), int(0), int(1)]);
        assert_eq!(g.bracket(&e1, &e1).unwrap(), vec![int(0); 3]);
        assert!(g.bracket(&e1, &[int(1)]).is_err());
    }

    #[test]
    fn killing_forms() {
        assert_eq!(catalog::so3().killing_form(), Matrix::identity(3).scale(&int(-2)));
        let k = catalog::sl2().killing_form();
        assert_eq!(k[(0, 0)], int(8));
        assert_eq!(k[(1, 2)], int(4));
        assert_eq!(k[(2, 1)], int(4));
        assert_eq!(k[(0, 1)], int(0));
        assert_eq!(k[(1, 1)], int(0));
        assert!(catalog::heis3().killing_form().is_zero());
    }

    #[test]
    fn semisimplicity() {
        assert!(catalog::so3().is_semisimple());
        assert!(catalog::sl2().is_semisimple());
        assert!(!catalog::abelian(2).is_semisimple());
        assert!(!catalog::heis3().is_semisimple());
        assert!(!catalog::gl(2).is_semisimple());
    }

    #[test]
    fn nilpotency() {
        assert_eq!(catalog::heis3().nilpotency_class(), Some(2));
        assert_eq!(catalog::abelian(3).nilpotency_class(), Some(1));
        assert_eq!(catalog::so3().nilpotency_class(), None);
        assert_eq!(catalog::filiform4().nilpotency_class(), Some(3));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let g = LieAlgebra::from_brackets(
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[(0, 1, vec![(2, int(1))]), (1, 2, vec![(1, int(1))])],
        )
        .unwrap();
        assert!(g.check_antisymmetry().is_empty());
        assert!(!g.check_jacobi().is_empty());
    }

    #[test]
    fn matrix_basis_reproduces_gl2() {
        assert_eq!(catalog::gl(2).dim(), 4);
        assert!(catalog::gl(2).validate().is_ok());
        assert!(catalog::gl(3).validate().is_ok());
    }
}
