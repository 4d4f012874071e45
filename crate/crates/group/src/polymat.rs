//! Matrices whose entries are polynomials in a shared set of variables.

use lie2::scalar::factorial;
use lie2::{Matrix, Poly, Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    n_vars: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, n_vars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            n_vars,
            entries: vec![Poly::zero(n_vars); rows * cols],
        }
    }

    pub fn identity(n: usize, n_vars: usize) -> Self {
        Self::from_fn(n, n, n_vars, |i, j| if i == j { Poly::one(n_vars) } else { Poly::zero(n_vars) })
    }

    pub fn from_fn(rows: usize, cols: usize, n_vars: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.n_vars(), n_vars, "entry variable count");
                entries.push(p);
            }
        }
        PolyMatrix {
            rows,
            cols,
            n_vars,
            entries,
        }
    }

    /// Constant matrix.
    pub fn constant(m: &Matrix, n_vars: usize) -> Self {
        Self::from_fn(m.rows(), m.cols(), n_vars, |i, j| Poly::constant(n_vars, m[(i, j)].clone()))
    }

    /// `Σᵢ x_{offset+i} · family[i]`.
    pub fn linear_combination(family: &[Matrix], rows: usize, n_vars: usize, offset: usize) -> Self {
        let mut out = Self::zeros(rows, rows, n_vars);
        for (i, m) in family.iter().enumerate() {
            let x = Poly::var(n_vars, offset + i);
            for (e, c) in out.entries.iter_mut().zip(m.entries()) {
                if !Ring::is_zero(c) {
                    *e = &*e + &x.scale(c);
                }
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().map(Poly::degree).max().unwrap_or(0)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        let entries: Vec<Poly> = self.entries.iter().map(f).collect();
        let n_vars = entries.first().map_or(self.n_vars, Poly::n_vars);
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            n_vars,
            entries,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|p| p.scale(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            n_vars: self.n_vars,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    /// Product dropping terms above `max_deg` when given.
    pub fn mul_truncated(&self, other: &Self, max_deg: Option<u32>) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shapes");
        Self::from_fn(self.rows, other.cols, self.n_vars, |i, j| {
            let mut acc = Poly::zero(self.n_vars);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let t = a * b;
                acc = acc + max_deg.map_or(t.clone(), |d| t.truncate(d));
            }
            acc
        })
    }

    pub fn compose(&self, subs: &[Poly]) -> Self {
        self.map(|p| p.compose(subs))
    }

    pub fn compose_truncated(&self, subs: &[Poly], max_deg: u32) -> Self {
        self.map(|p| p.compose_truncated(subs, max_deg))
    }

    pub fn truncate(&self, max_deg: u32) -> Self {
        self.map(|p| p.truncate(max_deg))
    }

    pub fn homogeneous(&self, deg: u32) -> Self {
        self.map(|p| p.homogeneous(deg))
    }

    pub fn embed(&self, n_vars: usize, offset: usize) -> Self {
        self.map(|p| p.embed(n_vars, offset))
    }

    pub fn eval<R: Ring>(&self, point: &[R]) -> Matrix<R> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(point))
    }

    /// `exp(M) = Σ Mᵏ/k!` when `M` is nilpotent as a matrix over the
    /// polynomial ring; `None` otherwise.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "exponential of a square matrix");
        let mut out = Self::identity(self.rows, self.n_vars);
        let mut power = Self::identity(self.rows, self.n_vars);
        for k in 1..=self.rows {
            power = power.mul(self);
            if power.is_zero() {
                return Some(out);
            }
            out = out.add(&power.scale(&(<Scalar as Ring>::one() / factorial(k))));
        }
        power.mul(self).is_zero().then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie2::scalar::{int, q};

    #[test]
    fn exponential_of_strictly_upper_triangular() {
        // M = [[0, x, 0], [0, 0, x], [0, 0, 0]]
        let n = 1;
        let x = Poly::var(n, 0);
        let m = PolyMatrix::from_fn(3, 3, n, |i, j| if j == i + 1 { x.clone() } else { Poly::zero(n) });
        let e = m.exp_nilpotent().unwrap();
        assert_eq!(e.get(0, 2), &(&x * &x).scale(&q(1, 2)));
        let at = e.eval(&[int(2)]);
        assert_eq!(at[(0, 1)], int(2));
        assert_eq!(at[(0, 2)], int(2));
    }

    #[test]
    fn non_nilpotent_has_no_polynomial_exponential() {
        let n = 1;
        let m = PolyMatrix::from_fn(1, 1, n, |_, _| Poly::var(n, 0));
        assert!(m.exp_nilpotent().is_none());
    }
}
