//! Simply connected nilpotent Lie groups in exponential coordinates.
//!
//! An element `exp(x)` is stored as its coordinate vector `x`. The product
//! is the Baker–Campbell–Hausdorff series, which terminates for nilpotent
//! algebras; it is implemented through degree four, so algebras of class at
//! most four are exact.

use lie2::scalar::q;
use lie2::{LieAlgebra, Matrix, Poly, Ring};

use crate::error::{GroupError, Result};
use crate::polymat::PolyMatrix;

/// Largest nilpotency class the product formula covers.
pub const MAX_CLASS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupModel {
    name: String,
    algebra: LieAlgebra,
    class: usize,
    /// `x·y` as `n` polynomials in `x₁..xₙ, y₁..yₙ`.
    product: Vec<Poly>,
    /// `Ad_{exp x}` in the variables `x`.
    adjoint: PolyMatrix,
    /// `Ad*_{exp x}` on `g*` (basis dual to the algebra's).
    coadjoint: PolyMatrix,
}

/// `[p, q]` for vectors of polynomials, using the structure constants of `g`.
pub fn bracket_polys(g: &LieAlgebra, p: &[Poly], q: &[Poly]) -> Vec<Poly> {
    let n = g.dim();
    let m = p.first().map_or(0, Poly::n_vars);
    let mut out = vec![Poly::zero(m); n];
    for i in 0..n {
        if p[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if i == j || q[j].is_zero() {
                continue;
            }
            let pq = &p[i] * &q[j];
            for (k, o) in out.iter_mut().enumerate() {
                let c = g.constant(i, j, k);
                if !Ring::is_zero(c) {
                    *o = &*o + &pq.scale(c);
                }
            }
        }
    }
    out
}

fn combine(terms: &[(lie2::Scalar, &[Poly])], m: usize, n: usize) -> Vec<Poly> {
    (0..n)
        .map(|k| {
            terms
                .iter()
                .fold(Poly::zero(m), |acc, (c, v)| &acc + &v[k].scale(c))
        })
        .collect()
}

impl GroupModel {
    /// The simply connected group of a nilpotent algebra of class at most
    /// [`MAX_CLASS`].
    pub fn nilpotent(name: impl Into<String>, g: &LieAlgebra) -> Result<Self> {
        g.validate()?;
        let class = g.nilpotency_class().ok_or(GroupError::NotNilpotent)?;
        if class > MAX_CLASS {
            return Err(GroupError::Unsupported(format!(
                "nilpotency class {class} exceeds the degree-{MAX_CLASS} product formula"
            )));
        }
        let n = g.dim();
        let x: Vec<Poly> = (0..n).map(|i| Poly::var(2 * n, i)).collect();
        let y: Vec<Poly> = (0..n).map(|i| Poly::var(2 * n, n + i)).collect();
        let xy = bracket_polys(g, &x, &y);
        let x_xy = bracket_polys(g, &x, &xy);
        let y_xy = bracket_polys(g, &y, &xy);
        let y_x_xy = bracket_polys(g, &y, &x_xy);
        let product = combine(
            &[
                (q(1, 1), &x),
                (q(1, 1), &y),
                (q(1, 2), &xy),
                (q(1, 12), &x_xy),
                (q(-1, 12), &y_xy),
                (q(-1, 24), &y_x_xy),
            ],
            2 * n,
            n,
        );
        let ad = PolyMatrix::linear_combination(&g.adjoint(), n, n, 0);
        let coad = PolyMatrix::linear_combination(&g.coadjoint(), n, n, 0);
        let adjoint = ad.exp_nilpotent().ok_or(GroupError::NotNilpotent)?;
        let coadjoint = coad.exp_nilpotent().ok_or(GroupError::NotNilpotent)?;
        Ok(GroupModel {
            name: name.into(),
            algebra: g.clone(),
            class,
            product,
            adjoint,
            coadjoint,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn class(&self) -> usize {
        self.class
    }

    /// Product polynomials in `x₁..xₙ, y₁..yₙ`.
    pub fn product_polys(&self) -> &[Poly] {
        &self.product
    }

    pub fn adjoint_polys(&self) -> &PolyMatrix {
        &self.adjoint
    }

    pub fn coadjoint_polys(&self) -> &PolyMatrix {
        &self.coadjoint
    }

    /// `x·y` where the inputs are polynomials sharing a variable set.
    pub fn product_of(&self, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
        let subs: Vec<Poly> = x.iter().chain(y).cloned().collect();
        self.product.iter().map(|p| p.compose(&subs)).collect()
    }

    pub fn identity<R: Ring>(&self) -> Vec<R> {
        vec![R::zero(); self.dim()]
    }

    /// `exp` in exponential coordinates is the identity on coordinates.
    pub fn exp<R: Ring>(&self, x: &[R]) -> Vec<R> {
        x.to_vec()
    }

    pub fn mul<R: Ring>(&self, a: &[R], b: &[R]) -> Vec<R> {
        let point: Vec<R> = a.iter().chain(b).cloned().collect();
        self.product.iter().map(|p| p.eval(&point)).collect()
    }

    pub fn inverse<R: Ring>(&self, a: &[R]) -> Vec<R> {
        a.iter().map(|x| -x.clone()).collect()
    }

    pub fn adjoint_at<R: Ring>(&self, a: &[R]) -> Matrix<R> {
        self.adjoint.eval(a)
    }

    pub fn coadjoint_at<R: Ring>(&self, a: &[R]) -> Matrix<R> {
        self.coadjoint.eval(a)
    }
}
