//! Polynomial vector fields, one-forms and sections of `TM ⊕ T*M` on ℝⁿ.

use std::fmt;

use lie2::poly::Poly;
use lie2::scalar::{q, Scalar};
use lie2::{AlgebraError, Result};

fn check_n(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::dim(context, expected, found))
    }
}

fn check_components(context: &str, n_vars: usize, comps: &[Poly]) -> Result<()> {
    check_n(context, n_vars, comps.len())?;
    for p in comps {
        check_n(context, n_vars, p.n_vars())?;
    }
    Ok(())
}

fn fmt_components(f: &mut fmt::Formatter<'_>, comps: &[Poly], prefix: &str) -> fmt::Result {
    let mut first = true;
    for (i, p) in comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        if comps.len() <= 3 {
            write!(f, "({p}){prefix}{}", ["x", "y", "z"][i])?;
        } else {
            write!(f, "({p}){prefix}x{}", i + 1)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `Σ Xᵢ ∂/∂xᵢ`.
#[derive(Clone, PartialEq)]
pub struct VectorField {
    n_vars: usize,
    comps: Vec<Poly>,
}

/// `Σ ξᵢ dxᵢ`.
#[derive(Clone, PartialEq)]
pub struct OneForm {
    n_vars: usize,
    comps: Vec<Poly>,
}

/// `Σ_{i<j} ωᵢⱼ dxᵢ ∧ dxⱼ`, stored as a full antisymmetric table.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoForm {
    n_vars: usize,
    comps: Vec<Vec<Poly>>,
}

/// `X + ξ`.
#[derive(Clone, PartialEq)]
pub struct Section {
    pub vf: VectorField,
    pub form: OneForm,
}

impl VectorField {
    pub fn new(n_vars: usize, comps: Vec<Poly>) -> Result<Self> {
        check_components("vector field", n_vars, &comps)?;
        Ok(VectorField { n_vars, comps })
    }

    pub fn zero(n_vars: usize) -> Self {
        VectorField { n_vars, comps: vec![Poly::zero(n_vars); n_vars] }
    }

    /// `∂/∂xᵢ`.
    pub fn coordinate(n_vars: usize, i: usize) -> Self {
        let mut v = Self::zero(n_vars);
        v.comps[i] = Poly::one(n_vars);
        v
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        VectorField { n_vars: self.n_vars, comps: self.comps.iter().map(|p| p.scale(s)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_n("vector field sum", self.n_vars, other.n_vars)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_n("vector field difference", self.n_vars, other.n_vars)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Self {
        VectorField { n_vars: self.n_vars, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| f(a, b)).collect() }
    }

    /// `X(f) = Σ Xᵢ ∂f/∂xᵢ`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        check_n("vector field on function", self.n_vars, f.n_vars())?;
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (i, x) in self.comps.iter().enumerate() {
            if !x.is_zero() {
                out = out + x * &f.derivative(i);
            }
        }
        out
    }
}

impl OneForm {
    pub fn new(n_vars: usize, comps: Vec<Poly>) -> Result<Self> {
        check_components("one-form", n_vars, &comps)?;
        Ok(OneForm { n_vars, comps })
    }

    pub fn zero(n_vars: usize) -> Self {
        OneForm { n_vars, comps: vec![Poly::zero(n_vars); n_vars] }
    }

    /// `dxᵢ`.
    pub fn coordinate(n_vars: usize, i: usize) -> Self {
        let mut v = Self::zero(n_vars);
        v.comps[i] = Poly::one(n_vars);
        v
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        OneForm { n_vars: self.n_vars, comps: self.comps.iter().map(|p| p.scale(s)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_n("one-form sum", self.n_vars, other.n_vars)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_n("one-form difference", self.n_vars, other.n_vars)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Self {
        OneForm { n_vars: self.n_vars, comps: self.comps.iter().zip(&other.comps).map(|(a, b)| f(a, b)).collect() }
    }

    /// `ξ(X)`.
    pub fn eval(&self, x: &VectorField) -> Result<Poly> {
        check_n("one-form on vector field", self.n_vars, x.n_vars)?;
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: &VectorField) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (a, b) in self.comps.iter().zip(&x.comps) {
            if !a.is_zero() && !b.is_zero() {
                out = out + a * b;
            }
        }
        out
    }

    /// Largest coefficient over all components.
    pub fn max_abs(&self) -> Scalar {
        self.comps.iter().map(Poly::max_abs).max().unwrap_or_else(|| Scalar::from_integer(0.into()))
    }
}

impl TwoForm {
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Coefficient of `dxᵢ ∧ dxⱼ` (antisymmetric in `i, j`).
    pub fn component(&self, i: usize, j: usize) -> &Poly {
        &self.comps[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().flatten().all(Poly::is_zero)
    }

    /// `i_X ω`, i.e. `(i_X ω)ⱼ = Σᵢ Xᵢ ωᵢⱼ`.
    pub fn contract(&self, x: &VectorField) -> Result<OneForm> {
        check_n("contraction", self.n_vars, x.n_vars)?;
        Ok(self.contract_unchecked(x))
    }

    fn contract_unchecked(&self, x: &VectorField) -> OneForm {
        let n = self.n_vars;
        let comps = (0..n)
            .map(|j| {
                let mut acc = Poly::zero(n);
                for i in 0..n {
                    if !x.comps[i].is_zero() && !self.comps[i][j].is_zero() {
                        acc = acc + &x.comps[i] * &self.comps[i][j];
                    }
                }
                acc
            })
            .collect();
        OneForm { n_vars: n, comps }
    }
}

impl Section {
    pub fn new(vf: VectorField, form: OneForm) -> Result<Self> {
        check_n("section", vf.n_vars, form.n_vars)?;
        Ok(Section { vf, form })
    }

    pub fn zero(n_vars: usize) -> Self {
        Section { vf: VectorField::zero(n_vars), form: OneForm::zero(n_vars) }
    }

    pub fn from_vf(vf: VectorField) -> Self {
        let n = vf.n_vars;
        Section { vf, form: OneForm::zero(n) }
    }

    pub fn from_form(form: OneForm) -> Self {
        let n = form.n_vars;
        Section { vf: VectorField::zero(n), form }
    }

    pub fn n_vars(&self) -> usize {
        self.vf.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.vf.is_zero() && self.form.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Section { vf: self.vf.scale(s), form: self.form.scale(s) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Section { vf: self.vf.add(&other.vf)?, form: self.form.add(&other.form)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Section { vf: self.vf.sub(&other.vf)?, form: self.form.sub(&other.form)? })
    }

    /// Largest coefficient over both parts.
    pub fn max_abs(&self) -> Scalar {
        let v = self.vf.comps.iter().map(Poly::max_abs).max();
        v.into_iter().chain(Some(self.form.max_abs())).max().expect("nonempty")
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_components(f, &self.comps, "∂")
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_components(f, &self.comps, "d")
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.vf.is_zero(), self.form.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.vf),
            (true, false) => write!(f, "{}", self.form),
            (false, false) => write!(f, "{} + {}", self.vf, self.form),
        }
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneForm({self})")
    }
}

impl fmt::Debug for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Section({self})")
    }
}

/// `[X, Y]ⱼ = Σᵢ Xᵢ ∂ᵢYⱼ − Yᵢ ∂ᵢXⱼ`.
pub fn vf_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    check_n("vector field bracket", x.n_vars, y.n_vars)?;
    Ok(vf_bracket_unchecked(x, y))
}

fn vf_bracket_unchecked(x: &VectorField, y: &VectorField) -> VectorField {
    let comps = (0..x.n_vars)
        .map(|j| &x.apply_unchecked(&y.comps[j]) - &y.apply_unchecked(&x.comps[j]))
        .collect();
    VectorField { n_vars: x.n_vars, comps }
}

/// de Rham differential of a function.
pub fn d_r(f: &Poly) -> OneForm {
    let n = f.n_vars();
    OneForm { n_vars: n, comps: (0..n).map(|i| f.derivative(i)).collect() }
}

/// de Rham differential of a one-form: `(dξ)ᵢⱼ = ∂ᵢξⱼ − ∂ⱼξᵢ`.
pub fn d_form(xi: &OneForm) -> TwoForm {
    let n = xi.n_vars;
    let comps = (0..n)
        .map(|i| (0..n).map(|j| &xi.comps[j].derivative(i) - &xi.comps[i].derivative(j)).collect())
        .collect();
    TwoForm { n_vars: n, comps }
}

/// Cartan formula `L_X ξ = d(ξ(X)) + i_X dξ`.
pub fn lie_derivative(x: &VectorField, xi: &OneForm) -> Result<OneForm> {
    check_n("Lie derivative", x.n_vars, xi.n_vars)?;
    Ok(lie_derivative_unchecked(x, xi))
}

fn lie_derivative_unchecked(x: &VectorField, xi: &OneForm) -> OneForm {
    let exact = d_r(&xi.eval_unchecked(x));
    let inner = d_form(xi).contract_unchecked(x);
    exact.zip(&inner, |a, b| a + b)
}

/// `⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X))`.
pub fn pairing(e1: &Section, e2: &Section) -> Result<Poly> {
    check_n("pairing", e1.n_vars(), e2.n_vars())?;
    Ok(pairing_unchecked(e1, e2))
}

pub(crate) fn pairing_unchecked(e1: &Section, e2: &Section) -> Poly {
    (&e1.form.eval_unchecked(&e2.vf) + &e2.form.eval_unchecked(&e1.vf)).scale(&q(1, 2))
}

/// `⟦X+ξ, Y+η⟧ = [X,Y] + L_Xη − L_Yξ + ½d(ξ(Y) − η(X))`.
pub fn courant_bracket(e1: &Section, e2: &Section) -> Result<Section> {
    check_n("Courant bracket", e1.n_vars(), e2.n_vars())?;
    Ok(bracket_with(e1, e2, &q(1, 2)))
}

/// Courant-type bracket with coefficient `h` in front of the exact term.
pub(crate) fn bracket_with(e1: &Section, e2: &Section, h: &Scalar) -> Section {
    let vf = vf_bracket_unchecked(&e1.vf, &e2.vf);
    let lx = lie_derivative_unchecked(&e1.vf, &e2.form);
    let ly = lie_derivative_unchecked(&e2.vf, &e1.form);
    let ex = &e1.form.eval_unchecked(&e2.vf) - &e2.form.eval_unchecked(&e1.vf);
    let de = d_r(&ex.scale(h));
    let form = lx.zip(&ly, |a, b| a - b).zip(&de, |a, b| a + b);
    Section { vf, form }
}

/// `T(e₁,e₂,e₃) = ⅓(⟨⟦e₁,e₂⟧,e₃⟩ + c.p.)`.
pub fn t3(e1: &Section, e2: &Section, e3: &Section) -> Result<Poly> {
    check_n("T", e1.n_vars(), e2.n_vars())?;
    check_n("T", e1.n_vars(), e3.n_vars())?;
    Ok(t3_with(e1, e2, e3, &q(1, 2)))
}

pub(crate) fn t3_with(e1: &Section, e2: &Section, e3: &Section, h: &Scalar) -> Poly {
    let a = pairing_unchecked(&bracket_with(e1, e2, h), e3);
    let b = pairing_unchecked(&bracket_with(e2, e3, h), e1);
    let c = pairing_unchecked(&bracket_with(e3, e1, h), e2);
    (a + b + c).scale(&q(1, 3))
}
