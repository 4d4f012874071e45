//! The representation up to homotopy of vector fields on `C^∞ --d--> Ω¹`,
//! its `Ω¹ --Id--> Ω¹` variant, and the associated brackets, with optional
//! deliberate defects for detection tests.

use lie2::poly::Poly;
use lie2::scalar::{int, q, Scalar};

use crate::calculus::{bracket_with, d_r, pairing_unchecked, t3_with, OneForm, Section, VectorField};

/// A deliberate defect.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// `μ₁(X)f = X(f)` instead of `½X(f)`; on the Id complex, `μ₁(X)ξ =
    /// L_Xξ − d(ξ(X))`.
    DropHalfInMu1,
    /// Coefficient 1 instead of ½ on the exact term of the bracket.
    DropHalfInBracket,
    /// `ν = 0`, hence `l₃ = 0`.
    ZeroNu,
}

impl Mutation {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "none" => Some(Mutation::None),
            "drop-half-mu1" => Some(Mutation::DropHalfInMu1),
            "drop-half-bracket" => Some(Mutation::DropHalfInBracket),
            "zero-nu" => Some(Mutation::ZeroNu),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::DropHalfInMu1 => "drop-half-mu1",
            Mutation::DropHalfInBracket => "drop-half-bracket",
            Mutation::ZeroNu => "zero-nu",
        }
    }
}

/// Structure maps on polynomial sections, all sharing one `n_vars`.
#[derive(Clone, Debug)]
pub struct CourantModel {
    pub mutation: Mutation,
    h: Scalar,
}

impl CourantModel {
    pub fn new(mutation: Mutation) -> Self {
        let h = if mutation == Mutation::DropHalfInBracket { int(1) } else { q(1, 2) };
        CourantModel { mutation, h }
    }

    pub fn bracket(&self, e1: &Section, e2: &Section) -> Section {
        bracket_with(e1, e2, &self.h)
    }

    pub fn t3(&self, e1: &Section, e2: &Section, e3: &Section) -> Poly {
        t3_with(e1, e2, e3, &self.h)
    }

    pub fn vf_bracket(&self, x: &VectorField, y: &VectorField) -> VectorField {
        self.bracket(&Section::from_vf(x.clone()), &Section::from_vf(y.clone())).vf
    }

    /// `μ₀(X)ξ = ⟦X, ξ⟧`.
    pub fn mu0(&self, x: &VectorField, xi: &OneForm) -> OneForm {
        self.bracket(&Section::from_vf(x.clone()), &Section::from_form(xi.clone())).form
    }

    /// `μ₁(X)f = ⟨X, df⟩ = ½X(f)`.
    pub fn mu1(&self, x: &VectorField, f: &Poly) -> Poly {
        let full = x.apply(f).expect("shared n_vars");
        if self.mutation == Mutation::DropHalfInMu1 {
            full
        } else {
            full.scale(&q(1, 2))
        }
    }

    /// `ν(X,Y)ξ = T(X,Y,ξ)`.
    pub fn nu(&self, x: &VectorField, y: &VectorField, xi: &OneForm) -> Poly {
        if self.mutation == Mutation::ZeroNu {
            return Poly::zero(x.n_vars());
        }
        self.t3(&Section::from_vf(x.clone()), &Section::from_vf(y.clone()), &Section::from_form(xi.clone()))
    }

    /// Degree-one differential `f ↦ 0 + df`.
    pub fn d(&self, f: &Poly) -> Section {
        Section::from_form(d_r(f))
    }

    /// `l₂(e₁, e₂) = ⟦e₁, e₂⟧`.
    pub fn l2(&self, e1: &Section, e2: &Section) -> Section {
        self.bracket(e1, e2)
    }

    /// `l₂(e, f) = ⟨e, df⟩`.
    pub fn l2_fn(&self, e: &Section, f: &Poly) -> Poly {
        if self.mutation == Mutation::DropHalfInMu1 {
            return e.vf.apply(f).expect("shared n_vars");
        }
        pairing_unchecked(e, &self.d(f))
    }

    /// `l₃ = −T`.
    pub fn l3(&self, e1: &Section, e2: &Section, e3: &Section) -> Poly {
        if self.mutation == Mutation::ZeroNu {
            return Poly::zero(e1.n_vars());
        }
        -self.t3(e1, e2, e3)
    }

    /// Semidirect-product `l₂(X+ξ, Y+η) = [X,Y] + μ₀(X)η − μ₀(Y)ξ`.
    pub fn semidirect_l2(&self, e1: &Section, e2: &Section) -> Section {
        let vf = self.vf_bracket(&e1.vf, &e2.vf);
        let form = self
            .mu0(&e1.vf, &e2.form)
            .sub(&self.mu0(&e2.vf, &e1.form))
            .expect("shared n_vars");
        Section { vf, form }
    }

    /// Semidirect-product `l₂(X+ξ, f) = μ₁(X)f`.
    pub fn semidirect_l2_fn(&self, e: &Section, f: &Poly) -> Poly {
        self.mu1(&e.vf, f)
    }

    /// Semidirect-product `l₃ = −ν(X,Y)γ + c.p.`
    pub fn semidirect_l3(&self, e1: &Section, e2: &Section, e3: &Section) -> Poly {
        let a = self.nu(&e1.vf, &e2.vf, &e3.form);
        let b = self.nu(&e2.vf, &e3.vf, &e1.form);
        let c = self.nu(&e3.vf, &e1.vf, &e2.form);
        -(a + b + c)
    }

    /// `μ₀` on the Id complex.
    pub fn id_mu0(&self, x: &VectorField, xi: &OneForm) -> OneForm {
        self.mu0(x, xi)
    }

    /// `μ₁` on the Id complex; equal to `μ₀` unless mutated.
    pub fn id_mu1(&self, x: &VectorField, xi: &OneForm) -> OneForm {
        if self.mutation == Mutation::DropHalfInMu1 {
            return bracket_with(&Section::from_vf(x.clone()), &Section::from_form(xi.clone()), &int(1)).form;
        }
        self.mu0(x, xi)
    }

    /// `ν(X,Y)ξ = dT(X,Y,ξ)` on the Id complex.
    pub fn id_nu(&self, x: &VectorField, y: &VectorField, xi: &OneForm) -> OneForm {
        d_r(&self.nu(x, y, xi))
    }
}

impl Default for CourantModel {
    fn default() -> Self {
        Self::new(Mutation::None)
    }
}
