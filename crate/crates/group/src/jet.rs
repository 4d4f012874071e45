//! Formal jets in three parameters, each truncated at order one.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use lie2::scalar::format_scalar;
use lie2::{Measured, Ring, Scalar};

/// Element of `ℚ[t₁,t₂,t₃]/(t₁², t₂², t₃²)`. Coefficient `k` belongs to the
/// monomial whose parameters are the set bits of `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    coeffs: [Scalar; 8],
}

/// Mask of `t₁t₂t₃`.
pub const MIXED: usize = 0b111;

impl Jet {
    pub fn constant(c: Scalar) -> Self {
        let mut coeffs: [Scalar; 8] = std::array::from_fn(|_| <Scalar as Ring>::zero());
        coeffs[0] = c;
        Jet { coeffs }
    }

    /// The parameter `tᵢ`, `i ∈ {0, 1, 2}`.
    pub fn param(i: usize) -> Self {
        assert!(i < 3, "jets have three parameters");
        let mut j = Jet::constant(<Scalar as Ring>::zero());
        j.coeffs[1 << i] = <Scalar as Ring>::one();
        j
    }

    pub fn coefficient(&self, mask: usize) -> &Scalar {
        &self.coeffs[mask]
    }

    /// Coefficient of `t₁t₂t₃`, i.e. `∂³/∂t₁∂t₂∂t₃` at 0.
    pub fn mixed(&self) -> &Scalar {
        &self.coeffs[MIXED]
    }

    fn zip(self, other: Jet, f: impl Fn(Scalar, Scalar) -> Scalar) -> Jet {
        let mut b = other.coeffs.into_iter();
        Jet {
            coeffs: self.coeffs.map(|a| f(a, b.next().expect("eight coefficients"))),
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            coeffs: self.coeffs.map(|a| -a),
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut out = Jet::constant(<Scalar as Ring>::zero());
        for a in 0..8 {
            if Ring::is_zero(&self.coeffs[a]) {
                continue;
            }
            for b in 0..8 {
                if a & b == 0 && !Ring::is_zero(&rhs.coeffs[b]) {
                    out.coeffs[a | b] += self.coeffs[a].clone() * rhs.coeffs[b].clone();
                }
            }
        }
        out
    }
}

impl Ring for Jet {
    fn zero() -> Self {
        Jet::constant(<Scalar as Ring>::zero())
    }
    fn one() -> Self {
        Jet::constant(<Scalar as Ring>::one())
    }
    fn from_scalar(s: &Scalar) -> Self {
        Jet::constant(s.clone())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl Measured for Jet {
    const EXACT: bool = true;
    fn magnitude(&self) -> f64 {
        self.coeffs.iter().map(Measured::magnitude).fold(0.0, f64::max)
    }
    fn render(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format_scalar(c));
            for i in 0..3 {
                if k & (1 << i) != 0 {
                    let _ = write!(out, "·t{}", i + 1);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
