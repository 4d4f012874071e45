//! Exact rational scalars and the small ring abstraction shared by the
//! exact, floating and formal-jet evaluation paths.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Arbitrary precision rational, always reduced with a positive denominator.
pub type Scalar = BigRational;

/// `n / d` as a scalar. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    <Scalar as Zero>::zero()
}

pub fn one() -> Scalar {
    <Scalar as One>::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, AlgebraError> {
    let t = text.trim();
    let bad = || AlgebraError::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Commutative ring used to evaluate polynomial maps. Implemented for exact
/// rationals, `f64`, and truncated formal jets.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
}

/// Rings whose elements can be measured, so that identity checks can be
/// reported as residuals.
pub trait Measured: Ring {
    /// True when arithmetic is exact and residuals must vanish identically.
    const EXACT: bool;
    fn magnitude(&self) -> f64;
    fn render(&self) -> String;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Measured for Scalar {
    const EXACT: bool = true;
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn render(&self) -> String {
        format_scalar(self)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.to_f64().unwrap_or(f64::NAN)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Measured for f64 {
    const EXACT: bool = false;
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn render(&self) -> String {
        format!("{self:e}")
    }
}

/// Absolute value as a scalar.
pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `n / d` reduced with machine integers; `d > 0`.
pub(crate) fn small_fraction(n: i128, d: i128) -> Scalar {
    debug_assert!(d > 0);
    let g = gcd_u128(n.unsigned_abs(), d.unsigned_abs()) as i128;
    BigRational::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

fn small_parts(s: &Scalar) -> Option<(i64, i64)> {
    Some((s.numer().to_i64()?, s.denom().to_i64()?))
}

/// `a + b`, avoiding big-integer reduction when both are small.
pub(crate) fn add_fast(a: &Scalar, b: &Scalar) -> Scalar {
    if let (Some((an, ad)), Some((bn, bd))) = (small_parts(a), small_parts(b)) {
        let (an, ad, bn, bd) = (i128::from(an), i128::from(ad), i128::from(bn), i128::from(bd));
        if ad == bd {
            return small_fraction(an + bn, ad);
        }
        return small_fraction(an * bd + bn * ad, ad * bd);
    }
    a + b
}

/// Factorial as a scalar.
pub fn factorial(n: usize) -> Scalar {
    (1..=n).fold(one(), |acc, k| acc * int(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let s = q(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(format_scalar(&s), "-3/2");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["0", "1/2", "-7/3", "12"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&s), text);
        }
        assert_eq!(parse_scalar("4/8").unwrap(), q(1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn exact_sum() {
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert_eq!(factorial(4), int(24));
    }
}
