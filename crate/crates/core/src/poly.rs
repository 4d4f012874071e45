//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::scalar::{add_fast, format_scalar, int, small_fraction, Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Scalar) -> Self {
        Self::monomial(n_vars, vec![0; n_vars], c)
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, int(1))
    }

    /// The coordinate function `xᵢ`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Self::monomial(n_vars, e, int(1))
    }

    pub fn monomial(n_vars: usize, exps: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exps.len(), n_vars, "monomial exponent length");
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        debug_assert_eq!(exps.len(), self.n_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = add_fast(o.get(), &c);
                *o.get_mut() = sum;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// `∂/∂xᵢ`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * int(e[i] as i64));
        }
        out
    }

    /// Evaluates at a point in any [`Ring`].
    pub fn eval<R: Ring>(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.n_vars, "evaluation point length");
        let max_deg = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<R>> = point
            .iter()
            .map(|x| {
                let mut p = vec![R::one()];
                for k in 1..=max_deg {
                    let next = p[k - 1].clone() * x.clone();
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = R::from_scalar(c);
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * powers[v][k as usize].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `xᵢ ↦ subs[i]`; the result lives in the variables of
    /// `subs`.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.n_vars, "substitution length");
        let m = subs.first().map_or(0, |p| p.n_vars);
        let max_deg = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let mut cache: Vec<Vec<Poly>> = subs
            .iter()
            .map(|s| {
                let mut p = vec![Poly::one(m)];
                for k in 1..=max_deg {
                    let next = &p[k - 1] * s;
                    p.push(next);
                }
                p
            })
            .collect();
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &cache[v][k as usize];
                }
            }
            out = &out + &t;
        }
        cache.clear();
        out
    }

    /// Terms of total degree at most `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> Poly {
        self.filter_degree(|d| d <= max_deg)
    }

    /// Terms of total degree exactly `deg`.
    pub fn homogeneous(&self, deg: u32) -> Poly {
        self.filter_degree(|d| d == deg)
    }

    fn filter_degree(&self, keep: impl Fn(u32) -> bool) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e.iter().sum()))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// [`Poly::compose`] keeping only terms of degree at most `max_deg`.
    pub fn compose_truncated(&self, subs: &[Poly], max_deg: u32) -> Poly {
        assert_eq!(subs.len(), self.n_vars, "substitution length");
        let m = subs.first().map_or(0, |p| p.n_vars);
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let cache: Vec<Vec<Poly>> = subs
            .iter()
            .map(|s| {
                let s = s.truncate(max_deg);
                let mut p = vec![Poly::one(m)];
                for k in 1..=max_exp {
                    let next = (&p[k - 1] * &s).truncate(max_deg);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = (&t * &cache[v][k as usize]).truncate(max_deg);
                }
            }
            out = out + t;
        }
        out
    }

    /// Re-embeds into `n_vars` variables, shifting indices by `offset`.
    pub fn embed(&self, n_vars: usize, offset: usize) -> Poly {
        assert!(offset + self.n_vars <= n_vars, "embedding out of range");
        let mut out = Poly::zero(n_vars);
        for (e, c) in &self.terms {
            let mut f = vec![0; n_vars];
            f[offset..offset + self.n_vars].copy_from_slice(e);
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> Scalar {
        self.terms
            .values()
            .map(crate::scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    /// Terms in graded lexicographic order, highest first.
    pub fn grlex_terms(&self) -> Vec<(&Vec<u32>, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

fn var_name(n_vars: usize, i: usize) -> String {
    if n_vars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.grlex_terms().into_iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    let name = var_name(self.n_vars, v);
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let is_one = mag == int(1);
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if is_one {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_scalar(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n_vars, rhs.n_vars, "polynomial variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n_vars, rhs.n_vars, "polynomial variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

/// Bits per variable when exponent vectors are packed into a `u64`.
fn pack_bits(n_vars: usize) -> Option<u32> {
    (1..=8).contains(&n_vars).then(|| (64 / n_vars as u32).min(32))
}

fn pack(e: &[u32], bits: u32) -> u64 {
    e.iter().fold(0u64, |acc, &k| (acc << bits) | u64::from(k))
}

fn unpack(key: u64, n_vars: usize, bits: u32) -> Vec<u32> {
    let mask = (1u64 << bits) - 1;
    (0..n_vars)
        .map(|i| ((key >> ((n_vars - 1 - i) as u32 * bits)) & mask) as u32)
        .collect()
}

impl Poly {
    /// Common denominator and `i64` numerators with packed exponents, or
    /// `None` if something does not fit.
    fn integer_form(&self, bits: u32) -> Option<(BigInt, Vec<(u64, i64)>, u32)> {
        let mut den = BigInt::from(1);
        for c in self.terms.values() {
            if !c.denom().is_one() && !num_traits::Zero::is_zero(&(&den % c.denom())) {
                den = den.lcm(c.denom());
            }
        }
        let mut max_exp = 0;
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let num = if c.denom() == &den {
                c.numer().to_i64()?
            } else {
                (c.numer() * (&den / c.denom())).to_i64()?
            };
            max_exp = max_exp.max(e.iter().copied().max().unwrap_or(0));
            out.push((pack(e, bits), num));
        }
        Some((den, out, max_exp))
    }

    /// Product via machine integers; `None` on overflow.
    fn mul_small(&self, rhs: &Poly) -> Option<Poly> {
        let bits = pack_bits(self.n_vars)?;
        let (da, a, ea) = self.integer_form(bits)?;
        let (db, b, eb) = rhs.integer_form(bits)?;
        if u64::from(ea) + u64::from(eb) >= (1u64 << bits) {
            return None;
        }
        let mut products: Vec<(u64, i128)> = Vec::with_capacity(a.len() * b.len());
        for &(ka, ca) in &a {
            for &(kb, cb) in &b {
                products.push((ka + kb, i128::from(ca).checked_mul(i128::from(cb))?));
            }
        }
        products.sort_unstable_by_key(|p| p.0);
        let den = da * db;
        let small_den = den.to_i128();
        let mut merged: Vec<(Vec<u32>, Scalar)> = Vec::new();
        let mut i = 0;
        while i < products.len() {
            let key = products[i].0;
            let mut c: i128 = 0;
            while i < products.len() && products[i].0 == key {
                c = c.checked_add(products[i].1)?;
                i += 1;
            }
            if c != 0 {
                let coeff = match small_den {
                    Some(d) => small_fraction(c, d),
                    None => Scalar::new(BigInt::from(c), den.clone()),
                };
                merged.push((unpack(key, self.n_vars, bits), coeff));
            }
        }
        // packed keys sort like the exponent vectors
        Some(Poly { n_vars: self.n_vars, terms: merged.into_iter().collect() })
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n_vars, rhs.n_vars, "polynomial variable count");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.n_vars);
        }
        if let Some(p) = self.mul_small(rhs) {
            return p;
        }
        let mut out = Poly::zero(self.n_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Mul, mul);

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        assert_eq!(self.n_vars, rhs.n_vars, "polynomial variable count");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        assert_eq!(self.n_vars, rhs.n_vars, "polynomial variable count");
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn naive_product(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero(a.n_vars());
        for (e1, c1) in a.terms() {
            for (e2, c2) in b.terms() {
                let e = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    #[test]
    fn truncated_composition_agrees_with_full() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &(&x * &x) * &y + x.clone();
        let subs = [&x + &y, &(&x * &y) + &Poly::one(2)];
        let full = p.compose(&subs);
        for d in 0..=5 {
            assert_eq!(p.compose_truncated(&subs, d), full.truncate(d));
        }
        assert_eq!(full.homogeneous(3) + full.truncate(2), full.truncate(3));
    }

    #[test]
    fn product_matches_term_by_term() {
        let mut a = Poly::zero(3);
        let mut b = Poly::zero(3);
        for k in 0..12u32 {
            a.add_term(vec![k % 3, k % 2, k / 4], q(k as i64 - 5, (k % 4 + 1) as i64));
            b.add_term(vec![k % 2, k / 3, k % 5], q(3 - k as i64, (k % 3 + 1) as i64));
        }
        assert_eq!(&a * &b, naive_product(&a, &b));
        // numerators beyond i64 take the general path
        let big = Poly::constant(3, Scalar::from_integer(BigInt::from(i64::MAX) * 4)) + a.clone();
        assert_eq!(&big * &b, naive_product(&big, &b));
        let one_var = Poly::var(1, 0) + Poly::constant(1, q(1, 2));
        assert_eq!(&one_var * &one_var, naive_product(&one_var, &one_var));
    }

    #[test]
    fn arithmetic_and_display() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &(&x * &x) - &(&y.scale(&q(3, 2)));
        assert_eq!(p.to_string(), "x^2 - 3/2*y");
        assert_eq!((&p - &p).to_string(), "0");
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn derivative_and_eval() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &(&(&x * &x) * &y) + &Poly::constant(2, int(5));
        assert_eq!(p.derivative(0), (&x * &y).scale(&int(2)));
        assert_eq!(p.eval(&[int(2), int(3)]), int(17));
        assert_eq!(p.eval(&[2.0f64, 3.0]), 17.0);
    }

    #[test]
    fn composition() {
        let x = Poly::var(1, 0);
        let p = &x * &x;
        let s = Poly::var(2, 0) + Poly::var(2, 1);
        let c = p.compose(&[s]);
        assert_eq!(c.eval(&[int(1), int(2)]), int(9));
        assert_eq!(c.len(), 3);
    }
}
