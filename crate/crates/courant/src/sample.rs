//! Random polynomial data with small integer coefficients.

use lie2::poly::Poly;
use lie2::scalar::int;
use rand::Rng;

use crate::calculus::{OneForm, Section, VectorField};

/// Exponent vectors of total degree `≤ degree` in `n` variables.
pub fn monomials(n: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            go(n, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, degree, &mut Vec::new(), &mut out);
    out
}

/// Every monomial of degree `≤ degree` gets a coefficient uniform in `−2..=2`.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Poly {
    let mut p = Poly::zero(n);
    for e in monomials(n, degree) {
        p.add_term(e, int(rng.gen_range(-2..=2)));
    }
    p
}

pub fn random_vf<R: Rng>(rng: &mut R, n: usize, degree: u32) -> VectorField {
    VectorField::new(n, (0..n).map(|_| random_poly(rng, n, degree)).collect()).expect("shape")
}

pub fn random_form<R: Rng>(rng: &mut R, n: usize, degree: u32) -> OneForm {
    OneForm::new(n, (0..n).map(|_| random_poly(rng, n, degree)).collect()).expect("shape")
}

pub fn random_section<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Section {
    let vf = random_vf(rng, n, degree);
    Section::new(vf, random_form(rng, n, degree)).expect("shape")
}
