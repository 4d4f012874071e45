//! Brute-force evaluation of the L∞ relations from first principles, used to
//! cross-check the hand-specialized two-term relations.
//!
//! The total space is `L₀ ⊕ L₁` with `L₀` in degree 0 and `L₁` in degree 1,
//! `l_k` of degree `k − 2`, graded antisymmetric. The `n`-th relation is
//!
//! `Σ_{i+j=n+1} (−1)^{i(j−1)} Σ_σ χ(σ) l_j(l_i(x_σ(1..i)), x_σ(i+1..n)) = 0`
//!
//! over `(i, n−i)` unshuffles `σ`, where `χ(σ)` is the sign of `σ` times the
//! Koszul sign.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alternating::{combinations, AlternatingMap};
use crate::linfty::TwoTermLInfinity;
use crate::matrix::Matrix;
use crate::scalar::{int, Ring, Scalar};

/// A homogeneous element: degree plus coordinates in `L₀` or `L₁`.
#[derive(Clone, Debug)]
struct Elem {
    deg: usize,
    v: Vec<Scalar>,
}

pub struct Unshuffle<'a> {
    l: &'a TwoTermLInfinity,
}

impl<'a> Unshuffle<'a> {
    pub fn new(l: &'a TwoTermLInfinity) -> Self {
        Unshuffle { l }
    }

    fn dim(&self, deg: usize) -> usize {
        if deg == 0 {
            self.l.l0_dim
        } else {
            self.l.l1_dim
        }
    }

    fn basis(&self, deg: usize, i: usize) -> Elem {
        let mut v = vec![Scalar::zero(); self.dim(deg)];
        v[i] = int(1);
        Elem { deg, v }
    }

    /// `l_k` on basis elements `(deg, index)`; `None` when the output degree
    /// is outside `{0, 1}`.
    fn bracket_basis(&self, args: &[(usize, usize)]) -> Option<Elem> {
        let l = self.l;
        let total: usize = args.iter().map(|a| a.0).sum();
        let out_deg = (total + args.len()) as i64 - 2;
        if !(0..=1).contains(&out_deg) {
            return None;
        }
        let out_deg = out_deg as usize;
        let v = match args {
            [(1, m)] => l.d.column(*m),
            [(0, _)] => return None,
            [(0, x), (0, y)] => l.l2_00.eval(&[*x, *y]),
            [(0, x), (1, m)] => l.l2_01[*x].column(*m),
            [(1, m), (0, x)] => l.l2_01[*x].column(*m).into_iter().map(|c| -c).collect(),
            [(1, _), (1, _)] => return None,
            [(0, x), (0, y), (0, z)] => l.l3.eval(&[*x, *y, *z]),
            _ => return None,
        };
        Some(Elem { deg: out_deg, v })
    }

    /// Multilinear `l_k` on homogeneous elements.
    fn bracket(&self, args: &[Elem]) -> Option<Elem> {
        let mut out: Option<Elem> = None;
        let mut idx = vec![0usize; args.len()];
        loop {
            let coef = args
                .iter()
                .zip(&idx)
                .fold(int(1), |acc, (a, &i)| acc * a.v[i].clone());
            if !coef.is_zero() {
                let basis: Vec<(usize, usize)> = args.iter().zip(&idx).map(|(a, &i)| (a.deg, i)).collect();
                if let Some(e) = self.bracket_basis(&basis) {
                    let o = out.get_or_insert_with(|| Elem {
                        deg: e.deg,
                        v: vec![Scalar::zero(); e.v.len()],
                    });
                    for (a, b) in o.v.iter_mut().zip(e.v) {
                        *a += coef.clone() * b;
                    }
                }
            }
            // odometer over coordinates
            let mut k = 0;
            loop {
                if k == args.len() {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < args[k].v.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    /// Left-hand side of the `n`-th relation on basis elements, or `None`
    /// if every term vanishes for degree reasons.
    pub fn relation(&self, inputs: &[(usize, usize)]) -> Option<(usize, Vec<Scalar>)> {
        let n = inputs.len();
        let elems: Vec<Elem> = inputs.iter().map(|&(d, i)| self.basis(d, i)).collect();
        let mut acc: Option<(usize, Vec<Scalar>)> = None;
        for i in 1..=n {
            let j = n + 1 - i;
            let outer = if (i * (j - 1)) % 2 == 0 { 1 } else { -1 };
            for chosen in combinations(n, i) {
                let rest: Vec<usize> = (0..n).filter(|p| !chosen.contains(p)).collect();
                let sign = outer * koszul(&chosen, &rest, inputs);
                let inner_args: Vec<Elem> = chosen.iter().map(|&p| elems[p].clone()).collect();
                let Some(inner) = self.bracket(&inner_args) else {
                    continue;
                };
                let mut outer_args = vec![inner];
                outer_args.extend(rest.iter().map(|&p| elems[p].clone()));
                let Some(val) = self.bracket(&outer_args) else {
                    continue;
                };
                let slot = acc.get_or_insert_with(|| (val.deg, vec![Scalar::zero(); val.v.len()]));
                assert_eq!(slot.0, val.deg, "relation terms of mixed degree");
                for (a, b) in slot.1.iter_mut().zip(val.v) {
                    *a += int(sign) * b;
                }
            }
        }
        acc
    }
}

/// `χ(σ)` for the unshuffle placing `chosen` first, then `rest`.
fn koszul(chosen: &[usize], rest: &[usize], inputs: &[(usize, usize)]) -> i64 {
    let order: Vec<usize> = chosen.iter().chain(rest).copied().collect();
    let mut sign = 1;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if order[a] > order[b] {
                let (da, db) = (inputs[order[a]].0, inputs[order[b]].0);
                sign *= if da * db % 2 == 1 { 1 } else { -1 };
            }
        }
    }
    sign
}

/// Random structure maps with entries in `−2..=2`, not required to satisfy
/// any relation.
pub fn random_structure(l0: usize, l1: usize, seed: u64) -> TwoTermLInfinity {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = || int(rng.gen_range(-2..=2));
    let d = Matrix::from_fn(l0, l1, |_, _| r());
    let l2_00 = AlternatingMap::from_fn(2, l0, l0, |_| (0..l0).map(|_| r()).collect());
    let l2_01 = (0..l0).map(|_| Matrix::from_fn(l1, l1, |_, _| r())).collect();
    let l3 = AlternatingMap::from_fn(3, l0, l1, |_| (0..l1).map(|_| r()).collect());
    TwoTermLInfinity::new(d, l2_00, l2_01, l3).expect("shapes")
}

/// Result of comparing the oracle against the specialized relations.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Comparison {
    pub tuples: usize,
    /// Ordered input tuples (as `(degree, index)`) where the two disagree.
    pub mismatches: Vec<Vec<(usize, usize)>>,
}

/// Sign of the specialized residual relative to the oracle, for inputs in
/// canonical order (degree zero first).
const SIGN_B: i64 = 1;
const SIGN_C: i64 = -1;
const SIGN_D0: i64 = 1;
const SIGN_D1: i64 = 1;
const SIGN_E: i64 = 1;

/// Specialized residual for inputs sorted by `(degree, index)`; `None` where
/// the relation holds for degree reasons.
fn specialized(l: &TwoTermLInfinity, t: &[(usize, usize)]) -> Option<Vec<Scalar>> {
    let scale = |s: i64, v: Vec<Scalar>| v.into_iter().map(|x| int(s) * x).collect();
    match t {
        [(0, x), (1, m)] => Some(scale(SIGN_B, l.residual_b(*x, *m))),
        [(1, m), (1, n)] => Some(scale(SIGN_C, l.residual_c(*m, *n))),
        [(0, x), (0, y), (0, z)] => Some(scale(SIGN_D0, l.residual_d0(*x, *y, *z))),
        [(0, x), (0, y), (1, m)] => Some(scale(SIGN_D1, l.residual_d1(*x, *y, *m))),
        [(0, x), (0, y), (0, z), (0, w)] => Some(scale(SIGN_E, l.residual_e(*x, *y, *z, *w))),
        _ => None,
    }
}

/// Checks every ordered tuple of basis elements of arity 1 to 4.
pub fn compare(l: &TwoTermLInfinity) -> Comparison {
    let u = Unshuffle::new(l);
    let basis: Vec<(usize, usize)> = (0..l.l0_dim)
        .map(|i| (0, i))
        .chain((0..l.l1_dim).map(|i| (1, i)))
        .collect();
    let mut out = Comparison::default();
    for n in 1..=4 {
        let mut idx = vec![0usize; n];
        'tuples: loop {
            let t: Vec<(usize, usize)> = idx.iter().map(|&i| basis[i]).collect();
            out.tuples += 1;
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&p| t[p]);
            let sorted: Vec<(usize, usize)> = order.iter().map(|&p| t[p]).collect();
            let sign = koszul(&order, &[], &t);
            let oracle = u.relation(&t).map(|(_, v)| v);
            let expect = specialized(l, &sorted).map(|v| v.into_iter().map(|x| int(sign) * x).collect::<Vec<_>>());
            let agree = match (&oracle, &expect) {
                (Some(a), Some(b)) => a == b,
                (Some(a), None) | (None, Some(a)) => a.iter().all(Ring::is_zero),
                (None, None) => true,
            };
            if !agree {
                out.mismatches.push(t);
            }
            let mut k = 0;
            loop {
                if k == n {
                    break 'tuples;
                }
                idx[k] += 1;
                if idx[k] < basis.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_signs() {
        // swapping two degree-zero elements is odd, two degree-one even
        assert_eq!(koszul(&[1], &[0], &[(0, 0), (0, 1)]), -1);
        assert_eq!(koszul(&[1], &[0], &[(1, 0), (1, 1)]), 1);
        assert_eq!(koszul(&[0], &[1], &[(0, 0), (1, 0)]), 1);
    }

    #[test]
    fn unary_relation_is_trivial() {
        let l = random_structure(2, 2, 1);
        let u = Unshuffle::new(&l);
        assert!(u.relation(&[(1, 0)]).is_none());
        assert!(u.relation(&[(0, 0)]).is_none());
    }

    #[test]
    fn matches_specialized_relations() {
        for seed in 0..3 {
            let l = random_structure(3, 2, seed);
            let c = compare(&l);
            assert!(c.mismatches.is_empty(), "{:?}", &c.mismatches[..c.mismatches.len().min(5)]);
        }
    }
}
