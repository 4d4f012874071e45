//! Alternating multilinear maps `Λᵖ(ℚⁿ) → ℚᵐ`, stored on strictly increasing
//! index tuples.

use std::collections::BTreeMap;


use crate::error::{AlgebraError, Result};
use crate::scalar::{Ring, Scalar};

/// All strictly increasing `p`-tuples drawn from `0..n`, in lexicographic
/// order.
pub fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    rec(0, n, p, &mut cur, &mut out);
    out
}

/// Sorts `tuple` and returns the sign of the sorting permutation, or `None`
/// if an index repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut t = tuple.to_vec();
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((t, sign))
    }
}

/// Sign of a permutation given as images of `0..n`.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    sort_with_sign(perm).map_or(0, |(_, s)| s)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingMap {
    arity: usize,
    source_dim: usize,
    target_dim: usize,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl AlternatingMap {
    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        AlternatingMap {
            arity,
            source_dim,
            target_dim,
            values: BTreeMap::new(),
        }
    }

    /// Builds a map from its values on increasing tuples.
    pub fn from_fn(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let mut m = Self::zero(arity, source_dim, target_dim);
        for t in combinations(source_dim, arity) {
            let v = f(&t);
            m.set(&t, v).expect("from_fn produced wrong target length");
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Sets the value on `tuple` (any order); the stored canonical value picks
    /// up the sorting sign. Repeated indices are rejected.
    pub fn set(&mut self, tuple: &[usize], value: Vec<Scalar>) -> Result<()> {
        self.check_tuple(tuple)?;
        if value.len() != self.target_dim {
            return Err(AlgebraError::dim("alternating value", self.target_dim, value.len()));
        }
        let (t, sign) = sort_with_sign(tuple).ok_or_else(|| {
            AlgebraError::Parse(format!("repeated index in alternating tuple {tuple:?}"))
        })?;
        let v: Vec<Scalar> = if sign < 0 {
            value.into_iter().map(|x| -x).collect()
        } else {
            value
        };
        if v.iter().all(Ring::is_zero) {
            self.values.remove(&t);
        } else {
            self.values.insert(t, v);
        }
        Ok(())
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(AlgebraError::dim("alternating arity", self.arity, tuple.len()));
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.source_dim) {
            return Err(AlgebraError::dim("alternating index", self.source_dim, bad + 1));
        }
        Ok(())
    }

    /// Value on an arbitrary basis tuple: signed extension, zero on repeats.
    pub fn eval(&self, tuple: &[usize]) -> Vec<Scalar> {
        debug_assert!(self.check_tuple(tuple).is_ok());
        match sort_with_sign(tuple) {
            None => vec![Scalar::zero(); self.target_dim],
            Some((t, sign)) => match self.values.get(&t) {
                None => vec![Scalar::zero(); self.target_dim],
                Some(v) if sign > 0 => v.clone(),
                Some(v) => v.iter().map(|x| -x.clone()).collect(),
            },
        }
    }

    /// Single target coordinate of [`eval`](Self::eval).
    pub fn eval_component(&self, tuple: &[usize], k: usize) -> Scalar {
        match sort_with_sign(tuple) {
            None => Scalar::zero(),
            Some((t, sign)) => match self.values.get(&t) {
                None => Scalar::zero(),
                Some(v) if sign > 0 => v[k].clone(),
                Some(v) => -v[k].clone(),
            },
        }
    }

    /// Multilinear extension to arbitrary vectors.
    pub fn eval_vectors(&self, vectors: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        if vectors.len() != self.arity {
            return Err(AlgebraError::dim("alternating arity", self.arity, vectors.len()));
        }
        for v in vectors {
            if v.len() != self.source_dim {
                return Err(AlgebraError::dim("alternating argument", self.source_dim, v.len()));
            }
        }
        let perms = permutations(self.arity);
        let mut out = vec![Scalar::zero(); self.target_dim];
        for (t, val) in &self.values {
            // Determinant of the minor picked out by `t`.
            let mut minor = Scalar::zero();
            for p in &perms {
                let mut term = crate::scalar::int(permutation_sign(p) as i64);
                for (slot, &perm_slot) in p.iter().enumerate() {
                    term *= vectors[slot][t[perm_slot]].clone();
                    if Ring::is_zero(&term) {
                        break;
                    }
                }
                minor += term;
            }
            if !Ring::is_zero(&minor) {
                for (o, x) in out.iter_mut().zip(val) {
                    *o += minor.clone() * x.clone();
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries on increasing tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Scalar>)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.arity, self.source_dim, self.target_dim)
            != (other.arity, other.source_dim, other.target_dim)
        {
            return Err(AlgebraError::Parse(format!(
                "alternating maps of different shapes: ({},{},{}) vs ({},{},{})",
                self.arity, self.source_dim, self.target_dim, other.arity, other.source_dim,
                other.target_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (t, v) in &other.values {
            let cur = out.eval(t);
            let sum = cur.into_iter().zip(v).map(|(a, b)| a + b).collect();
            out.set(t, sum)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&crate::scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.arity, self.source_dim, self.target_dim);
        if Ring::is_zero(s) {
            return out;
        }
        for (t, v) in &self.values {
            out.values.insert(t.clone(), v.iter().map(|x| x.clone() * s.clone()).collect());
        }
        out
    }

    /// Number of coordinates in the space of such maps.
    pub fn space_dim(arity: usize, source_dim: usize, target_dim: usize) -> usize {
        combinations(source_dim, arity).len() * target_dim
    }

    /// Flattened coordinates: increasing tuples in lexicographic order, target
    /// index fastest.
    pub fn to_coords(&self) -> Vec<Scalar> {
        combinations(self.source_dim, self.arity)
            .iter()
            .flat_map(|t| self.eval(t))
            .collect()
    }

    /// Inverse of [`to_coords`](Self::to_coords).
    pub fn from_coords(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        coords: &[Scalar],
    ) -> Result<Self> {
        let combos = combinations(source_dim, arity);
        if coords.len() != combos.len() * target_dim {
            return Err(AlgebraError::dim("cochain coordinates", combos.len() * target_dim, coords.len()));
        }
        let mut m = Self::zero(arity, source_dim, target_dim);
        for (idx, t) in combos.iter().enumerate() {
            m.set(t, coords[idx * target_dim..(idx + 1) * target_dim].to_vec())?;
        }
        Ok(m)
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> Scalar {
        self.values
            .values()
            .flatten()
            .map(crate::scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(4, 3)[0], vec![0, 1, 2]);
    }

    #[test]
    fn signed_extension() {
        let mut m = AlternatingMap::zero(3, 4, 1);
        m.set(&[2, 0, 1], vec![int(5)]).unwrap();
        assert_eq!(m.eval(&[0, 1, 2]), vec![int(5)]);
        assert_eq!(m.eval(&[1, 0, 2]), vec![int(-5)]);
        assert_eq!(m.eval(&[1, 1, 2]), vec![int(0)]);
        assert!(m.set(&[1, 1, 2], vec![int(1)]).is_err());
    }

    #[test]
    fn multilinear_matches_basis() {
        let mut m = AlternatingMap::zero(2, 3, 1);
        m.set(&[0, 1], vec![int(1)]).unwrap();
        m.set(&[1, 2], vec![int(3)]).unwrap();
        let x = [int(1), int(2), int(0)];
        let y = [int(0), int(1), int(1)];
        // x∧y = 1·e0∧e1 + 1·e0∧e2 + 2·e1∧e2
        assert_eq!(m.eval_vectors(&[&x, &y]).unwrap(), vec![int(7)]);
    }

    #[test]
    fn coords_round_trip() {
        let m = AlternatingMap::from_fn(2, 3, 2, |t| vec![int(t[0] as i64), int(t[1] as i64)]);
        let back = AlternatingMap::from_coords(2, 3, 2, &m.to_coords()).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn permutation_list() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        let signs: i32 = ps.iter().map(|p| permutation_sign(p)).sum();
        assert_eq!(signs, 0);
    }
}
