//! JSON documents for algebras, pairings, representations and 2-term L∞
//! algebras. Rationals are strings `"p/q"`; indices are 0-based.
//!
//! A bracket entry `{i, j, coeffs}` sets `c[i][j][·]` exactly. If the pair
//! `(j, i)` is not listed, it is filled in by antisymmetry.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alternating::{combinations, AlternatingMap};
use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::linfty::TwoTermLInfinity;
use crate::matrix::Matrix;
use crate::rep::{RepUpToHomotopy, TwoTermComplex};
use crate::scalar::{format_scalar, parse_scalar, Ring, Scalar};

type MatrixDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub v1: usize,
    pub v0: usize,
    pub d: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NuEntry {
    pub i: usize,
    pub j: usize,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TernaryEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinftyDoc {
    pub l0_dim: usize,
    pub l1_dim: usize,
    pub d: MatrixDoc,
    pub l2_00: Vec<BracketEntry>,
    pub l2_01: Vec<MatrixDoc>,
    pub l3: Vec<TernaryEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu0: Option<Vec<MatrixDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<Vec<MatrixDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<NuEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linfty: Option<LinftyDoc>,
}

fn matrix_to_doc(m: &Matrix) -> MatrixDoc {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

fn matrix_from_doc(doc: &MatrixDoc, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    if doc.len() != rows {
        return Err(AlgebraError::dim(what, rows, doc.len()));
    }
    let mut out = Vec::with_capacity(rows);
    for r in doc {
        if r.len() != cols {
            return Err(AlgebraError::dim(what, cols, r.len()));
        }
        out.push(r.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>()?);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Ok(Matrix::from_rows(out))
}

fn coeffs_to_doc(v: &[Scalar]) -> Vec<(usize, String)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, format_scalar(c)))
        .collect()
}

fn coeffs_from_doc(c: &[(usize, String)], len: usize, what: &str) -> Result<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(); len];
    for (k, s) in c {
        if *k >= len {
            return Err(AlgebraError::dim(what, len, k + 1));
        }
        v[*k] = parse_scalar(s)?;
    }
    Ok(v)
}

fn brackets_to_doc(dim: usize, value: impl Fn(usize, usize) -> Vec<Scalar>) -> Vec<BracketEntry> {
    let antisymmetric = (0..dim).all(|i| {
        (i..dim).all(|j| {
            value(i, j)
                .iter()
                .zip(value(j, i))
                .all(|(a, b)| (a.clone() + b).is_zero())
        })
    });
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if antisymmetric && j <= i {
                continue;
            }
            let coeffs = coeffs_to_doc(&value(i, j));
            if !coeffs.is_empty() {
                out.push(BracketEntry { i, j, coeffs });
            }
        }
    }
    out
}

/// Raw tensor from bracket entries, with antisymmetric fill for unlisted
/// partners.
fn tensor_from_doc(dim: usize, entries: &[BracketEntry], what: &str) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    let listed: BTreeSet<(usize, usize)> = entries.iter().map(|e| (e.i, e.j)).collect();
    for e in entries {
        if e.i >= dim || e.j >= dim {
            return Err(AlgebraError::dim(what, dim, e.i.max(e.j) + 1));
        }
        let v = coeffs_from_doc(&e.coeffs, dim, what)?;
        if !listed.contains(&(e.j, e.i)) {
            c[e.j][e.i] = v.iter().map(|x| -x.clone()).collect();
        }
        c[e.i][e.j] = v;
    }
    Ok(c)
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        if doc.basis.len() != doc.dim {
            return Err(AlgebraError::dim("basis labels", doc.dim, doc.basis.len()));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        Document {
            name: None,
            dim: g.dim(),
            basis: g.labels().to_vec(),
            brackets: brackets_to_doc(g.dim(), |i, j| g.bracket_basis(i, j)),
            pairing: None,
            complex: None,
            mu0: None,
            mu1: None,
            nu: None,
            linfty: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_pairing(mut self, p: &Matrix) -> Self {
        self.pairing = Some(matrix_to_doc(p));
        self
    }

    pub fn from_rep(r: &RepUpToHomotopy) -> Self {
        let mut doc = Self::from_algebra(&r.g);
        doc.complex = Some(ComplexDoc {
            v1: r.v1(),
            v0: r.v0(),
            d: matrix_to_doc(&r.complex.d),
        });
        doc.mu0 = Some(r.mu0.iter().map(matrix_to_doc).collect());
        doc.mu1 = Some(r.mu1.iter().map(matrix_to_doc).collect());
        doc.nu = Some(
            combinations(r.g.dim(), 2)
                .into_iter()
                .map(|t| (t[0], t[1], r.nu_matrix(t[0], t[1])))
                .filter(|(_, _, m)| !m.is_zero())
                .map(|(i, j, m)| NuEntry {
                    i,
                    j,
                    matrix: matrix_to_doc(&m),
                })
                .collect(),
        );
        doc
    }

    pub fn with_linfty(mut self, l: &TwoTermLInfinity) -> Self {
        let n = l.l0_dim;
        self.linfty = Some(LinftyDoc {
            l0_dim: n,
            l1_dim: l.l1_dim,
            d: matrix_to_doc(&l.d),
            l2_00: brackets_to_doc(n, |i, j| l.l2_00.eval(&[i, j])),
            l2_01: l.l2_01.iter().map(matrix_to_doc).collect(),
            l3: l
                .l3
                .entries()
                .map(|(t, v)| TernaryEntry {
                    i: t[0],
                    j: t[1],
                    k: t[2],
                    coeffs: coeffs_to_doc(v),
                })
                .collect(),
        });
        self
    }

    /// Structure constants as written, without validation.
    pub fn lie_algebra(&self) -> Result<LieAlgebra> {
        let c = tensor_from_doc(self.dim, &self.brackets, "bracket entry")?;
        LieAlgebra::from_tensor(self.basis.clone(), c)
    }

    pub fn pairing_matrix(&self) -> Result<Option<Matrix>> {
        self.pairing
            .as_ref()
            .map(|p| {
                let n = p.len();
                matrix_from_doc(p, n, n, "pairing")
            })
            .transpose()
    }

    pub fn rep(&self) -> Result<Option<RepUpToHomotopy>> {
        let Some(cx) = &self.complex else {
            return Ok(None);
        };
        let g = self.lie_algebra()?;
        let n = g.dim();
        let d = matrix_from_doc(&cx.d, cx.v0, cx.v1, "complex d")?;
        let complex = TwoTermComplex::new(cx.v1, cx.v0, d)?;
        let family = |docs: &Option<Vec<MatrixDoc>>, size: usize, what: &str| -> Result<Vec<Matrix>> {
            let docs = docs
                .as_ref()
                .ok_or_else(|| AlgebraError::Parse(format!("missing field {what}")))?;
            if docs.len() != n {
                return Err(AlgebraError::dim(what, n, docs.len()));
            }
            docs.iter().map(|m| matrix_from_doc(m, size, size, what)).collect()
        };
        let mu0 = family(&self.mu0, cx.v0, "mu0")?;
        let mu1 = family(&self.mu1, cx.v1, "mu1")?;
        let mut nu = AlternatingMap::zero(2, n, cx.v0 * cx.v1);
        for e in self.nu.iter().flatten() {
            if e.i >= n || e.j >= n {
                return Err(AlgebraError::dim("nu index", n, e.i.max(e.j) + 1));
            }
            let m = matrix_from_doc(&e.matrix, cx.v1, cx.v0, "nu matrix")?;
            nu.set(&[e.i, e.j], m.entries().to_vec())?;
        }
        RepUpToHomotopy::new(g, complex, mu0, mu1, nu).map(Some)
    }

    pub fn linfty(&self) -> Result<Option<TwoTermLInfinity>> {
        let Some(l) = &self.linfty else {
            return Ok(None);
        };
        let (n0, n1) = (l.l0_dim, l.l1_dim);
        let d = matrix_from_doc(&l.d, n0, n1, "linfty d")?;
        let tensor = tensor_from_doc(n0, &l.l2_00, "l2_00 entry")?;
        let mut l2_00 = AlternatingMap::zero(2, n0, n0);
        for t in combinations(n0, 2) {
            l2_00.set(&t, tensor[t[0]][t[1]].clone())?;
        }
        if l.l2_01.len() != n0 {
            return Err(AlgebraError::dim("l2_01 family", n0, l.l2_01.len()));
        }
        let l2_01 = l
            .l2_01
            .iter()
            .map(|m| matrix_from_doc(m, n1, n1, "l2_01"))
            .collect::<Result<Vec<_>>>()?;
        let mut l3 = AlternatingMap::zero(3, n0, n1);
        for e in &l.l3 {
            if e.i >= n0 || e.j >= n0 || e.k >= n0 {
                return Err(AlgebraError::dim("l3 index", n0, e.i.max(e.j).max(e.k) + 1));
            }
            l3.set(&[e.i, e.j, e.k], coeffs_from_doc(&e.coeffs, n1, "l3 entry")?)?;
        }
        TwoTermLInfinity::new(d, l2_00, l2_01, l3).map(Some)
    }
}
