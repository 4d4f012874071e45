//! Built-in Lie algebras, addressable by name: `abelian:n`, `so3`, `sl2`,
//! `heis3`, `fil4`, `gl:n`, and `+`-separated direct sums of these.

use crate::error::{AlgebraError, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::int;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian_on((1..=n).map(|i| format!("e{i}")).collect())
        .expect("abelian algebra needs n >= 1")
}

/// `[e₁,e₂] = e₃` and cyclic.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        labels(&["e1", "e2", "e3"]),
        &[
            (0, 1, vec![(2, int(1))]),
            (1, 2, vec![(0, int(1))]),
            (2, 0, vec![(1, int(1))]),
        ],
    )
    .unwrap()
}

/// Basis `{h, e, f}`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        labels(&["h", "e", "f"]),
        &[
            (0, 1, vec![(1, int(2))]),
            (0, 2, vec![(2, int(-2))]),
            (1, 2, vec![(0, int(1))]),
        ],
    )
    .unwrap()
}

/// `[x, y] = z`.
pub fn heis3() -> LieAlgebra {
    LieAlgebra::from_brackets(labels(&["x", "y", "z"]), &[(0, 1, vec![(2, int(1))])]).unwrap()
}

/// Four-dimensional filiform algebra of class 3: `[e₁,e₂] = e₃`,
/// `[e₁,e₃] = e₄`.
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::from_brackets(
        labels(&["e1", "e2", "e3", "e4"]),
        &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(3, int(1))])],
    )
    .unwrap()
}

/// Elementary matrix `E_ij` in `gl(n)`.
pub fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = int(1);
    m
}

/// `gl(n)` with basis `E_ij` in row-major order.
pub fn gl(n: usize) -> LieAlgebra {
    let mut names = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("E{}{}", i + 1, j + 1));
            basis.push(elementary(n, i, j));
        }
    }
    LieAlgebra::from_matrix_basis(names, &basis).expect("gl(n) basis")
}

/// Looks up a catalog name.
pub fn by_name(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if name.contains('+') {
        let mut parts = name.split('+');
        let first = by_name(parts.next().unwrap())?;
        return parts.try_fold(first, |acc, p| Ok(acc.direct_sum(&by_name(p)?)));
    }
    let unknown = || AlgebraError::UnknownAlgebra(name.to_string());
    let size = |rest: &str| -> Result<usize> {
        match rest.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(unknown()),
        }
    };
    match name {
        "so3" => Ok(so3()),
        "sl2" => Ok(sl2()),
        "heis3" => Ok(heis3()),
        "fil4" => Ok(filiform4()),
        _ => {
            if let Some(rest) = name.strip_prefix("abelian:") {
                Ok(abelian(size(rest)?))
            } else if let Some(rest) = name.strip_prefix("gl:") {
                let n = size(rest)?;
                if n > 3 {
                    return Err(unknown());
                }
                Ok(gl(n))
            } else {
                Err(unknown())
            }
        }
    }
}

/// Names used for catalog-wide sweeps.
pub const STANDARD: &[&str] = &["abelian:1", "abelian:3", "so3", "sl2", "heis3", "fil4", "gl:2", "gl:3"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_catalog_is_valid() {
        for name in STANDARD {
            let g = by_name(name).unwrap();
            assert!(g.validate().is_ok(), "{name}");
        }
    }

    #[test]
    fn names() {
        assert_eq!(by_name("gl:3").unwrap().dim(), 9);
        assert_eq!(by_name("so3+heis3").unwrap().dim(), 6);
        assert!(by_name("so3+heis3").unwrap().validate().is_ok());
        assert!(matches!(by_name("e8"), Err(AlgebraError::UnknownAlgebra(_))));
        assert!(by_name("abelian:0").is_err());
        assert!(by_name("gl:4").is_err());
    }
}
