//! Exact computations with Lie algebras, Chevalley–Eilenberg cochains,
//! two-term representations up to homotopy and two-term L∞ algebras.

pub mod alternating;
pub mod catalog;
pub mod ce;
pub mod document;
pub mod error;
pub mod lie;
pub mod linfty;
pub mod matrix;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod poly;
pub mod quadratic;
pub mod rep;
pub mod report;
pub mod scalar;

pub use alternating::AlternatingMap;
pub use error::{AlgebraError, Result};
pub use lie::{check_lie_algebra, LieAlgebra};
pub use linfty::{check_linfty, semidirect, TwoTermLInfinity};
pub use matrix::{LinearMap, Matrix};
pub use poly::Poly;
pub use rep::{check_rep, RepUpToHomotopy, TwoTermComplex};
pub use report::{Check, Exec, Mode, Report};
pub use scalar::{Measured, Ring, Scalar};
