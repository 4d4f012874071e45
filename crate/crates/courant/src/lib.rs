//! The standard Courant algebroid `TM ⊕ T*M` on polynomial sections over
//! ℝⁿ, exactly.

pub mod calculus;
pub mod checks;
pub mod model;
pub mod sample;

pub use calculus::{courant_bracket, d_r, lie_derivative, pairing, t3, vf_bracket, OneForm, Section, VectorField};
pub use checks::{check_courant_linfty, check_courant_rep, check_id_complex_rep, CourantConfig};
pub use model::{CourantModel, Mutation};
