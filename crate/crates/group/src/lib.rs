//! Representations up to homotopy of simply connected nilpotent Lie groups,
//! the semidirect-product 2-group they define, the associated group
//! 3-cocycle, and the passage between group and algebra cocycles.

pub mod cocycle;
pub mod differentiate;
pub mod error;
pub mod integrate;
pub mod jet;
pub mod model;
pub mod polymat;
pub mod rep;
pub mod sample;
pub mod twogroup;

pub use cocycle::{check_group_3cocycle, exactness_transfer, f2_tilde, ExactnessTransfer};
pub use differentiate::{differentiate_3cocycle, Derivative, DiffMode, FloatCochain};
pub use error::{GroupError, Result};
pub use integrate::{integrate_nilpotent, symbolic_fbar_defect};
pub use jet::Jet;
pub use model::GroupModel;
pub use polymat::PolyMatrix;
pub use rep::{check_group_rep, check_group_rep_on, GroupRep};
pub use sample::{SampleConfig, Sampler};
pub use twogroup::{check_two_group, two_group, Morphism, Object, TwoGroup};
