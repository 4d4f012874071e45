#![allow(dead_code)]

use group2::{integrate_nilpotent, GroupModel, GroupRep, SampleConfig};
use lie2::catalog;
use lie2::rep::string_datum;
use lie2::{AlternatingMap, LieAlgebra, RepUpToHomotopy, TwoTermComplex};

pub fn heisenberg() -> GroupRep {
    integrate_nilpotent("H3", &string_datum(&catalog::heis3())).unwrap()
}

/// Coadjoint on `g*`, trivial on `ℝ`, `ν = 0`, `d = 0`.
pub fn strict_coadjoint(g: &LieAlgebra, name: &str) -> GroupRep {
    let mut r = string_datum(g);
    r.nu = AlternatingMap::zero(2, g.dim(), g.dim());
    GroupRep::strict(GroupModel::nilpotent(name, g).unwrap(), &r).unwrap()
}

/// Adjoint on both ends of `g --Id--> g`.
pub fn strict_identity_complex(g: &LieAlgebra, name: &str) -> GroupRep {
    let n = g.dim();
    let r = RepUpToHomotopy::new(
        g.clone(),
        TwoTermComplex::identity(n),
        g.adjoint(),
        g.adjoint(),
        AlternatingMap::zero(2, n, n * n),
    )
    .unwrap();
    GroupRep::strict(GroupModel::nilpotent(name, g).unwrap(), &r).unwrap()
}

pub fn config(samples: usize, seed: u64) -> SampleConfig {
    SampleConfig {
        samples,
        seed,
        ..SampleConfig::default()
    }
}
