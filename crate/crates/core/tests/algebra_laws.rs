use lie2::alternating::AlternatingMap;
use lie2::ce::{ce_differential, solve_coboundary, trivial_action};
use lie2::catalog;
use lie2::scalar::{int, Scalar};
use lie2::{LieAlgebra, Ring};
use proptest::prelude::*;

fn small_cochain(arity: usize, n: usize, m: usize, seed: &[i64]) -> AlternatingMap {
    let mut k = 0;
    AlternatingMap::from_fn(arity, n, m, |_| {
        (0..m)
            .map(|_| {
                k += 1;
                int(seed[k % seed.len()])
            })
            .collect()
    })
}

#[test]
fn catalog_passes_jacobi() {
    for name in ["abelian:1", "abelian:4", "so3", "sl2", "heis3", "gl:2", "gl:3", "so3+sl2"] {
        let g = catalog::by_name(name).unwrap();
        assert!(g.check_antisymmetry().is_empty(), "{name}");
        assert!(g.check_jacobi().is_empty(), "{name}");
    }
}

#[test]
fn hand_listed_relations_are_lie_algebras() {
    // [e1,e2] = e3, [e1,e3] = e2 closes up.
    let ok = LieAlgebra::from_brackets(
        vec!["e1".into(), "e2".into(), "e3".into()],
        &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(1, int(1))])],
    )
    .unwrap();
    assert!(ok.check_jacobi().is_empty());
    let bad = LieAlgebra::from_brackets(
        vec!["e1".into(), "e2".into(), "e3".into()],
        &[(0, 1, vec![(2, int(1))]), (1, 2, vec![(1, int(1))])],
    )
    .unwrap();
    assert_eq!(bad.check_jacobi(), vec![(0, 1, 2, 2)]);
}

#[test]
fn adjoint_is_a_morphism() {
    for name in catalog::STANDARD {
        let g = catalog::by_name(name).unwrap();
        let ad = g.adjoint();
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let lhs = g.ad_vector(&g.bracket_basis(i, j));
                assert_eq!(lhs, ad[i].commutator(&ad[j]), "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn killing_form_is_invariant() {
    for name in catalog::STANDARD {
        let g = catalog::by_name(name).unwrap();
        let k = g.killing_form();
        assert_eq!(k, k.transpose());
        let n = g.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let bxy = g.bracket_basis(x, y);
                    let bxz = g.bracket_basis(x, z);
                    let mut s = Scalar::zero();
                    for m in 0..n {
                        s += bxy[m].clone() * k[(m, z)].clone() + bxz[m].clone() * k[(y, m)].clone();
                    }
                    assert!(s.is_zero(), "{name} ({x},{y},{z})");
                }
            }
        }
    }
}

#[test]
fn zero_cochain_differential_is_the_action() {
    let g = catalog::sl2();
    let co = g.coadjoint();
    let mut v = AlternatingMap::zero(0, 3, 3);
    v.set(&[], vec![int(2), int(-1), int(1)]).unwrap();
    let dv = ce_differential(&g, &co, &v).unwrap();
    for i in 0..3 {
        assert_eq!(dv.eval(&[i]), co[i].apply(&[int(2), int(-1), int(1)]));
    }
}

#[test]
fn differential_rejects_mismatched_shapes() {
    let g = catalog::so3();
    let phi = AlternatingMap::zero(1, 2, 3);
    assert!(ce_differential(&g, &g.adjoint(), &phi).is_err());
    let phi = AlternatingMap::zero(1, 3, 2);
    assert!(ce_differential(&g, &g.adjoint(), &phi).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes(arity in 1usize..=2, coeffs in prop::collection::vec(-3i64..=3, 1..30),
                          which in 0usize..4) {
        let (g, action) = match which {
            0 => { let g = catalog::so3(); let a = g.coadjoint(); (g, a) }
            1 => { let g = catalog::sl2(); let a = g.adjoint(); (g, a) }
            2 => { let g = catalog::heis3(); let a = g.coadjoint(); (g, a) }
            _ => { let g = catalog::gl(2); let a = trivial_action(&g, 2); (g, a) }
        };
        let m = action[0].rows();
        let phi = small_cochain(arity, g.dim(), m, &coeffs);
        let d1 = ce_differential(&g, &action, &phi).unwrap();
        let d2 = ce_differential(&g, &action, &d1).unwrap();
        prop_assert!(d2.is_zero());
    }

    #[test]
    fn coboundaries_are_solved(coeffs in prop::collection::vec(-3i64..=3, 1..20)) {
        let g = catalog::so3();
        let co = g.coadjoint();
        let phi = small_cochain(1, 3, 3, &coeffs);
        let target = ce_differential(&g, &co, &phi).unwrap();
        let sol = solve_coboundary(&g, &co, &target).unwrap().unwrap();
        prop_assert_eq!(ce_differential(&g, &co, &sol).unwrap(), target);
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(x in prop::collection::vec(-4i64..=4, 3),
                                             y in prop::collection::vec(-4i64..=4, 3)) {
        let g = catalog::sl2();
        let x: Vec<Scalar> = x.into_iter().map(int).collect();
        let y: Vec<Scalar> = y.into_iter().map(int).collect();
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| (a.clone() + b.clone()).is_zero()));
        let mut expect = vec![Scalar::zero(); 3];
        for i in 0..3 {
            for j in 0..3 {
                for (k, e) in expect.iter_mut().enumerate() {
                    *e += x[i].clone() * y[j].clone() * g.constant(i, j, k).clone();
                }
            }
        }
        prop_assert_eq!(xy, expect);
    }
}
