use courant::calculus::d_form;
use courant::sample::{random_form, random_poly, random_section, random_vf};
use courant::{courant_bracket, d_r, lie_derivative, pairing, t3, vf_bracket, OneForm, Section, VectorField};
use lie2::poly::Poly;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(L_X ξ)ⱼ = Σᵢ Xᵢ ∂ᵢξⱼ + ξᵢ ∂ⱼXᵢ`.
fn lie_derivative_coordinates(x: &VectorField, xi: &OneForm) -> OneForm {
    let n = x.n_vars();
    let comps = (0..n)
        .map(|j| {
            let mut acc = Poly::zero(n);
            for i in 0..n {
                acc = acc + x.component(i) * &xi.component(j).derivative(i);
                acc = acc + xi.component(i) * &x.component(i).derivative(j);
            }
            acc
        })
        .collect();
    OneForm::new(n, comps).unwrap()
}

fn commutator_on_forms(x: &VectorField, y: &VectorField, xi: &OneForm) -> OneForm {
    let a = lie_derivative(x, &lie_derivative(y, xi).unwrap()).unwrap();
    let b = lie_derivative(y, &lie_derivative(x, xi).unwrap()).unwrap();
    a.sub(&b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&mut rng, n, 4);
        prop_assert!(d_form(&d_r(&f)).is_zero());
    }

    #[test]
    fn cartan_matches_coordinates(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_vf(&mut rng, 3, 2);
        let xi = random_form(&mut rng, 3, 2);
        prop_assert_eq!(lie_derivative(&x, &xi).unwrap(), lie_derivative_coordinates(&x, &xi));
    }

    #[test]
    fn lie_derivative_is_a_representation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_vf(&mut rng, 2, 2);
        let y = random_vf(&mut rng, 2, 2);
        let xi = random_form(&mut rng, 2, 2);
        let lhs = lie_derivative(&vf_bracket(&x, &y).unwrap(), &xi).unwrap();
        prop_assert_eq!(lhs, commutator_on_forms(&x, &y, &xi));
    }

    #[test]
    fn vf_bracket_jacobi(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_vf(&mut rng, 3, 2), random_vf(&mut rng, 3, 2), random_vf(&mut rng, 3, 2));
        let br = |a: &VectorField, b: &VectorField| vf_bracket(a, b).unwrap();
        let s = br(&br(&x, &y), &z).add(&br(&br(&y, &z), &x)).unwrap().add(&br(&br(&z, &x), &y)).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn courant_bracket_is_antisymmetric_and_t3_alternates(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e1 = random_section(&mut rng, 2, 2);
        let e2 = random_section(&mut rng, 2, 2);
        let e3 = random_section(&mut rng, 2, 2);
        let s = courant_bracket(&e1, &e2).unwrap().add(&courant_bracket(&e2, &e1).unwrap()).unwrap();
        prop_assert!(s.is_zero());
        prop_assert!(courant_bracket(&e1, &e1).unwrap().is_zero());
        let t = t3(&e1, &e2, &e3).unwrap();
        prop_assert_eq!(&t, &t3(&e2, &e3, &e1).unwrap());
        prop_assert_eq!(-t, t3(&e1, &e3, &e2).unwrap());
        prop_assert!(t3(&e1, &e2, &e1).unwrap().is_zero());
    }

    #[test]
    fn jacobiator_is_exact(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = [random_section(&mut rng, 3, 2), random_section(&mut rng, 3, 2), random_section(&mut rng, 3, 2)];
        let br = |a: &Section, b: &Section| courant_bracket(a, b).unwrap();
        let mut jac = Section::zero(3);
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            jac = jac.add(&br(&br(&e[a], &e[b]), &e[c])).unwrap();
        }
        let dt = Section::from_form(d_r(&t3(&e[0], &e[1], &e[2]).unwrap()));
        prop_assert_eq!(jac, dt);
    }
}

#[test]
fn pure_forms_have_vanishing_t3_and_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let forms: Vec<Section> = (0..3).map(|_| Section::from_form(random_form(&mut rng, 3, 3))).collect();
    assert!(t3(&forms[0], &forms[1], &forms[2]).unwrap().is_zero());
    assert!(pairing(&forms[0], &forms[1]).unwrap().is_zero());
    assert!(courant_bracket(&forms[0], &forms[1]).unwrap().is_zero());
}

#[test]
fn pairing_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = random_section(&mut rng, 3, 2);
    let b = random_section(&mut rng, 3, 2);
    assert_eq!(pairing(&a, &b).unwrap(), pairing(&b, &a).unwrap());
    let x = Section::from_vf(VectorField::coordinate(3, 2));
    let dz = Section::from_form(OneForm::coordinate(3, 2));
    assert_eq!(pairing(&x, &dz).unwrap(), Poly::constant(3, lie2::scalar::q(1, 2)));
    assert_eq!(pairing(&dz, &dz).unwrap(), Poly::zero(3));
}

#[test]
fn sampled_degrees_are_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let p = random_poly(&mut rng, 3, 3);
        assert!(p.degree() <= 3);
    }
    assert_eq!(courant::sample::monomials(3, 3).len(), 20);
}
