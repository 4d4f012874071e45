use lie2::oracle::{compare, random_structure, Unshuffle};
use lie2::rep::string_datum;
use lie2::scalar::int;
use lie2::{catalog, semidirect, Ring};

#[test]
fn specialized_relations_match_unshuffle_oracle() {
    for l0 in 1..=3 {
        for l1 in 1..=3 {
            for seed in 0..2 {
                let l = random_structure(l0, l1, seed * 31 + (l0 * 3 + l1) as u64);
                let c = compare(&l);
                assert!(c.mismatches.is_empty(), "({l0},{l1}) {:?}", c.mismatches.first());
            }
        }
    }
    // four degree-zero inputs exercise the coherence relation
    let l = random_structure(4, 2, 99);
    assert!(compare(&l).mismatches.is_empty());
}

#[test]
fn minus_variant_of_degree_one_relation_disagrees() {
    let mut disagreements = 0;
    for seed in 0..5 {
        let l = random_structure(2, 2, seed);
        let u = Unshuffle::new(&l);
        for m in 0..2 {
            for n in 0..2 {
                let oracle = u.relation(&[(1, m), (1, n)]).map(|x| x.1).unwrap_or_default();
                let unit = |k: usize| (0..2).map(|i| int((i == k) as i64)).collect::<Vec<_>>();
                let a = l.rho(&l.d.apply(&unit(m))).apply(&unit(n));
                let b = l.rho(&l.d.apply(&unit(n))).apply(&unit(m));
                let minus: Vec<_> = a.iter().zip(&b).map(|(x, y)| x.clone() - y.clone()).collect();
                let proportional = [1i64, -1].iter().any(|&s| {
                    oracle.iter().zip(&minus).all(|(o, v)| (o.clone() - int(s) * v.clone()).is_zero())
                });
                if !proportional {
                    disagreements += 1;
                }
            }
        }
    }
    assert!(disagreements > 0);
}

#[test]
fn valid_structures_satisfy_every_oracle_relation() {
    let l = semidirect(&string_datum(&catalog::so3())).unwrap();
    let u = Unshuffle::new(&l);
    for x in 0..6 {
        for y in 0..6 {
            for z in 0..6 {
                for w in 0..6 {
                    if let Some((_, v)) = u.relation(&[(0, x), (0, y), (0, z), (0, w)]) {
                        assert!(v.iter().all(Ring::is_zero));
                    }
                }
            }
        }
    }
}
