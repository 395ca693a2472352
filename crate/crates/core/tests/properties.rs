//! Property suites over the built-in corpus: group laws, Lagrange,
//! invariant-vector isomorphism invariance, and the equivalence-relation
//! laws of the isomorphism tester.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use o3sym_core::corpus;
use o3sym_core::group::{Group, DEFAULT_ORDER_CAP};
use o3sym_core::invariants::group_invariants;
use o3sym_core::morphisms::{
    dihedral_coord_compose, dihedral_coord_to_map, is_isomorphic, DihedralAutCoord,
};
use o3sym_core::subgroup::subgroup_closure;

#[test]
fn corpus_spans_at_least_forty_groups() {
    assert!(corpus::builtin().len() >= 40);
}

#[test]
fn group_axioms_exhaustive_up_to_64() {
    for g in corpus::builtin() {
        if g.order() <= 64 {
            g.verify_axioms().unwrap_or_else(|e| panic!("{} failed axioms: {e}", g.label()));
        }
    }
}

#[test]
fn identity_and_inverse_laws_hold_everywhere() {
    for g in corpus::builtin() {
        for x in g.elements() {
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
        }
    }
}

#[test]
fn lagrange_and_closure_idempotence() {
    for g in corpus::builtin() {
        let seeds: Vec<Vec<usize>> = vec![
            vec![],
            vec![g.order() - 1],
            vec![1 % g.order()],
            vec![1 % g.order(), (g.order() / 2).max(1) % g.order()],
            g.generators().to_vec(),
        ];
        for seed in seeds {
            let h = subgroup_closure(&g, &seed);
            assert_eq!(g.order() % h.len(), 0, "Lagrange fails in {}", g.label());
            h.verify().unwrap();
            let again = subgroup_closure(&g, h.elements());
            assert_eq!(h.elements(), again.elements(), "closure not idempotent in {}", g.label());
        }
    }
}

#[test]
fn invariant_vector_is_isomorphism_invariant() {
    let corpus = corpus::builtin();
    let mut witnessed = 0;
    for a in &corpus {
        for b in &corpus {
            if Arc::ptr_eq(a, b) || a.order() != b.order() {
                continue;
            }
            if let Some(w) = is_isomorphic(a, b) {
                assert_eq!(group_invariants(a), group_invariants(b));
                w.verify().unwrap();
                witnessed += 1;
            }
        }
    }
    // the corpus deliberately contains isomorphic presentations
    assert!(witnessed > 0);
}

#[test]
fn isomorphism_is_an_equivalence_relation() {
    let corpus = corpus::builtin();
    // reflexive
    for g in &corpus {
        let w = is_isomorphic(g, g).expect("reflexivity");
        w.verify().unwrap();
    }
    // symmetric: witnesses invert to witnesses
    for a in &corpus {
        for b in &corpus {
            if let Some(w) = is_isomorphic(a, b) {
                let back = w.inverse().unwrap();
                back.verify().unwrap();
                assert!(is_isomorphic(b, a).is_some());
            }
        }
    }
    // transitive on equal-invariant buckets
    let mut buckets: BTreeMap<Vec<u8>, Vec<Arc<Group>>> = BTreeMap::new();
    for g in &corpus {
        let key = serde_json::to_vec(group_invariants(g)).unwrap();
        buckets.entry(key).or_default().push(Arc::clone(g));
    }
    for (_, members) in buckets {
        for a in &members {
            for b in &members {
                for c in &members {
                    if is_isomorphic(a, b).is_some() && is_isomorphic(b, c).is_some() {
                        assert!(is_isomorphic(a, c).is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn inner_automorphism_order_law() {
    // |Inn(G)| = |G| / |Z(G)| on the whole corpus
    for g in corpus::builtin() {
        let aut = o3sym_core::morphisms::automorphism_group(&g);
        let (inn, out_order) = o3sym_core::morphisms::inner_automorphism_group(&aut);
        let center = group_invariants(&g).center_order;
        assert_eq!(inn.len(), g.order() / center, "Inn law fails for {}", g.label());
        assert_eq!(inn.len() * out_order, aut.len());
        inn.verify().unwrap();
    }
}

#[test]
fn embedding_witnesses_are_isomorphic_to_the_probe() {
    let q16 = Arc::new(Group::quaternion(4, DEFAULT_ORDER_CAP).unwrap());
    let q8 = Arc::new(Group::quaternion(2, DEFAULT_ORDER_CAP).unwrap());
    let e = o3sym_core::morphisms::find_embedding(&q16, &q8).unwrap();
    e.witness.verify().unwrap();
    assert!(is_isomorphic(&Arc::new(e.witness.as_group()), &q8).is_some());

    let s4 = Arc::new(
        Group::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], DEFAULT_ORDER_CAP).unwrap(),
    );
    let d8 = Arc::new(Group::dihedral(4, DEFAULT_ORDER_CAP).unwrap());
    let e = o3sym_core::morphisms::find_embedding(&s4, &d8).unwrap();
    assert!(is_isomorphic(&Arc::new(e.witness.as_group()), &d8).is_some());
}

#[test]
fn conjugacy_class_sizes_divide_group_order() {
    for g in corpus::builtin() {
        let v = group_invariants(&g);
        for &cs in &v.class_sizes {
            assert_eq!(g.order() % cs, 0);
        }
        assert_eq!(v.class_sizes.iter().filter(|&&cs| cs == 1).count(), v.center_order);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_on_random_triples(idx in 0usize..52, a in 0usize..360, b in 0usize..360, c in 0usize..360) {
        let corpus = corpus::builtin();
        let g = &corpus[idx % corpus.len()];
        let (a, b, c) = (a % g.order(), b % g.order(), c % g.order());
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }

    #[test]
    fn closure_of_random_seed_is_a_subgroup(idx in 0usize..52, s1 in 0usize..360, s2 in 0usize..360) {
        let corpus = corpus::builtin();
        let g = &corpus[idx % corpus.len()];
        let h = subgroup_closure(g, &[s1 % g.order(), s2 % g.order()]);
        prop_assert!(h.verify().is_ok());
        prop_assert_eq!(g.order() % h.len(), 0);
    }

    #[test]
    fn dihedral_coordinate_law_matches_table_composition(
        n in 3usize..=12,
        t1 in 0usize..12, s1 in 0usize..12,
        t2 in 0usize..12, s2 in 0usize..12,
    ) {
        fn gcd(a: usize, b: usize) -> usize { if b == 0 { a } else { gcd(b, a % b) } }
        let (t1, s1, t2, s2) = (t1 % n, s1 % n, t2 % n, s2 % n);
        prop_assume!(gcd(s1, n) == 1 && gcd(s2, n) == 1);
        let d = Arc::new(Group::dihedral(n, DEFAULT_ORDER_CAP).unwrap());
        let f = dihedral_coord_to_map(&d, DihedralAutCoord { t: t1, s: s1 }).unwrap();
        let h = dihedral_coord_to_map(&d, DihedralAutCoord { t: t2, s: s2 }).unwrap();
        let composed = f.compose(&h);
        let law = dihedral_coord_compose(n, DihedralAutCoord { t: t1, s: s1 }, DihedralAutCoord { t: t2, s: s2 });
        let expect = dihedral_coord_to_map(&d, law).unwrap();
        prop_assert_eq!(composed.images(), expect.images());
    }
}
