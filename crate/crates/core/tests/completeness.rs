//! Completeness of the extension enumeration against the brute-force
//! small-groups oracle.
//!
//! For every group N of order at most 6, the pair classes produced by
//! `enumerate_extensions(N)` must agree, up to pair-isomorphism, with the
//! pairs (H, S) where H ranges over ALL groups of order 2|N| (enumerated
//! independently by Cayley-table search) and S over the index-2 subgroups
//! of H isomorphic to N.

use std::sync::Arc;

use o3sym_core::bruteforce::enumerate_groups_of_order;
use o3sym_core::extensions::enumerate_extensions;
use o3sym_core::group::{Group, DEFAULT_ORDER_CAP};
use o3sym_core::morphisms::{is_isomorphic, pair_isomorphic};
use o3sym_core::subgroup::{index_two_subgroups, SubgroupHandle};

struct OraclePair {
    group: Arc<Group>,
    n_copy: SubgroupHandle,
}

/// All pairs (H, S) with |H| = 2|N|, S index-2 and isomorphic to N,
/// deduplicated up to pair-isomorphism.
fn oracle_pairs(n: &Arc<Group>) -> Vec<OraclePair> {
    let mut pairs: Vec<OraclePair> = Vec::new();
    for h in enumerate_groups_of_order(2 * n.order()).unwrap() {
        for s in index_two_subgroups(&h) {
            if is_isomorphic(&Arc::new(s.as_group()), n).is_none() {
                continue;
            }
            let dup = pairs.iter().any(|p| {
                pair_isomorphic(&p.group, &p.n_copy, &h, &s).is_some()
            });
            if !dup {
                pairs.push(OraclePair { group: Arc::clone(&h), n_copy: s });
            }
        }
    }
    pairs
}

#[test]
fn extension_enumeration_matches_brute_force_oracle() {
    // every N of order <= 6
    let mut bases: Vec<Arc<Group>> = Vec::new();
    for k in 1..=6usize {
        bases.extend(enumerate_groups_of_order(k).unwrap());
    }
    assert_eq!(bases.len(), 8, "orders 1..6 carry 8 isomorphism classes");

    for n in &bases {
        let classes = enumerate_extensions(n, DEFAULT_ORDER_CAP).unwrap();
        let oracle = oracle_pairs(n);
        assert_eq!(
            classes.len(),
            oracle.len(),
            "class count mismatch over N = {} (order {})",
            n.label(),
            n.order()
        );
        // every engine class matches exactly one oracle pair
        for cl in &classes {
            let hits = oracle
                .iter()
                .filter(|p| {
                    pair_isomorphic(&p.group, &p.n_copy, &cl.pair.group, &cl.pair.n_embed)
                        .is_some()
                })
                .count();
            assert_eq!(hits, 1, "engine class unmatched over N = {}", n.label());
        }
        // and conversely
        for p in &oracle {
            let hits = classes
                .iter()
                .filter(|cl| {
                    pair_isomorphic(&p.group, &p.n_copy, &cl.pair.group, &cl.pair.n_embed)
                        .is_some()
                })
                .count();
            assert_eq!(hits, 1, "oracle pair unmatched over N = {}", n.label());
        }
    }
}

#[test]
fn z8_extension_classes_match_order_sixteen_oracle() {
    // the order-16 groups possessing a cyclic index-2 subgroup
    let z8 = Arc::new(Group::cyclic(8, DEFAULT_ORDER_CAP).unwrap());
    let classes = enumerate_extensions(&z8, DEFAULT_ORDER_CAP).unwrap();
    let oracle = oracle_pairs(&z8);
    assert_eq!(classes.len(), oracle.len());
    assert_eq!(classes.len(), 6);
    for cl in &classes {
        assert_eq!(
            oracle
                .iter()
                .filter(|p| pair_isomorphic(&p.group, &p.n_copy, &cl.pair.group, &cl.pair.n_embed)
                    .is_some())
                .count(),
            1
        );
    }
}

#[test]
fn z4_extension_classes_match_oracle_spot_values() {
    // order-8 groups possessing a normal index-2 copy of Z_4: all but
    // the elementary abelian one
    let z4 = Arc::new(Group::cyclic(4, DEFAULT_ORDER_CAP).unwrap());
    let classes = enumerate_extensions(&z4, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(classes.len(), 4);
    let all8 = enumerate_groups_of_order(8).unwrap();
    assert_eq!(all8.len(), 5);
    let with_z4 = all8
        .iter()
        .filter(|h| {
            index_two_subgroups(h)
                .iter()
                .any(|s| is_isomorphic(&Arc::new(s.as_group()), &z4).is_some())
        })
        .count();
    assert_eq!(with_z4, 4);
}
