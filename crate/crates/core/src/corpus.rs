//! A built-in corpus of groups spanning every constructor, used by the
//! property suites and the acceptance tests.

use std::sync::Arc;

use crate::extensions::{build_extension, ExtensionDatum};
use crate::group::{direct_product, semidirect_product, Group, DEFAULT_ORDER_CAP};
use crate::morphisms::GroupMap;

/// Builds the corpus. Deterministic: same list, same tables, every run.
pub fn builtin() -> Vec<Arc<Group>> {
    let cap = DEFAULT_ORDER_CAP;
    let mut out: Vec<Arc<Group>> = Vec::new();

    for n in [1usize, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24, 30] {
        out.push(Arc::new(Group::cyclic(n, cap).unwrap()));
    }
    for n in 1..=10usize {
        out.push(Arc::new(Group::dihedral(n, cap).unwrap()));
    }
    for m in 2..=6usize {
        out.push(Arc::new(Group::quaternion(m, cap).unwrap()));
    }

    // permutation groups: S_3, A_4, S_4, A_5, S_5, GA(1,5), Z_7 : Z_3
    let perms: [(usize, Vec<Vec<usize>>); 7] = [
        (3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
        (4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        (4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
        (5, vec![vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]]),
        (5, vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]]),
        (5, vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]]),
        (7, vec![vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]]),
    ];
    for (deg, gens) in perms {
        out.push(Arc::new(Group::permutation(deg, &gens, cap).unwrap()));
    }

    // direct products
    let z2 = Group::cyclic(2, cap).unwrap();
    let z3 = Group::cyclic(3, cap).unwrap();
    let z4 = Group::cyclic(4, cap).unwrap();
    let z6 = Group::cyclic(6, cap).unwrap();
    let v4 = direct_product(&z2, &z2, cap).unwrap().group;
    out.push(Arc::clone(&v4));
    out.push(direct_product(&z2, &z4, cap).unwrap().group);
    out.push(direct_product(&v4, &z2, cap).unwrap().group);
    out.push(direct_product(&z3, &z3, cap).unwrap().group);
    out.push(direct_product(&z6, &z2, cap).unwrap().group);
    let d6 = Group::dihedral(3, cap).unwrap();
    out.push(direct_product(&d6, &z2, cap).unwrap().group);
    let a4 = Group::permutation(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], cap).unwrap();
    out.push(direct_product(&a4, &z2, cap).unwrap().group);
    let q8 = Group::quaternion(2, cap).unwrap();
    out.push(direct_product(&q8, &z2, cap).unwrap().group);

    // semidirect products
    let id3: Vec<usize> = (0..3).collect();
    let inv3 = vec![0usize, 2, 1];
    out.push(semidirect_product(&z3, &z2, &[id3, inv3], cap).unwrap().group);
    let z5 = Group::cyclic(5, cap).unwrap();
    let doubling: Vec<Vec<usize>> = (0..4usize)
        .map(|h| {
            let mult = (0..h).fold(1usize, |acc, _| acc * 2 % 5);
            (0..5).map(|x| x * mult % 5).collect()
        })
        .collect();
    out.push(semidirect_product(&z5, &z4, &doubling, cap).unwrap().group);
    let z7 = Group::cyclic(7, cap).unwrap();
    let squaring: Vec<Vec<usize>> = (0..3usize)
        .map(|h| {
            let mult = (0..h).fold(1usize, |acc, _| acc * 2 % 7);
            (0..7).map(|x| x * mult % 7).collect()
        })
        .collect();
    out.push(semidirect_product(&z7, &z3, &squaring, cap).unwrap().group);
    let id4: Vec<usize> = (0..4).collect();
    let inv4 = vec![0usize, 3, 2, 1];
    out.push(
        semidirect_product(&z4, &z4, &[id4.clone(), inv4.clone(), id4, inv4], cap).unwrap().group,
    );

    // extensions: Q_8, the modular and semidihedral groups of order 16,
    // D_16, Z_16
    let z4a = Arc::new(Group::cyclic(4, cap).unwrap());
    let inv = GroupMap::new(Arc::clone(&z4a), Arc::clone(&z4a), vec![0, 3, 2, 1]).unwrap();
    out.push(build_extension(&ExtensionDatum::new(inv, 2).unwrap(), cap).unwrap().group);
    let z8 = Arc::new(Group::cyclic(8, cap).unwrap());
    for (mult, c) in [(5usize, 0usize), (3, 0), (7, 0), (1, 1)] {
        let phi = GroupMap::new(
            Arc::clone(&z8),
            Arc::clone(&z8),
            (0..8).map(|x| mult * x % 8).collect(),
        )
        .unwrap();
        out.push(build_extension(&ExtensionDatum::new(phi, c).unwrap(), cap).unwrap().group);
    }

    // unit groups
    out.push(Arc::new(Group::units_mod(15, cap).unwrap()));
    out.push(Arc::new(Group::units_mod(16, cap).unwrap()));

    out
}
