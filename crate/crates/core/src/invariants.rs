//! Isomorphism-screening fingerprints computed by table scans.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::group::Group;
use crate::subgroup::closure_elements;

/// A vector of cheap isomorphism invariants. Two isomorphic groups always
/// have equal vectors, so comparing vectors screens out most failed
/// isomorphism tests before any backtracking runs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantVector {
    pub order: usize,
    pub abelian: bool,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    /// conjugacy class sizes, sorted ascending
    pub class_sizes: Vec<usize>,
    pub derived_order: usize,
}

/// Order of the element `x` in `g`.
pub fn element_order(g: &Group, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Conjugacy classes as sorted element lists, ordered by smallest member.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|t| g.conj(t, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Size of the conjugacy class of each element.
pub fn class_size_by_element(g: &Group) -> Vec<usize> {
    let mut sizes = vec![0; g.order()];
    for class in conjugacy_classes(g) {
        for &x in &class {
            sizes[x] = class.len();
        }
    }
    sizes
}

/// The invariant vector of `g`, computed once and cached on the group.
pub fn group_invariants(g: &Group) -> &InvariantVector {
    g.invariants_cell().get_or_init(|| compute(g))
}

fn compute(g: &Group) -> InvariantVector {
    let order = g.order();
    let abelian = (0..order).all(|a| (0..a).all(|b| g.mul(a, b) == g.mul(b, a)));
    let mut order_histogram = BTreeMap::new();
    for x in g.elements() {
        *order_histogram.entry(element_order(g, x)).or_insert(0usize) += 1;
    }
    let center_order =
        g.elements().filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z))).count();
    let mut class_sizes: Vec<usize> = conjugacy_classes(g).iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    let mut commutators = Vec::new();
    let mut seen = vec![false; order];
    for a in g.elements() {
        for b in g.elements() {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if !seen[c] {
                seen[c] = true;
                commutators.push(c);
            }
        }
    }
    let derived_order = closure_elements(g, &commutators).len();
    InvariantVector { order, abelian, order_histogram, center_order, class_sizes, derived_order }
}
