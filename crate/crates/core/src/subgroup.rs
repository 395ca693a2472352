//! Subgroups of a carried group, as sorted element-index lists.

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::Group;

/// A subgroup of a parent [`Group`], stored as a sorted list of element
/// indices. Always contains the identity (index 0), so index 0 of the
/// re-indexed group produced by [`SubgroupHandle::as_group`] is again the
/// identity.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: Arc<Group>,
    elements: Vec<usize>,
}

impl std::fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupHandle(|H|={} in {})", self.elements.len(), self.parent.label())
    }
}

impl SubgroupHandle {
    pub(crate) fn new_unchecked(parent: Arc<Group>, elements: Vec<usize>) -> SubgroupHandle {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        SubgroupHandle { parent, elements }
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.elements.len()
    }

    /// Checks the subgroup laws: identity membership, closure under
    /// products and inverses, and Lagrange divisibility.
    pub fn verify(&self) -> Result<()> {
        let g = self.parent.as_ref();
        if !self.contains(0) {
            return Err(GroupError::Contract("subgroup misses the identity".into()));
        }
        if g.order() % self.elements.len() != 0 {
            return Err(GroupError::Contract("subgroup size does not divide group order".into()));
        }
        for &a in &self.elements {
            if !self.contains(g.inv(a)) {
                return Err(GroupError::Contract(format!("subgroup not closed under inverse of {a}")));
            }
            for &b in &self.elements {
                if !self.contains(g.mul(a, b)) {
                    return Err(GroupError::Contract(format!(
                        "subgroup not closed under product {a}*{b}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        let g = self.parent.as_ref();
        g.elements().all(|x| self.elements.iter().all(|&h| self.contains(g.conj(x, h))))
    }

    /// Materializes the subgroup as a standalone [`Group`] on re-indexed
    /// elements; position `i` of the new group corresponds to
    /// `self.elements()[i]` in the parent.
    pub fn as_group(&self) -> Group {
        let g = self.parent.as_ref();
        let size = self.elements.len();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &e) in self.elements.iter().enumerate() {
            pos[e] = i;
        }
        let mut table = Vec::with_capacity(size * size);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(pos[g.mul(a, b)]);
            }
        }
        Group::from_flat_table(format!("Sub({},#{size})", g.label()), size, table, vec![])
            .expect("subgroup table is a group table")
    }
}

/// Smallest subgroup of the parent containing `seed`, computed by
/// work-queue closure under products and inverses.
pub fn subgroup_closure(parent: &Arc<Group>, seed: &[usize]) -> SubgroupHandle {
    SubgroupHandle::new_unchecked(Arc::clone(parent), closure_elements(parent, seed))
}

/// Sorted element list of the subgroup generated by `seed`.
pub(crate) fn closure_elements(g: &Group, seed: &[usize]) -> Vec<usize> {
    let mut member = vec![false; g.order()];
    let mut list: Vec<usize> = Vec::new();
    member[0] = true;
    list.push(0);
    for &s in seed {
        if !member[s] {
            member[s] = true;
            list.push(s);
        }
    }
    let mut qi = 0;
    while qi < list.len() {
        let q = list[qi];
        qi += 1;
        let iq = g.inv(q);
        if !member[iq] {
            member[iq] = true;
            list.push(iq);
        }
        // pair (u, v) is covered when the later-added of the two is
        // processed, since the earlier one is already in the list
        for di in 0..list.len() {
            let d = list[di];
            for p in [g.mul(q, d), g.mul(d, q)] {
                if !member[p] {
                    member[p] = true;
                    list.push(p);
                }
            }
        }
    }
    list.sort_unstable();
    list
}

/// Normalizer N_G(H) = { g : g H g^-1 = H }.
pub fn normalizer(h: &SubgroupHandle) -> SubgroupHandle {
    let g = h.parent().as_ref();
    let elems: Vec<usize> = g
        .elements()
        .filter(|&x| h.elements().iter().all(|&m| h.contains(g.conj(x, m))))
        .collect();
    SubgroupHandle::new_unchecked(Arc::clone(h.parent()), elems)
}

/// Derived subgroup [G, G]: closure of all commutators.
pub fn derived_subgroup(parent: &Arc<Group>) -> SubgroupHandle {
    let g = parent.as_ref();
    let mut seed = Vec::new();
    let mut seen = vec![false; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if !seen[c] {
                seen[c] = true;
                seed.push(c);
            }
        }
    }
    subgroup_closure(parent, &seed)
}

/// Center Z(G) = { g : gx = xg for all x }.
pub fn center(parent: &Arc<Group>) -> SubgroupHandle {
    let g = parent.as_ref();
    let elems: Vec<usize> =
        g.elements().filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z))).collect();
    SubgroupHandle::new_unchecked(Arc::clone(parent), elems)
}

/// A Sylow 2-subgroup, grown by normalizer extension: starting from the
/// trivial subgroup, repeatedly pick the smallest element x of the
/// normalizer with x outside P and x^2 in P, and extend to P ∪ Px. Each
/// step doubles |P|, so the full 2-part is always reached.
pub fn sylow_2(parent: &Arc<Group>) -> Result<SubgroupHandle> {
    let g = parent.as_ref();
    let mut two_part = 1usize;
    let mut rest = g.order();
    while rest % 2 == 0 {
        rest /= 2;
        two_part *= 2;
    }
    let mut p = subgroup_closure(parent, &[]);
    while p.len() < two_part {
        let norm = normalizer(&p);
        let x = norm
            .elements()
            .iter()
            .copied()
            .find(|&x| !p.contains(x) && p.contains(g.mul(x, x)))
            .ok_or_else(|| {
                GroupError::Engine("sylow-2 growth found no extending element".into())
            })?;
        let mut elems = p.elements().to_vec();
        elems.extend(p.elements().iter().map(|&h| g.mul(h, x)));
        elems.sort_unstable();
        p = SubgroupHandle::new_unchecked(Arc::clone(parent), elems);
    }
    Ok(p)
}

/// Quotient G/N for a normal subgroup N, together with the coset map
/// sending each parent element to its coset index. Coset 0 is N itself.
pub fn quotient_by_normal(n: &SubgroupHandle) -> Result<(Group, Vec<usize>)> {
    if !n.is_normal() {
        return Err(GroupError::Contract("quotient requires a normal subgroup".into()));
    }
    let g = n.parent().as_ref();
    let (coset_of, reps) = coset_partition(g, n);
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let q = Group::from_flat_table(format!("{}/N", g.label()), k, table, vec![])?;
    Ok((q, coset_of))
}

/// Partition of the parent into left cosets of H; cosets are numbered in
/// ascending order of their smallest element, so coset 0 contains the
/// identity. Returns (element -> coset id, coset id -> representative).
fn coset_partition(g: &Group, h: &SubgroupHandle) -> (Vec<usize>, Vec<usize>) {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            let id = reps.len();
            reps.push(x);
            for &m in h.elements() {
                coset_of[g.mul(x, m)] = id;
            }
        }
    }
    (coset_of, reps)
}

/// All subgroups of index 2, computed through the abelianization: every
/// index-2 subgroup contains all squares and commutators, so they are the
/// preimages of the hyperplanes of the elementary abelian 2-group
/// G / ⟨squares, commutators⟩.
pub fn index_two_subgroups(parent: &Arc<Group>) -> Vec<SubgroupHandle> {
    let g = parent.as_ref();
    if g.order() % 2 != 0 {
        return vec![];
    }
    let mut seed = Vec::new();
    let mut seen = vec![false; g.order()];
    for a in g.elements() {
        let sq = g.mul(a, a);
        if !seen[sq] {
            seen[sq] = true;
            seed.push(sq);
        }
        for b in g.elements() {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if !seen[c] {
                seen[c] = true;
                seed.push(c);
            }
        }
    }
    let k = subgroup_closure(parent, &seed);
    let idx = g.order() / k.len();
    if idx < 2 {
        return vec![];
    }
    let (coset_of, reps) = coset_partition(g, &k);
    // Assign F_2 coordinates to cosets by growing a basis; idx = 2^r here
    // because the quotient is elementary abelian.
    let mut coords: Vec<Option<u32>> = vec![None; idx];
    coords[0] = Some(0);
    let mut rank = 0u32;
    for c in 1..idx {
        if coords[c].is_some() {
            continue;
        }
        let bit = 1u32 << rank;
        rank += 1;
        let known: Vec<usize> = (0..idx).filter(|&d| coords[d].is_some()).collect();
        for d in known {
            let e = coset_of[g.mul(reps[d], reps[c])];
            coords[e] = Some(coords[d].unwrap() ^ bit);
        }
    }
    let coords: Vec<u32> = coords.into_iter().map(|c| c.expect("cosets span")).collect();
    let mut out = Vec::new();
    for functional in 1u32..(1 << rank) {
        let elems: Vec<usize> = g
            .elements()
            .filter(|&x| (functional & coords[coset_of[x]]).count_ones() % 2 == 0)
            .collect();
        out.push(SubgroupHandle::new_unchecked(Arc::clone(parent), elems));
    }
    out
}
