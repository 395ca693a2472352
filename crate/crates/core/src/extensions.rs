//! Extensions of a finite group N by Z_2, enumerated through transversal
//! data.
//!
//! Picking any coset representative b outside N in an extension G gives a
//! pair (φ, c) with φ = conjugation by b and c = b²; conversely every such
//! pair with φ(c) = c and φ² = conjugation-by-c builds an extension on
//! pairs (x, ε):
//!
//! ```text
//! (x,0)(y,ε) = (xy, ε)
//! (x,1)(y,0) = (x·φ(y), 1)
//! (x,1)(y,1) = (x·φ(y)·c, 0)
//! ```
//!
//! so enumerating the data enumerates every extension at least once.
//! Extensions are classified up to pair-isomorphism: a group isomorphism
//! carrying one embedded copy of N onto the other.

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{check_cap, Group};
use crate::invariants::group_invariants;
use crate::morphisms::{automorphism_group, pair_isomorphic, GroupMap};
use crate::subgroup::SubgroupHandle;

/// Transversal datum (φ, c) for an extension of `base` by Z_2.
#[derive(Clone)]
pub struct ExtensionDatum {
    base: Arc<Group>,
    phi: GroupMap,
    c: usize,
}

impl std::fmt::Debug for ExtensionDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtensionDatum({}, c={})", self.base.label(), self.c)
    }
}

impl ExtensionDatum {
    pub fn new(phi: GroupMap, c: usize) -> Result<ExtensionDatum> {
        let base = Arc::clone(phi.domain());
        let datum = ExtensionDatum { base, phi, c };
        datum.verify()?;
        Ok(datum)
    }

    fn new_unchecked(base: Arc<Group>, phi: GroupMap, c: usize) -> ExtensionDatum {
        ExtensionDatum { base, phi, c }
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn phi(&self) -> &GroupMap {
        &self.phi
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Checks the datum laws: φ is an automorphism of the base fixing c,
    /// and φ² is conjugation by c.
    pub fn verify(&self) -> Result<()> {
        self.phi.verify()?;
        if !Arc::ptr_eq(self.phi.domain(), &self.base)
            || !Arc::ptr_eq(self.phi.codomain(), &self.base)
        {
            return Err(GroupError::Contract("phi must be an automorphism of the base".into()));
        }
        if !self.phi.is_bijective() {
            return Err(GroupError::Contract("phi must be bijective".into()));
        }
        if self.phi.apply(self.c) != self.c {
            return Err(GroupError::Contract("phi must fix c".into()));
        }
        let g = self.base.as_ref();
        for x in g.elements() {
            if self.phi.apply(self.phi.apply(x)) != g.conj(self.c, x) {
                return Err(GroupError::Contract(
                    "phi squared must equal conjugation by c".into(),
                ));
            }
        }
        Ok(())
    }
}

/// A built extension with its distinguished embedded copy of N.
pub struct ExtensionPair {
    pub group: Arc<Group>,
    pub n_embed: SubgroupHandle,
    pub datum: ExtensionDatum,
    pub split: bool,
}

/// All transversal data (φ, c) over N: φ ∈ Aut(N) with φ(c) = c and
/// φ² = conjugation by c, in (automorphism index, c) order.
pub fn enumerate_extension_data(n: &Arc<Group>, cap: usize) -> Result<Vec<ExtensionDatum>> {
    check_cap(2 * n.order(), cap)?;
    let aut = automorphism_group(n);
    let mut data = Vec::new();
    for phi in aut.elements() {
        let phi_sq: Vec<usize> = n.elements().map(|x| phi.apply(phi.apply(x))).collect();
        for c in n.elements() {
            if phi.apply(c) != c {
                continue;
            }
            if n.elements().all(|x| phi_sq[x] == n.conj(c, x)) {
                data.push(ExtensionDatum::new_unchecked(Arc::clone(n), phi.clone(), c));
            }
        }
    }
    Ok(data)
}

/// Builds the extension group of a datum on pairs (x, ε) indexed as
/// `ε·|N| + x`, re-verifying associativity on the built table.
pub fn build_extension(datum: &ExtensionDatum, cap: usize) -> Result<ExtensionPair> {
    let n = datum.base.as_ref();
    let size = n.order();
    let order = 2 * size;
    check_cap(order, cap)?;
    let phi = &datum.phi;
    let c = datum.c;
    let mut table = vec![0usize; order * order];
    for x in 0..size {
        for y in 0..size {
            table[x * order + y] = n.mul(x, y);
            table[x * order + (size + y)] = size + n.mul(x, y);
            table[(size + x) * order + y] = size + n.mul(x, phi.apply(y));
            table[(size + x) * order + (size + y)] = n.mul(n.mul(x, phi.apply(y)), c);
        }
    }
    let mut generators: Vec<usize> = n.generators().to_vec();
    generators.push(size);
    let group = Group::from_flat_table(
        format!("Ext({}; c={})", n.label(), c),
        order,
        table,
        generators,
    )?;
    group.verify_axioms().map_err(|_| {
        GroupError::Contract("extension table is not associative; datum invariants violated".into())
    })?;
    let group = Arc::new(group);
    let n_embed = SubgroupHandle::new_unchecked(Arc::clone(&group), (0..size).collect());
    let split = compute_split(&group, &n_embed);
    Ok(ExtensionPair { group, n_embed, datum: datum.clone(), split })
}

/// An extension splits exactly when some element of order <= 2 lies
/// outside the embedded copy of N.
pub fn is_split(pair: &ExtensionPair) -> bool {
    compute_split(&pair.group, &pair.n_embed)
}

fn compute_split(group: &Arc<Group>, n_embed: &SubgroupHandle) -> bool {
    group.elements().any(|x| !n_embed.contains(x) && group.mul(x, x) == 0)
}

/// One pair-isomorphism class of extensions: the representative pair plus
/// the data that collapsed onto it.
pub struct ExtensionClass {
    pub pair: ExtensionPair,
    /// Non-representative data whose built pairs are pair-isomorphic to
    /// the representative.
    pub collapsed: Vec<ExtensionDatum>,
}

/// Builds every extension of N by Z_2 and deduplicates up to
/// pair-isomorphism. Classes are sorted by invariant vector with the
/// first-found representative kept, so the output order is deterministic.
pub fn enumerate_extensions(n: &Arc<Group>, cap: usize) -> Result<Vec<ExtensionClass>> {
    let data = enumerate_extension_data(n, cap)?;
    let mut classes: Vec<ExtensionClass> = Vec::new();
    for datum in data {
        let pair = build_extension(&datum, cap)?;
        let existing = classes.iter_mut().find(|cl| {
            pair_isomorphic(&cl.pair.group, &cl.pair.n_embed, &pair.group, &pair.n_embed).is_some()
        });
        match existing {
            Some(cl) => cl.collapsed.push(datum),
            None => classes.push(ExtensionClass { pair, collapsed: Vec::new() }),
        }
    }
    classes.sort_by(|a, b| {
        let va = group_invariants(&a.pair.group);
        let vb = group_invariants(&b.pair.group);
        // abelian classes first, then the full invariant order; stable
        // sort keeps first-found representatives on ties
        vb.abelian.cmp(&va.abelian).then_with(|| va.cmp(vb))
    });
    Ok(classes)
}

/// Serialization of one extension class:
/// `{"datum": {"phi": [...], "c": n}, "group": <dump>, "split": bool}`.
pub fn extension_class_json(pair: &ExtensionPair) -> String {
    let value = serde_json::json!({
        "datum": { "phi": pair.datum.phi.images(), "c": pair.datum.c },
        "group": pair.group.dump_value(),
        "split": pair.split,
    });
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, DEFAULT_ORDER_CAP};
    use crate::invariants::element_order;
    use crate::morphisms::is_isomorphic;
    use crate::subgroup::quotient_by_normal;

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    fn cyclic(n: usize) -> Arc<Group> {
        arc(Group::cyclic(n, DEFAULT_ORDER_CAP).unwrap())
    }

    #[test]
    fn data_over_z3() {
        // (id, 0), (id, 1), (id, 2), (inversion, 0)
        let data = enumerate_extension_data(&cyclic(3), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(data.len(), 4);
        for d in &data {
            d.verify().unwrap();
        }
    }

    #[test]
    fn data_over_trivial_group_builds_z2() {
        let data = enumerate_extension_data(&cyclic(1), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(data.len(), 1);
        let pair = build_extension(&data[0], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(pair.group.order(), 2);
        assert!(pair.split);
    }

    #[test]
    fn data_over_v4() {
        // 4 data for the identity, 2 for each of the 3 involutive swaps
        let z2 = Group::cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let v4 = direct_product(&z2, &z2, DEFAULT_ORDER_CAP).unwrap().group;
        let data = enumerate_extension_data(&v4, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(data.len(), 10);
    }

    #[test]
    fn build_dihedral_from_inversion() {
        let z3 = cyclic(3);
        let inv = GroupMap::new(Arc::clone(&z3), Arc::clone(&z3), vec![0, 2, 1]).unwrap();
        let datum = ExtensionDatum::new(inv, 0).unwrap();
        let pair = build_extension(&datum, DEFAULT_ORDER_CAP).unwrap();
        let d6 = arc(Group::dihedral(3, DEFAULT_ORDER_CAP).unwrap());
        assert!(is_isomorphic(&pair.group, &d6).is_some());
        assert!(pair.split);
    }

    #[test]
    fn build_z6_from_nontrivial_c() {
        let z3 = cyclic(3);
        let id = GroupMap::identity(&z3);
        let datum = ExtensionDatum::new(id, 1).unwrap();
        let pair = build_extension(&datum, DEFAULT_ORDER_CAP).unwrap();
        // the outside representative (0,1) has order 6
        assert_eq!(element_order(&pair.group, 3), 6);
        assert!(is_isomorphic(&pair.group, &cyclic(6)).is_some());
    }

    #[test]
    fn build_q8_from_z4_inversion_with_central_c() {
        let z4 = cyclic(4);
        let inv = GroupMap::new(Arc::clone(&z4), Arc::clone(&z4), vec![0, 3, 2, 1]).unwrap();
        let datum = ExtensionDatum::new(inv, 2).unwrap();
        let pair = build_extension(&datum, DEFAULT_ORDER_CAP).unwrap();
        let involutions =
            pair.group.elements().filter(|&x| x != 0 && pair.group.mul(x, x) == 0).count();
        assert_eq!(involutions, 1);
        let q8 = arc(Group::quaternion(2, DEFAULT_ORDER_CAP).unwrap());
        assert!(is_isomorphic(&pair.group, &q8).is_some());
        assert!(!pair.split);
        assert!(!is_split(&pair));
    }

    #[test]
    fn split_detection_for_d8_over_z4() {
        let z4 = cyclic(4);
        let inv = GroupMap::new(Arc::clone(&z4), Arc::clone(&z4), vec![0, 3, 2, 1]).unwrap();
        let datum = ExtensionDatum::new(inv, 0).unwrap();
        let pair = build_extension(&datum, DEFAULT_ORDER_CAP).unwrap();
        assert!(pair.split);
        let d8 = arc(Group::dihedral(4, DEFAULT_ORDER_CAP).unwrap());
        assert!(is_isomorphic(&pair.group, &d8).is_some());
    }

    #[test]
    fn embedded_copy_is_normal_of_index_two() {
        for datum in enumerate_extension_data(&cyclic(6), DEFAULT_ORDER_CAP).unwrap() {
            let pair = build_extension(&datum, DEFAULT_ORDER_CAP).unwrap();
            pair.n_embed.verify().unwrap();
            assert!(pair.n_embed.is_normal());
            assert_eq!(pair.n_embed.index(), 2);
            let (q, _) = quotient_by_normal(&pair.n_embed).unwrap();
            assert_eq!(q.order(), 2);
        }
    }

    #[test]
    fn classes_over_z5() {
        let classes = enumerate_extensions(&cyclic(5), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(classes.len(), 2);
        let z10 = cyclic(10);
        let d10 = arc(Group::dihedral(5, DEFAULT_ORDER_CAP).unwrap());
        assert!(is_isomorphic(&classes[0].pair.group, &z10).is_some());
        assert!(is_isomorphic(&classes[1].pair.group, &d10).is_some());
    }

    #[test]
    fn classes_over_z4() {
        let classes = enumerate_extensions(&cyclic(4), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(classes.len(), 4);
        let z2 = Group::cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let z4 = Group::cyclic(4, DEFAULT_ORDER_CAP).unwrap();
        let targets: Vec<Arc<Group>> = vec![
            cyclic(8),
            direct_product(&z4, &z2, DEFAULT_ORDER_CAP).unwrap().group,
            arc(Group::dihedral(4, DEFAULT_ORDER_CAP).unwrap()),
            arc(Group::quaternion(2, DEFAULT_ORDER_CAP).unwrap()),
        ];
        for target in &targets {
            assert_eq!(
                classes
                    .iter()
                    .filter(|cl| is_isomorphic(&cl.pair.group, target).is_some())
                    .count(),
                1,
                "expected exactly one class isomorphic to {}",
                target.label()
            );
        }
    }

    #[test]
    fn dedupe_is_a_true_quotient() {
        let n = cyclic(8);
        let classes = enumerate_extensions(&n, DEFAULT_ORDER_CAP).unwrap();
        // retained representatives are pairwise non-pair-isomorphic
        for i in 0..classes.len() {
            for j in 0..i {
                assert!(pair_isomorphic(
                    &classes[i].pair.group,
                    &classes[i].pair.n_embed,
                    &classes[j].pair.group,
                    &classes[j].pair.n_embed,
                )
                .is_none());
            }
        }
        // every collapsed datum rebuilds to a pair isomorphic to its rep
        for cl in &classes {
            for datum in &cl.collapsed {
                let rebuilt = build_extension(datum, DEFAULT_ORDER_CAP).unwrap();
                assert!(pair_isomorphic(
                    &cl.pair.group,
                    &cl.pair.n_embed,
                    &rebuilt.group,
                    &rebuilt.n_embed,
                )
                .is_some());
            }
        }
    }

    #[test]
    fn centerless_class_count_matches_outer_involutions() {
        // for centerless N, pair classes correspond to order <= 2 elements
        // of Out(N)
        for n in [3usize, 5, 7, 9] {
            let d = arc(Group::dihedral(n, DEFAULT_ORDER_CAP).unwrap());
            let classes = enumerate_extensions(&d, DEFAULT_ORDER_CAP).unwrap();
            let aut = automorphism_group(&d);
            let (inn, _) = crate::morphisms::inner_automorphism_group(&aut);
            let (out, _) = quotient_by_normal(&inn).unwrap();
            let involutions_or_id =
                out.elements().filter(|&x| element_order(&out, x) <= 2).count();
            assert_eq!(classes.len(), involutions_or_id, "n = {n}");
        }
    }

    #[test]
    fn class_json_shape() {
        let classes = enumerate_extensions(&cyclic(2), DEFAULT_ORDER_CAP).unwrap();
        let s = extension_class_json(&classes[0].pair);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!(v["datum"]["phi"].is_array());
        assert!(v["datum"]["c"].is_number());
        assert!(v["group"]["table"].is_array());
        assert!(v["split"].is_boolean());
    }
}
