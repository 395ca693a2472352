//! Finite groups as dense multiplication tables.
//!
//! Every group in the engine is carried by a [`Group`]: an order×order
//! Cayley table over element indices `0..order`, with element 0 fixed as
//! the identity. Constructors normalize element ordering deterministically
//! so that identical inputs always yield identical tables.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::invariants::InvariantVector;

/// Default bound on group orders; guards the quadratic tables.
pub const DEFAULT_ORDER_CAP: usize = 360;

/// Largest permutation degree accepted by [`Group::permutation`].
pub const MAX_PERMUTATION_DEGREE: usize = 8;

/// A finite group as an explicit multiplication table.
///
/// The table is row-major with the row as the left factor:
/// `mul(i, j) = i * j`. Element 0 is always the identity.
#[derive(Clone)]
pub struct Group {
    label: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    invariants: OnceLock<InvariantVector>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from explicit table rows, fully validating the group
    /// axioms (identity row/column, Latin property, exhaustive
    /// associativity, inverses).
    pub fn from_table(label: impl Into<String>, rows: &[Vec<usize>], generators: Vec<usize>) -> Result<Group> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Contract("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(GroupError::Contract("table is not square".into()));
            }
            table.extend_from_slice(row);
        }
        let g = Group::from_flat_table(label, order, table, generators)?;
        g.verify_axioms()?;
        Ok(g)
    }

    /// Internal constructor for tables that are group tables by
    /// construction. Entry ranges and the identity laws are still checked;
    /// associativity is the caller's responsibility (the public
    /// constructors all guarantee it algebraically).
    pub(crate) fn from_flat_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        generators: Vec<usize>,
    ) -> Result<Group> {
        debug_assert_eq!(table.len(), order * order);
        for &v in &table {
            if v >= order {
                return Err(GroupError::Contract(format!("table entry {v} out of range")));
            }
        }
        for i in 0..order {
            if table[i] != i || table[i * order] != i {
                return Err(GroupError::Contract("element 0 is not an identity".into()));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverses[a] = b;
                }
            }
            let inv = inverses[a];
            if inv == usize::MAX || table[inv * order + a] != 0 {
                return Err(GroupError::Contract(format!("element {a} has no two-sided inverse")));
            }
        }
        Ok(Group {
            label: label.into(),
            order,
            table,
            inverses,
            generators,
            invariants: OnceLock::new(),
        })
    }

    /// Exhaustive check of the Latin property and associativity.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.mul(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::Contract(format!("row {a} is not a permutation")));
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.mul(b, a)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::Contract(format!("column {a} is not a permutation")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::Contract(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Conjugate of `x` by `g`: `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = label.into();
        self
    }

    pub(crate) fn invariants_cell(&self) -> &OnceLock<InvariantVector> {
        &self.invariants
    }

    // -- constructors -------------------------------------------------------

    /// Cyclic group Z_n with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize, cap: usize) -> Result<Group> {
        if n == 0 {
            return Err(GroupError::Parameter("cyclic group needs n >= 1".into()));
        }
        check_cap(n, cap)?;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        let generators = if n > 1 { vec![1] } else { vec![] };
        Group::from_flat_table(format!("Z{n}"), n, table, generators)
    }

    /// Dihedral group D_{2n} of order 2n: elements `a^i` at index `i` and
    /// `a^i b` at index `n + i`, with `a^n = e`, `b^2 = e`, `b a b = a^-1`.
    pub fn dihedral(n: usize, cap: usize) -> Result<Group> {
        if n == 0 {
            return Err(GroupError::Parameter("dihedral group needs n >= 1".into()));
        }
        check_cap(2 * n, cap)?;
        let order = 2 * n;
        let mut table = vec![0usize; order * order];
        for i in 0..n {
            for j in 0..n {
                // a^i . a^j
                table[i * order + j] = (i + j) % n;
                // a^i . a^j b
                table[i * order + (n + j)] = n + (i + j) % n;
                // a^i b . a^j  =  a^(i-j) b
                table[(n + i) * order + j] = n + (n + i - j % n) % n;
                // a^i b . a^j b  =  a^(i-j)
                table[(n + i) * order + (n + j)] = (n + i - j % n) % n;
            }
        }
        let generators = if n > 1 { vec![1, n] } else { vec![n] };
        Group::from_flat_table(format!("D{order}"), order, table, generators)
    }

    /// Generalized quaternion group Q_{4m} =
    /// ⟨x, y | x^{2m} = e, y^2 = x^m, y x y^-1 = x^-1⟩, m >= 2.
    /// Elements `x^i` at index `i` (i < 2m) and `x^i y` at index `2m + i`.
    pub fn quaternion(m: usize, cap: usize) -> Result<Group> {
        if m < 2 {
            return Err(GroupError::Parameter(
                "generalized quaternion group needs m >= 2 (Q_4 is cyclic, not quaternion)".into(),
            ));
        }
        check_cap(4 * m, cap)?;
        let k = 2 * m;
        let order = 4 * m;
        let mut table = vec![0usize; order * order];
        for i in 0..k {
            for j in 0..k {
                // x^i . x^j
                table[i * order + j] = (i + j) % k;
                // x^i . x^j y
                table[i * order + (k + j)] = k + (i + j) % k;
                // x^i y . x^j  =  x^(i-j) y
                table[(k + i) * order + j] = k + (k + i - j % k) % k;
                // x^i y . x^j y  =  x^(i-j+m)
                table[(k + i) * order + (k + j)] = (k + i + m - j % k) % k;
            }
        }
        Group::from_flat_table(format!("Q{order}"), order, table, vec![1, k])
    }

    /// Closure of permutation generators on `{0..degree-1}` under
    /// composition `(p * q)(x) = p(q(x))`, converted to a Cayley table.
    /// Elements are sorted lexicographically, so the identity permutation
    /// always lands at index 0.
    pub fn permutation(degree: usize, gens: &[Vec<usize>], cap: usize) -> Result<Group> {
        if degree == 0 || degree > MAX_PERMUTATION_DEGREE {
            return Err(GroupError::Parameter(format!(
                "permutation degree must be in 1..={MAX_PERMUTATION_DEGREE}"
            )));
        }
        for g in gens {
            if g.len() != degree || !is_bijection(g, degree) {
                return Err(GroupError::Parameter(format!(
                    "generator {g:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = vec![identity];
        let mut qi = 0;
        while qi < queue.len() {
            let w = queue[qi].clone();
            qi += 1;
            for g in gens {
                // w . g, i.e. apply g first
                let prod: Vec<usize> = (0..degree).map(|x| w[g[x]]).collect();
                if !seen.contains_key(&prod) {
                    if seen.len() + 1 > cap {
                        return Err(GroupError::Capacity { requested: seen.len() + 1, cap });
                    }
                    seen.insert(prod.clone(), ());
                    queue.push(prod);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_keys().collect();
        let order = elems.len();
        let index: BTreeMap<&[usize], usize> =
            elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut table = Vec::with_capacity(order * order);
        for p in &elems {
            for q in &elems {
                let prod: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
                table.push(index[prod.as_slice()]);
            }
        }
        let generators = gens.iter().map(|g| index[g.as_slice()]).collect();
        Group::from_flat_table(
            format!("Perm(deg={degree},order={order})"),
            order,
            table,
            generators,
        )
    }

    /// Multiplicative group of units modulo n, as an abstract group on the
    /// sorted unit representatives (so 1 sits at index 0).
    pub fn units_mod(n: usize, cap: usize) -> Result<Group> {
        if n == 0 {
            return Err(GroupError::Parameter("units_mod needs n >= 1".into()));
        }
        let units: Vec<usize> = if n == 1 {
            vec![0]
        } else {
            (1..n).filter(|&u| gcd(u, n) == 1).collect()
        };
        check_cap(units.len(), cap)?;
        let order = units.len();
        let index: BTreeMap<usize, usize> = units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut table = Vec::with_capacity(order * order);
        for &a in &units {
            for &b in &units {
                table.push(if n == 1 { 0 } else { index[&(a * b % n)] });
            }
        }
        Group::from_flat_table(format!("U({n})"), order, table, vec![])
    }

    // -- dump format --------------------------------------------------------

    /// Serializes the group in the dump format used by the CLI `--dump`
    /// flag. Round-trips bit-exactly through [`Group::from_dump_json`].
    pub fn dump_json(&self) -> String {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect();
        let dump = GroupDump {
            label: self.label.clone(),
            order: self.order,
            table: rows,
            generators: self.generators.clone(),
        };
        serde_json::to_string(&dump).expect("dump serialization cannot fail")
    }

    /// The dump as a JSON value, for embedding in larger documents.
    pub fn dump_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.dump_json()).expect("dump is valid JSON")
    }

    /// Parses a dump produced by [`Group::dump_json`], re-validating the
    /// full group axioms.
    pub fn from_dump_json(s: &str) -> Result<Group> {
        let dump: GroupDump =
            serde_json::from_str(s).map_err(|e| GroupError::Contract(format!("bad dump: {e}")))?;
        if dump.table.len() != dump.order {
            return Err(GroupError::Contract("dump order does not match table".into()));
        }
        Group::from_table(dump.label, &dump.table, dump.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupDump {
    label: String,
    order: usize,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

fn is_bijection(p: &[usize], degree: usize) -> bool {
    let mut seen = vec![false; degree];
    for &v in p {
        if v >= degree || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub(crate) fn check_cap(requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(GroupError::Capacity { requested, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Direct product G × H with componentwise multiplication; pair (g, h) is
/// indexed as `g * |H| + h`.
pub struct DirectProduct {
    pub group: Arc<Group>,
    pub left: crate::subgroup::SubgroupHandle,
    pub right: crate::subgroup::SubgroupHandle,
}

pub fn direct_product(g: &Group, h: &Group, cap: usize) -> Result<DirectProduct> {
    let order = g.order() * h.order();
    check_cap(order, cap)?;
    let hn = h.order();
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (g1, h1) = (a / hn, a % hn);
        for b in 0..order {
            let (g2, h2) = (b / hn, b % hn);
            table.push(g.mul(g1, g2) * hn + h.mul(h1, h2));
        }
    }
    let mut generators: Vec<usize> = g.generators().iter().map(|&x| x * hn).collect();
    generators.extend(h.generators().iter().copied());
    let group = Arc::new(Group::from_flat_table(
        format!("{} x {}", g.label(), h.label()),
        order,
        table,
        generators,
    )?);
    let left = crate::subgroup::SubgroupHandle::new_unchecked(
        Arc::clone(&group),
        (0..g.order()).map(|x| x * hn).collect(),
    );
    let right =
        crate::subgroup::SubgroupHandle::new_unchecked(Arc::clone(&group), (0..hn).collect());
    Ok(DirectProduct { group, left, right })
}

/// Semidirect product N ⋊ H for an action of H on N by automorphisms;
/// pair (n, h) is indexed as `n * |H| + h` and multiplies as
/// `(n1, h1)(n2, h2) = (n1 · act(h1)(n2), h1 h2)`.
pub struct SemidirectProduct {
    pub group: Arc<Group>,
    pub n_embed: crate::subgroup::SubgroupHandle,
}

/// `action[h]` is the image array of the automorphism of N assigned to the
/// H-element `h`. The action is verified to be a homomorphism from H into
/// Aut(N) before the table is built.
pub fn semidirect_product(
    n: &Group,
    h: &Group,
    action: &[Vec<usize>],
    cap: usize,
) -> Result<SemidirectProduct> {
    if action.len() != h.order() {
        return Err(GroupError::Contract("action must assign a map to every H-element".into()));
    }
    for (he, images) in action.iter().enumerate() {
        if !is_automorphism(n, images) {
            return Err(GroupError::Contract(format!(
                "action of H-element {he} is not an automorphism of N"
            )));
        }
    }
    for h1 in 0..h.order() {
        for h2 in 0..h.order() {
            let composed = &action[h.mul(h1, h2)];
            for x in 0..n.order() {
                if composed[x] != action[h1][action[h2][x]] {
                    return Err(GroupError::Contract(
                        "action is not a homomorphism from H to Aut(N)".into(),
                    ));
                }
            }
        }
    }
    let order = n.order() * h.order();
    check_cap(order, cap)?;
    let hn = h.order();
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (n1, h1) = (a / hn, a % hn);
        for b in 0..order {
            let (n2, h2) = (b / hn, b % hn);
            table.push(n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2));
        }
    }
    let mut generators: Vec<usize> = n.generators().iter().map(|&x| x * hn).collect();
    generators.extend(h.generators().iter().copied());
    let group = Arc::new(Group::from_flat_table(
        format!("{} : {}", n.label(), h.label()),
        order,
        table,
        generators,
    )?);
    let n_embed = crate::subgroup::SubgroupHandle::new_unchecked(
        Arc::clone(&group),
        (0..n.order()).map(|x| x * hn).collect(),
    );
    Ok(SemidirectProduct { group, n_embed })
}

fn is_automorphism(n: &Group, images: &[usize]) -> bool {
    if images.len() != n.order() {
        return false;
    }
    if !is_bijection(images, n.order()) {
        return false;
    }
    for a in 0..n.order() {
        for b in 0..n.order() {
            if images[n.mul(a, b)] != n.mul(images[a], images[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_trivial_and_small() {
        let z1 = Group::cyclic(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(z1.order(), 1);
        let z6 = Group::cyclic(6, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(z6.mul(4, 5), 3);
        assert_eq!(z6.inv(2), 4);
        z6.verify_axioms().unwrap();
    }

    #[test]
    fn cyclic_rejects_over_cap() {
        match Group::cyclic(100, 50) {
            Err(GroupError::Capacity { requested: 100, cap: 50 }) => {}
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn dihedral_relations() {
        let d = Group::dihedral(5, DEFAULT_ORDER_CAP).unwrap();
        d.verify_axioms().unwrap();
        let (a, b) = (1, 5);
        // b a b = a^-1
        assert_eq!(d.mul(d.mul(b, a), b), d.inv(a));
        assert_eq!(d.mul(b, b), 0);
        // degenerate dihedral is Z_2
        let d2 = Group::dihedral(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(d2.order(), 2);
        assert_eq!(d2.mul(1, 1), 0);
    }

    #[test]
    fn quaternion_relations() {
        let q8 = Group::quaternion(2, DEFAULT_ORDER_CAP).unwrap();
        q8.verify_axioms().unwrap();
        let (x, y) = (1, 4);
        // y^2 = x^m
        assert_eq!(q8.mul(y, y), 2);
        // y x y^-1 = x^-1
        assert_eq!(q8.mul(q8.mul(y, x), q8.inv(y)), q8.inv(x));
        assert!(matches!(Group::quaternion(1, DEFAULT_ORDER_CAP), Err(GroupError::Parameter(_))));
    }

    #[test]
    fn dihedral_two_is_the_klein_four_group() {
        let d4 = Group::dihedral(2, DEFAULT_ORDER_CAP).unwrap();
        // direct 4-element table check: abelian with three involutions
        for a in 0..4 {
            assert_eq!(d4.mul(a, a), 0);
            for b in 0..4 {
                assert_eq!(d4.mul(a, b), d4.mul(b, a));
            }
        }
    }

    #[test]
    fn product_of_a5_with_z2() {
        let a5 = Group::permutation(
            5,
            &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]],
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        let z2 = Group::cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let p = direct_product(&a5, &z2, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group.order(), 120);
        assert_eq!(crate::invariants::group_invariants(&p.group).center_order, 2);
    }

    #[test]
    fn permutation_closures() {
        let s5 = Group::permutation(
            5,
            &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]],
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(s5.order(), 120);
        let a4 = Group::permutation(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], DEFAULT_ORDER_CAP)
            .unwrap();
        assert_eq!(a4.order(), 12);
        // affine maps x -> x+1 and x -> 2x mod 5
        let ga15 = Group::permutation(5, &[vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]], DEFAULT_ORDER_CAP)
            .unwrap();
        assert_eq!(ga15.order(), 20);
    }

    #[test]
    fn permutation_degree_cap() {
        assert!(matches!(
            Group::permutation(9, &[], DEFAULT_ORDER_CAP),
            Err(GroupError::Parameter(_))
        ));
        assert!(matches!(
            Group::permutation(3, &[vec![0, 0, 1]], DEFAULT_ORDER_CAP),
            Err(GroupError::Parameter(_))
        ));
        // closure blowing past the order cap: S_7 has order 5040
        assert!(matches!(
            Group::permutation(
                7,
                &[vec![1, 0, 2, 3, 4, 5, 6], vec![1, 2, 3, 4, 5, 6, 0]],
                DEFAULT_ORDER_CAP
            ),
            Err(GroupError::Capacity { .. })
        ));
    }

    #[test]
    fn direct_product_with_trivial_is_identity() {
        let g = Group::dihedral(3, DEFAULT_ORDER_CAP).unwrap();
        let t = Group::cyclic(1, DEFAULT_ORDER_CAP).unwrap();
        let p = direct_product(&g, &t, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.group.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.group.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn semidirect_trivial_action_is_direct_product() {
        let n = Group::cyclic(5, DEFAULT_ORDER_CAP).unwrap();
        let h = Group::cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let id: Vec<usize> = (0..5).collect();
        let sd = semidirect_product(&n, &h, &[id.clone(), id], DEFAULT_ORDER_CAP).unwrap();
        let dp = direct_product(&n, &h, DEFAULT_ORDER_CAP).unwrap();
        for a in 0..10 {
            for b in 0..10 {
                assert_eq!(sd.group.mul(a, b), dp.group.mul(a, b));
            }
        }
    }

    #[test]
    fn semidirect_rejects_non_homomorphic_action() {
        let n = Group::cyclic(5, DEFAULT_ORDER_CAP).unwrap();
        let h = Group::cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        // x -> 2x has order 4, so assigning it to the involution of Z_2
        // is not a homomorphism
        let doubling: Vec<usize> = (0..5).map(|x| 2 * x % 5).collect();
        let id: Vec<usize> = (0..5).collect();
        assert!(matches!(
            semidirect_product(&n, &h, &[id, doubling], DEFAULT_ORDER_CAP),
            Err(GroupError::Contract(_))
        ));
    }

    #[test]
    fn units_mod_basic() {
        let u12 = Group::units_mod(12, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(u12.order(), 4);
        u12.verify_axioms().unwrap();
        let u1 = Group::units_mod(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(u1.order(), 1);
    }

    #[test]
    fn dump_round_trip_is_bit_exact() {
        let g = Group::quaternion(3, DEFAULT_ORDER_CAP).unwrap();
        let s = g.dump_json();
        let back = Group::from_dump_json(&s).unwrap();
        assert_eq!(back.dump_json(), s);
        assert_eq!(back.order(), g.order());
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(back.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn from_table_rejects_bad_tables() {
        // violates associativity but is Latin with identity: order-3 table
        // swapping the non-identity products
        let rows = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(Group::from_table("bad", &rows, vec![]).is_err());
    }
}
