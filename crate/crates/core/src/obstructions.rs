//! Obstruction kernels: the parametrized families of groups that cannot
//! act on 3-space, and their detection inside candidate extensions.
//!
//! Families A through F are concrete constructible groups; the TwoGroup
//! rule is not a group but a constraint on the Sylow 2-subgroup (every
//! 2-group acting on 3-space is in the O(3) catalog, so a Sylow 2-subgroup
//! outside the catalog is itself an obstruction witness).
//!
//! Kernels A, C, D, F block unconditionally. Kernels B and E forbid only
//! actions whose orientation-preserving subgroup meets the embedded copy
//! in its designated index-2 subgroup, so they block only when such a
//! placed embedding exists; the search therefore enumerates embeddings
//! until a placed one is found.

use std::sync::Arc;

use crate::catalog::classify_in_o3;
use crate::error::{GroupError, Result};
use crate::group::{direct_product, semidirect_product, Group};
use crate::morphisms::{find_embedding_with, Embedding};
use crate::subgroup::{sylow_2, SubgroupHandle};

/// A parametrized obstruction-kernel family.
///
/// Order formulas: A(p,q) -> 2pq, B(q) -> 8q, C(p,k) -> 2^{k+1} p,
/// D(p) -> 4p, E(p) -> 8p, F(m) -> 4m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KernelSpec {
    /// (Z_p ⊕ Z_q) ⋊ Z_2, inverting Z_q only; p, q distinct odd primes.
    A { p: usize, q: usize },
    /// (Z_4 ⊕ Z_q) ⋊ Z_2, inverting Z_q only; q odd prime. Conditional.
    B { q: usize },
    /// Z_p ⋊ Z_{2^{k+1}} with the generator inverting Z_p; p odd prime, k >= 1.
    C { p: usize, k: usize },
    /// Z_p ⋊ Z_4 with the generator acting by n, n² ≡ -1 (mod p); p ≡ 1 (mod 4).
    D { p: usize },
    /// (Z_p ⊕ Z_4) ⋊ Z_2, inverting Z_4 only; p odd prime. Conditional.
    E { p: usize },
    /// Generalized quaternion Q_{4m}, m >= 2.
    F { m: usize },
    /// The Sylow-2 catalog rule; not constructible as a single group.
    TwoGroup,
}

impl KernelSpec {
    /// Group order of the family member; None for the TwoGroup rule.
    pub fn order(&self) -> Option<usize> {
        match *self {
            KernelSpec::A { p, q } => Some(2 * p * q),
            KernelSpec::B { q } => Some(8 * q),
            KernelSpec::C { p, k } => Some((1 << (k + 1)) * p),
            KernelSpec::D { p } => Some(4 * p),
            KernelSpec::E { p } => Some(8 * p),
            KernelSpec::F { m } => Some(4 * m),
            KernelSpec::TwoGroup => None,
        }
    }

    pub fn conditional(&self) -> bool {
        matches!(self, KernelSpec::B { .. } | KernelSpec::E { .. })
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            KernelSpec::A { p, q } => is_odd_prime(p) && is_odd_prime(q) && p != q,
            KernelSpec::B { q } => is_odd_prime(q),
            KernelSpec::C { p, k } => is_odd_prime(p) && k >= 1,
            KernelSpec::D { p } => is_odd_prime(p) && p % 4 == 1,
            KernelSpec::E { p } => is_odd_prime(p),
            KernelSpec::F { m } => m >= 2,
            KernelSpec::TwoGroup => true,
        };
        if ok {
            Ok(())
        } else {
            Err(GroupError::Parameter(format!("invalid kernel parameters: {self}")))
        }
    }

    fn letter_rank(&self) -> usize {
        match self {
            KernelSpec::A { .. } => 0,
            KernelSpec::B { .. } => 1,
            KernelSpec::C { .. } => 2,
            KernelSpec::D { .. } => 3,
            KernelSpec::E { .. } => 4,
            KernelSpec::F { .. } => 5,
            KernelSpec::TwoGroup => 6,
        }
    }
}

impl std::fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            KernelSpec::A { p, q } => write!(f, "A({p},{q})"),
            KernelSpec::B { q } => write!(f, "B({q})"),
            KernelSpec::C { p, k } => write!(f, "C({p},{k})"),
            KernelSpec::D { p } => write!(f, "D({p})"),
            KernelSpec::E { p } => write!(f, "E({p})"),
            KernelSpec::F { m } => write!(f, "F({m})"),
            KernelSpec::TwoGroup => write!(f, "TwoGroup"),
        }
    }
}

fn is_odd_prime(n: usize) -> bool {
    n > 2 && is_prime(n)
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A kernel family member as a concrete group with its designated
/// orientation-preserving subgroup.
pub struct KernelInstance {
    pub spec: KernelSpec,
    pub group: Arc<Group>,
    pub orientation: SubgroupHandle,
    pub conditional: bool,
}

/// All constructible specs with order at most `order_bound`, sorted by
/// (order, family letter, parameters).
pub fn kernel_specs_up_to(order_bound: usize) -> Vec<KernelSpec> {
    let mut specs = Vec::new();
    let primes: Vec<usize> = (3..=order_bound).filter(|&n| is_odd_prime(n)).collect();
    for &p in &primes {
        for &q in &primes {
            if p != q && 2 * p * q <= order_bound {
                specs.push(KernelSpec::A { p, q });
            }
        }
        if 8 * p <= order_bound {
            specs.push(KernelSpec::B { q: p });
            specs.push(KernelSpec::E { p });
        }
        let mut k = 1;
        while (1usize << (k + 1)) * p <= order_bound {
            specs.push(KernelSpec::C { p, k });
            k += 1;
        }
        if p % 4 == 1 && 4 * p <= order_bound {
            specs.push(KernelSpec::D { p });
        }
    }
    for m in 2..=order_bound / 4 {
        specs.push(KernelSpec::F { m });
    }
    specs.sort_by_key(|s| (s.order(), s.letter_rank(), *s));
    specs
}

/// Builds the concrete group of a spec with its orientation subgroup.
pub fn make_kernel(spec: KernelSpec, cap: usize) -> Result<KernelInstance> {
    spec.validate()?;
    let (group, orientation_elems): (Arc<Group>, Vec<usize>) = match spec {
        KernelSpec::A { p, q } => build_inverting_product(p, q, cap)?,
        KernelSpec::B { q } => build_inverting_product(4, q, cap)?,
        KernelSpec::C { p, k } => {
            // Z_p ⋊ Z_{2^{k+1}}, generator inverting; orientation is the
            // index-2 cyclic subgroup of even-exponent pairs
            let h_ord = 1usize << (k + 1);
            let zp = Group::cyclic(p, cap)?;
            let zh = Group::cyclic(h_ord, cap)?;
            let action = alternating_inversion_action(&zp, h_ord);
            let sd = semidirect_product(&zp, &zh, &action, cap)?;
            let orientation =
                (0..p).flat_map(|x| (0..h_ord).step_by(2).map(move |h| x * h_ord + h)).collect();
            (sd.group, orientation)
        }
        KernelSpec::D { p } => {
            // Z_p ⋊ Z_4 acting by the smallest n with n² ≡ -1 (mod p);
            // orientation is the index-2 dihedral subgroup
            let n = (2..p)
                .find(|&n| n * n % p == p - 1)
                .ok_or_else(|| GroupError::Parameter(format!("no square root of -1 mod {p}")))?;
            let zp = Group::cyclic(p, cap)?;
            let z4 = Group::cyclic(4, cap)?;
            let action: Vec<Vec<usize>> = (0..4usize)
                .map(|h| {
                    let mult = (0..h).fold(1usize, |acc, _| acc * n % p);
                    (0..p).map(|x| x * mult % p).collect()
                })
                .collect();
            let sd = semidirect_product(&zp, &z4, &action, cap)?;
            let orientation =
                (0..p).flat_map(|x| [0usize, 2].map(move |h| x * 4 + h)).collect();
            (sd.group, orientation)
        }
        KernelSpec::E { p } => {
            // (Z_p ⊕ Z_4) ⋊ Z_2 inverting the Z_4 factor only
            let zp = Group::cyclic(p, cap)?;
            let z4 = Group::cyclic(4, cap)?;
            let n = direct_product(&zp, &z4, cap)?.group;
            let inv: Vec<usize> =
                (0..n.order()).map(|e| (e / 4) * 4 + (4 - e % 4) % 4).collect();
            let id: Vec<usize> = n.elements().collect();
            let z2 = Group::cyclic(2, cap)?;
            let sd = semidirect_product(&n, &z2, &[id, inv], cap)?;
            let orientation = sd.n_embed.elements().to_vec();
            (sd.group, orientation)
        }
        KernelSpec::F { m } => {
            let g = Arc::new(Group::quaternion(m, cap)?);
            let orientation = (0..2 * m).collect();
            (g, orientation)
        }
        KernelSpec::TwoGroup => {
            return Err(GroupError::Parameter(
                "TwoGroup is a rule on Sylow 2-subgroups, not a constructible kernel".into(),
            ));
        }
    };
    let group = Arc::new(group.as_ref().clone().with_label(spec.to_string()));
    let orientation = SubgroupHandle::new_unchecked(Arc::clone(&group), orientation_elems);
    debug_assert!(orientation.verify().is_ok());
    debug_assert_eq!(orientation.index(), 2);
    Ok(KernelInstance { spec, group, orientation, conditional: spec.conditional() })
}

/// Action of Z_{2^{k+1}} on Z_p with the generator acting by inversion:
/// even exponents act trivially, odd exponents invert.
fn alternating_inversion_action(zp: &Group, h_ord: usize) -> Vec<Vec<usize>> {
    let p = zp.order();
    (0..h_ord)
        .map(|h| {
            if h % 2 == 0 {
                (0..p).collect()
            } else {
                (0..p).map(|x| (p - x) % p).collect()
            }
        })
        .collect()
}

/// (Z_a ⊕ Z_q) ⋊ Z_2 with the involution fixing Z_a and inverting Z_q;
/// orientation is the normal subgroup Z_a ⊕ Z_q.
fn build_inverting_product(a: usize, q: usize, cap: usize) -> Result<(Arc<Group>, Vec<usize>)> {
    let za = Group::cyclic(a, cap)?;
    let zq = Group::cyclic(q, cap)?;
    let n = direct_product(&za, &zq, cap)?.group;
    let inv: Vec<usize> = (0..n.order()).map(|e| (e / q) * q + (q - e % q) % q).collect();
    let id: Vec<usize> = n.elements().collect();
    let z2 = Group::cyclic(2, cap)?;
    let sd = semidirect_product(&n, &z2, &[id, inv], cap)?;
    let orientation = sd.n_embed.elements().to_vec();
    Ok((sd.group, orientation))
}

/// A detected obstruction: the spec, the embedded witness subgroup, and
/// whether the witness isomorphism carries the kernel's orientation
/// subgroup onto witness ∩ N.
pub struct Obstruction {
    pub spec: KernelSpec,
    pub witness: SubgroupHandle,
    pub placement_ok: bool,
}

impl Obstruction {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "spec": self.spec.to_string(),
            "witness": self.witness.elements(),
            "placement_ok": self.placement_ok,
        })
    }
}

/// Searches every kernel family of order dividing |G| inside G, then
/// applies the TwoGroup rule to the Sylow 2-subgroup. Returns all
/// blocking obstructions in deterministic spec order; an empty list means
/// the pair (G, N) is unobstructed.
pub fn detect_obstructions(
    g: &Arc<Group>,
    n: &SubgroupHandle,
    cap: usize,
) -> Result<Vec<Obstruction>> {
    if !Arc::ptr_eq(n.parent(), g) {
        return Err(GroupError::Contract("N must be a subgroup of G".into()));
    }
    if g.order() != 2 * n.len() {
        return Err(GroupError::Contract(
            "N must have index 2 as the orientation-preserving subgroup".into(),
        ));
    }
    n.verify()?;
    let mut found = Vec::new();
    for spec in kernel_specs_up_to(g.order()) {
        let order = spec.order().expect("enumerated specs are constructible");
        if g.order() % order != 0 {
            continue;
        }
        let kernel = make_kernel(spec, cap)?;
        let placed = |emb: &Embedding| placement_ok(emb, &kernel, n);
        if kernel.conditional {
            // block only when some embedding lands its orientation
            // subgroup inside N; enumerate until one does
            let (emb, _) = find_embedding_with(g, &kernel.group, placed);
            if let Some(emb) = emb {
                let ok = placed(&emb);
                if ok {
                    found.push(Obstruction { spec, witness: emb.witness, placement_ok: ok });
                }
            }
        } else {
            let (emb, _) = find_embedding_with(g, &kernel.group, |_| true);
            if let Some(emb) = emb {
                let ok = placed(&emb);
                found.push(Obstruction { spec, witness: emb.witness, placement_ok: ok });
            }
        }
    }
    let p2 = sylow_2(g)?;
    let p2_group = Arc::new(p2.as_group());
    if classify_in_o3(&p2_group, cap)?.is_none() {
        found.push(Obstruction { spec: KernelSpec::TwoGroup, witness: p2, placement_ok: true });
    }
    Ok(found)
}

fn placement_ok(emb: &Embedding, kernel: &KernelInstance, n: &SubgroupHandle) -> bool {
    let mut mapped: Vec<usize> =
        kernel.orientation.elements().iter().map(|&o| emb.map.apply(o)).collect();
    mapped.sort_unstable();
    let meet: Vec<usize> =
        emb.witness.elements().iter().copied().filter(|&x| n.contains(x)).collect();
    mapped == meet
}
