//! The abstract-isomorphism catalog of finite subgroups of O(3), and
//! recognition of arbitrary groups against it.
//!
//! The catalog lists abstract isomorphism types only: the point groups of
//! mixed type (index-2 pair constructions inside O(3)) are abstractly
//! isomorphic to the families listed here, so they contribute no extra
//! tags.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::group::{direct_product, Group};
use crate::morphisms::{is_isomorphic, GroupMap};

/// Families of finite subgroups of O(3) by abstract isomorphism type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum O3Family {
    /// Z_n, order n
    Cyclic(usize),
    /// Z_n × Z_2, order 2n
    CyclicPlus(usize),
    /// D_{2n}, order 2n
    Dihedral(usize),
    /// D_{2n} × Z_2, order 4n
    DihedralPlus(usize),
    /// A_4, order 12
    Tetra,
    /// A_4 × Z_2, order 24
    TetraPlus,
    /// S_4, order 24
    Octa,
    /// S_4 × Z_2, order 48
    OctaPlus,
    /// A_5, order 60
    Icosa,
    /// A_5 × Z_2, order 120
    IcosaPlus,
}

impl O3Family {
    pub fn order(&self) -> usize {
        match *self {
            O3Family::Cyclic(n) => n,
            O3Family::CyclicPlus(n) => 2 * n,
            O3Family::Dihedral(n) => 2 * n,
            O3Family::DihedralPlus(n) => 4 * n,
            O3Family::Tetra => 12,
            O3Family::TetraPlus => 24,
            O3Family::Octa => 24,
            O3Family::OctaPlus => 48,
            O3Family::Icosa => 60,
            O3Family::IcosaPlus => 120,
        }
    }

    /// Builds the family's concrete group.
    pub fn instantiate(&self, cap: usize) -> Result<Group> {
        let z2 = Group::cyclic(2, cap)?;
        Ok(match *self {
            O3Family::Cyclic(n) => Group::cyclic(n, cap)?,
            O3Family::CyclicPlus(n) => {
                let zn = Group::cyclic(n, cap)?;
                arc_unwrap(direct_product(&zn, &z2, cap)?.group)
            }
            O3Family::Dihedral(n) => Group::dihedral(n, cap)?,
            O3Family::DihedralPlus(n) => {
                let d = Group::dihedral(n, cap)?;
                arc_unwrap(direct_product(&d, &z2, cap)?.group)
            }
            O3Family::Tetra => tetra(cap)?,
            O3Family::TetraPlus => arc_unwrap(direct_product(&tetra(cap)?, &z2, cap)?.group),
            O3Family::Octa => octa(cap)?,
            O3Family::OctaPlus => arc_unwrap(direct_product(&octa(cap)?, &z2, cap)?.group),
            O3Family::Icosa => icosa(cap)?,
            O3Family::IcosaPlus => arc_unwrap(direct_product(&icosa(cap)?, &z2, cap)?.group),
        })
    }
}

impl fmt::Display for O3Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            O3Family::Cyclic(n) => write!(f, "C({n})"),
            O3Family::CyclicPlus(n) => write!(f, "C+({n})"),
            O3Family::Dihedral(n) => write!(f, "D({n})"),
            O3Family::DihedralPlus(n) => write!(f, "D+({n})"),
            O3Family::Tetra => write!(f, "T"),
            O3Family::TetraPlus => write!(f, "T+"),
            O3Family::Octa => write!(f, "O"),
            O3Family::OctaPlus => write!(f, "O+"),
            O3Family::Icosa => write!(f, "I"),
            O3Family::IcosaPlus => write!(f, "I+"),
        }
    }
}

fn arc_unwrap(g: Arc<Group>) -> Group {
    Arc::try_unwrap(g).unwrap_or_else(|a| a.as_ref().clone())
}

// (0 1 2) and (0 1)(2 3)
fn tetra(cap: usize) -> Result<Group> {
    Ok(Group::permutation(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], cap)?.with_label("A4"))
}

// (0 1) and (0 1 2 3)
fn octa(cap: usize) -> Result<Group> {
    Ok(Group::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], cap)?.with_label("S4"))
}

// (0 1 2) and (0 1 2 3 4)
fn icosa(cap: usize) -> Result<Group> {
    Ok(Group::permutation(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]], cap)?.with_label("A5"))
}

/// One instantiated catalog member of a given order. `duplicate_of` flags
/// members abstractly isomorphic to an earlier candidate in the list
/// (e.g. C+(n) ≅ C(2n) for odd n).
pub struct O3Candidate {
    pub family: O3Family,
    pub group: Arc<Group>,
    pub duplicate_of: Option<O3Family>,
}

/// All catalog families admitting order m, instantiated, in the fixed
/// preference order: Cyclic, CyclicPlus, Dihedral, DihedralPlus,
/// polyhedral, polyhedral-plus.
pub fn o3_candidates_of_order(m: usize, cap: usize) -> Result<Vec<O3Candidate>> {
    let mut families = Vec::new();
    if m >= 1 {
        families.push(O3Family::Cyclic(m));
    }
    if m % 2 == 0 && m >= 2 {
        families.push(O3Family::CyclicPlus(m / 2));
        families.push(O3Family::Dihedral(m / 2));
    }
    if m % 4 == 0 && m >= 4 {
        families.push(O3Family::DihedralPlus(m / 4));
    }
    for poly in [
        O3Family::Tetra,
        O3Family::Octa,
        O3Family::Icosa,
        O3Family::TetraPlus,
        O3Family::OctaPlus,
        O3Family::IcosaPlus,
    ] {
        if poly.order() == m {
            families.push(poly);
        }
    }
    let mut out: Vec<O3Candidate> = Vec::new();
    for family in families {
        let group = Arc::new(family.instantiate(cap)?);
        let duplicate_of =
            out.iter().find(|c| is_isomorphic(&c.group, &group).is_some()).map(|c| c.family);
        out.push(O3Candidate { family, group, duplicate_of });
    }
    Ok(out)
}

/// A successful catalog classification: the family tag and the
/// isomorphism witness onto its instance.
pub struct O3Match {
    pub family: O3Family,
    pub witness: GroupMap,
}

/// Classifies a group against the catalog members of its order, returning
/// the first match in preference order, or None when every candidate
/// fails.
pub fn classify_in_o3(g: &Arc<Group>, cap: usize) -> Result<Option<O3Match>> {
    let cap = cap.max(g.order());
    for cand in o3_candidates_of_order(g.order(), cap)? {
        if let Some(witness) = is_isomorphic(g, &cand.group) {
            return Ok(Some(O3Match { family: cand.family, witness }));
        }
    }
    Ok(None)
}
