//! Homomorphism machinery: automorphism groups, isomorphism testing, and
//! subgroup-embedding search.
//!
//! All searches backtrack over the images of a minimal generating
//! sequence, pruning candidates by element order (and conjugacy-class size
//! where that is sound), and extend each partial assignment by closing
//! under products. Since the closure step checks `f(x·y) = f(x)·f(y)` for
//! every pair of defined elements, a completed assignment is already a
//! verified homomorphism on the whole table.
//!
//! Candidates are explored in ascending element-index order and the first
//! witness wins, so results are deterministic across runs and thread
//! counts.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{gcd, Group};
use crate::invariants::{class_size_by_element, element_order, group_invariants};
use crate::subgroup::SubgroupHandle;

/// A homomorphism between carried groups, stored as the image array over
/// all domain elements.
#[derive(Clone)]
pub struct GroupMap {
    domain: Arc<Group>,
    codomain: Arc<Group>,
    images: Vec<usize>,
}

impl std::fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupMap({} -> {}, {:?})", self.domain.label(), self.codomain.label(), self.images)
    }
}

impl GroupMap {
    /// Builds a map and verifies the homomorphism law on every pair.
    pub fn new(domain: Arc<Group>, codomain: Arc<Group>, images: Vec<usize>) -> Result<GroupMap> {
        let m = GroupMap { domain, codomain, images };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        domain: Arc<Group>,
        codomain: Arc<Group>,
        images: Vec<usize>,
    ) -> GroupMap {
        let m = GroupMap { domain, codomain, images };
        debug_assert!(m.verify().is_ok());
        m
    }

    pub fn identity(g: &Arc<Group>) -> GroupMap {
        GroupMap {
            domain: Arc::clone(g),
            codomain: Arc::clone(g),
            images: g.elements().collect(),
        }
    }

    /// Conjugation by `g`: `x -> g x g^-1` as an automorphism of the group.
    pub fn conjugation(group: &Arc<Group>, by: usize) -> GroupMap {
        GroupMap {
            domain: Arc::clone(group),
            codomain: Arc::clone(group),
            images: group.elements().map(|x| group.conj(by, x)).collect(),
        }
    }

    pub fn verify(&self) -> Result<()> {
        if self.images.len() != self.domain.order() {
            return Err(GroupError::Contract("image array length mismatch".into()));
        }
        if self.images.iter().any(|&y| y >= self.codomain.order()) {
            return Err(GroupError::Contract("image out of codomain range".into()));
        }
        if self.images[0] != 0 {
            return Err(GroupError::Contract("identity must map to identity".into()));
        }
        for x in self.domain.elements() {
            for y in self.domain.elements() {
                if self.images[self.domain.mul(x, y)]
                    != self.codomain.mul(self.images[x], self.images[y])
                {
                    return Err(GroupError::Contract(format!(
                        "homomorphism law fails at ({x},{y})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<Group> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Group> {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.images.len() == self.codomain.order()
            && self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Composition `self ∘ other`, applying `other` first:
    /// `(f ∘ g)(x) = f(g(x))`.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        assert!(
            Arc::ptr_eq(&other.codomain, &self.domain),
            "composition requires matching domain/codomain"
        );
        GroupMap {
            domain: Arc::clone(&other.domain),
            codomain: Arc::clone(&self.codomain),
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<GroupMap> {
        if !self.is_bijective() {
            return Err(GroupError::Contract("cannot invert a non-bijective map".into()));
        }
        let mut images = vec![0usize; self.codomain.order()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Ok(GroupMap {
            domain: Arc::clone(&self.codomain),
            codomain: Arc::clone(&self.domain),
            images,
        })
    }
}

/// Greedy minimal generating sequence: repeatedly add the lowest-index
/// element that enlarges the generated subgroup. Empty for the trivial
/// group.
pub fn minimal_generating_sequence(g: &Group) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut have = crate::subgroup::closure_elements(g, &[]);
    while have.len() < g.order() {
        let next = g
            .elements()
            .find(|x| have.binary_search(x).is_err())
            .expect("closure smaller than group must miss an element");
        gens.push(next);
        have = crate::subgroup::closure_elements(g, &gens);
    }
    gens
}

// ---------------------------------------------------------------------------
// Backtracking search over generator images
// ---------------------------------------------------------------------------

/// Search statistics; `exhausted` is true when the search space was fully
/// explored rather than stopped at an accepted solution.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub exhausted: bool,
}

const UNDEF: usize = usize::MAX;

struct HomSearch<'a> {
    dom: &'a Group,
    cod: &'a Group,
    gens: &'a [usize],
    cand: Vec<Vec<usize>>,
    img: Vec<usize>,
    used: Vec<bool>,
    defined: Vec<usize>,
    nodes: u64,
}

impl<'a> HomSearch<'a> {
    fn new(dom: &'a Group, cod: &'a Group, gens: &'a [usize], cand: Vec<Vec<usize>>) -> Self {
        let mut img = vec![UNDEF; dom.order()];
        let mut used = vec![false; cod.order()];
        img[0] = 0;
        used[0] = true;
        HomSearch { dom, cod, gens, cand, img, used, defined: vec![0], nodes: 0 }
    }

    /// Runs the search, invoking `on_solution` with the full injective
    /// image array for every completed assignment. Returns early (with
    /// `exhausted = false`) once `on_solution` returns true.
    fn run(&mut self, on_solution: &mut dyn FnMut(&[usize]) -> bool) -> SearchStats {
        let stopped = self.recurse(0, on_solution);
        SearchStats { nodes: self.nodes, exhausted: !stopped }
    }

    fn recurse(&mut self, depth: usize, on_solution: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.gens.len() {
            debug_assert_eq!(self.defined.len(), self.dom.order());
            return on_solution(&self.img);
        }
        for ci in 0..self.cand[depth].len() {
            let c = self.cand[depth][ci];
            self.nodes += 1;
            let mark = self.defined.len();
            if self.assign_and_close(self.gens[depth], c)
                && self.recurse(depth + 1, on_solution)
            {
                self.rollback(mark);
                return true;
            }
            self.rollback(mark);
        }
        false
    }

    /// Defines `img[x] = y`, then closes under products with everything
    /// already defined, checking consistency and injectivity throughout.
    fn assign_and_close(&mut self, x: usize, y: usize) -> bool {
        let mark = self.defined.len();
        if !self.derive(x, y) {
            return false;
        }
        let mut qi = mark;
        while qi < self.defined.len() {
            let q = self.defined[qi];
            qi += 1;
            let fq = self.img[q];
            for di in 0..self.defined.len() {
                let d = self.defined[di];
                let fd = self.img[d];
                if !self.derive(self.dom.mul(q, d), self.cod.mul(fq, fd))
                    || !self.derive(self.dom.mul(d, q), self.cod.mul(fd, fq))
                {
                    return false;
                }
            }
        }
        true
    }

    fn derive(&mut self, x: usize, y: usize) -> bool {
        if self.img[x] != UNDEF {
            return self.img[x] == y;
        }
        if self.used[y] {
            return false;
        }
        self.img[x] = y;
        self.used[y] = true;
        self.defined.push(x);
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.defined.len() > mark {
            let x = self.defined.pop().unwrap();
            self.used[self.img[x]] = false;
            self.img[x] = UNDEF;
        }
    }
}

fn element_orders(g: &Group) -> Vec<usize> {
    g.elements().map(|x| element_order(g, x)).collect()
}

/// Candidate images for isomorphism-style searches: matching element order
/// and conjugacy-class size, plus an optional color constraint.
fn iso_candidates(
    dom: &Group,
    cod: &Group,
    gens: &[usize],
    colors: Option<(&[bool], &[bool])>,
) -> Vec<Vec<usize>> {
    let dord = element_orders(dom);
    let cord = element_orders(cod);
    let dcls = class_size_by_element(dom);
    let ccls = class_size_by_element(cod);
    gens.iter()
        .map(|&g| {
            cod.elements()
                .filter(|&y| {
                    cord[y] == dord[g]
                        && ccls[y] == dcls[g]
                        && colors.is_none_or(|(dc, cc)| cc[y] == dc[g])
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Automorphism groups
// ---------------------------------------------------------------------------

/// The full automorphism group of a carried group: all bijective
/// endomorphisms, together with their composition Cayley table.
pub struct AutomorphismGroup {
    base: Arc<Group>,
    elements: Vec<GroupMap>,
    composition: Arc<Group>,
}

impl AutomorphismGroup {
    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn elements(&self) -> &[GroupMap] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cayley table of the automorphisms under composition
    /// `(f ∘ g)(x) = f(g(x))`; element order matches [`Self::elements`].
    pub fn composition(&self) -> &Arc<Group> {
        &self.composition
    }

    /// Index of an automorphism given by its image array.
    pub fn index_of(&self, images: &[usize]) -> Option<usize> {
        self.elements.binary_search_by(|m| m.images().cmp(images)).ok()
    }
}

/// Computes all automorphisms by backtracking over generator images.
/// Automorphisms are sorted by image array, so the identity map is always
/// element 0 of the composition table.
pub fn automorphism_group(g: &Arc<Group>) -> AutomorphismGroup {
    let gens = minimal_generating_sequence(g);
    let cand = iso_candidates(g, g, &gens, None);
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    let mut search = HomSearch::new(g, g, &gens, cand);
    search.run(&mut |img| {
        solutions.push(img.to_vec());
        false
    });
    solutions.sort_unstable();
    let elements: Vec<GroupMap> = solutions
        .iter()
        .map(|images| GroupMap::new_unchecked(Arc::clone(g), Arc::clone(g), images.clone()))
        .collect();
    let index: BTreeMap<&[usize], usize> =
        solutions.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let order = elements.len();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(order);
    for f in &elements {
        let mut row = Vec::with_capacity(order);
        for h in &elements {
            let composed: Vec<usize> = h.images().iter().map(|&y| f.apply(y)).collect();
            row.push(index[composed.as_slice()]);
        }
        rows.push(row);
    }
    let composition = Arc::new(
        Group::from_table(format!("Aut({})", g.label()), &rows, vec![])
            .expect("automorphism composition table is a group table"),
    );
    AutomorphismGroup { base: Arc::clone(g), elements, composition }
}

/// The inner automorphisms as a subgroup of the composition table, plus
/// the order of the outer automorphism group |Aut| / |Inn|.
pub fn inner_automorphism_group(aut: &AutomorphismGroup) -> (SubgroupHandle, usize) {
    let g = aut.base();
    let mut indices: Vec<usize> = g
        .elements()
        .map(|by| {
            let images: Vec<usize> = g.elements().map(|x| g.conj(by, x)).collect();
            aut.index_of(&images).expect("conjugation is an automorphism")
        })
        .collect();
    indices.sort_unstable();
    indices.dedup();
    let out_order = aut.len() / indices.len();
    (SubgroupHandle::new_unchecked(Arc::clone(aut.composition()), indices), out_order)
}

// ---------------------------------------------------------------------------
// Isomorphism testing
// ---------------------------------------------------------------------------

/// Finds an isomorphism witness, or returns None after the invariant
/// screen or an exhaustive backtracking search rules one out.
pub fn is_isomorphic(a: &Arc<Group>, b: &Arc<Group>) -> Option<GroupMap> {
    iso_search(a, b, None)
}

/// Isomorphism of pairs: a group isomorphism carrying the distinguished
/// subgroup of `a` onto the distinguished subgroup of `b`.
pub fn pair_isomorphic(
    a: &Arc<Group>,
    na: &SubgroupHandle,
    b: &Arc<Group>,
    nb: &SubgroupHandle,
) -> Option<GroupMap> {
    if na.len() != nb.len() {
        return None;
    }
    let ca: Vec<bool> = a.elements().map(|x| na.contains(x)).collect();
    let cb: Vec<bool> = b.elements().map(|x| nb.contains(x)).collect();
    // Membership in an index-2 subgroup is a homomorphism to Z_2, so
    // matching it on generators forces it everywhere; the witness carries
    // na onto nb exactly.
    iso_search(a, b, Some((&ca, &cb)))
}

fn iso_search(
    a: &Arc<Group>,
    b: &Arc<Group>,
    colors: Option<(&[bool], &[bool])>,
) -> Option<GroupMap> {
    if a.order() != b.order() {
        return None;
    }
    if group_invariants(a) != group_invariants(b) {
        return None;
    }
    let gens = minimal_generating_sequence(a);
    let cand = iso_candidates(a, b, &gens, colors);
    let mut witness: Option<Vec<usize>> = None;
    let mut search = HomSearch::new(a, b, &gens, cand);
    search.run(&mut |img| {
        witness = Some(img.to_vec());
        true
    });
    witness.map(|images| GroupMap::new_unchecked(Arc::clone(a), Arc::clone(b), images))
}

// ---------------------------------------------------------------------------
// Embedding search
// ---------------------------------------------------------------------------

/// A subgroup of the ambient group isomorphic to the probe group, with the
/// witness isomorphism from the probe onto it.
pub struct Embedding {
    pub witness: SubgroupHandle,
    pub map: GroupMap,
}

/// Finds a subgroup of `g` isomorphic to `k`. See [`find_embedding_with`]
/// for the accepted-solution variant.
pub fn find_embedding(g: &Arc<Group>, k: &Arc<Group>) -> Option<Embedding> {
    find_embedding_with(g, k, |_| true).0
}

/// Searches injective homomorphisms `k -> g`, enumerating witnesses until
/// `accept` returns true. Returns the accepted embedding if any, otherwise
/// the first embedding found (with `accept` false on all), otherwise None.
/// The stats report whether the search ran to exhaustion.
pub fn find_embedding_with(
    g: &Arc<Group>,
    k: &Arc<Group>,
    mut accept: impl FnMut(&Embedding) -> bool,
) -> (Option<Embedding>, SearchStats) {
    if k.order() > g.order() || g.order() % k.order() != 0 {
        return (None, SearchStats { nodes: 0, exhausted: true });
    }
    // order-histogram domination: every element order of k must occur in g
    // at least as often
    let hk = &group_invariants(k).order_histogram;
    let hg = &group_invariants(g).order_histogram;
    if hk.iter().any(|(ord, cnt)| hg.get(ord).copied().unwrap_or(0) < *cnt) {
        return (None, SearchStats { nodes: 0, exhausted: true });
    }
    let gens = minimal_generating_sequence(k);
    let kord = element_orders(k);
    let gord = element_orders(g);
    let cand: Vec<Vec<usize>> = gens
        .iter()
        .map(|&ke| g.elements().filter(|&y| gord[y] == kord[ke]).collect())
        .collect();
    let mut first: Option<Embedding> = None;
    let mut accepted: Option<Embedding> = None;
    let mut search = HomSearch::new(k, g, &gens, cand);
    let stats = search.run(&mut |img| {
        let mut elems = img.to_vec();
        elems.sort_unstable();
        let emb = Embedding {
            witness: SubgroupHandle::new_unchecked(Arc::clone(g), elems),
            map: GroupMap::new_unchecked(Arc::clone(k), Arc::clone(g), img.to_vec()),
        };
        if accept(&emb) {
            accepted = Some(emb);
            true
        } else {
            if first.is_none() {
                first = Some(emb);
            }
            false
        }
    });
    (accepted.or(first), stats)
}

// ---------------------------------------------------------------------------
// Dihedral automorphism coordinates
// ---------------------------------------------------------------------------

/// Coordinate form of an automorphism of D_{2n}: the pair (t, s) with
/// gcd(s, n) = 1 coding the map `a -> a^s`, `b -> a^t b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralAutCoord {
    pub t: usize,
    pub s: usize,
}

/// The automorphism of D_{2n} coded by (t, s). The group must be the
/// standard dihedral table from [`Group::dihedral`]; the constructed map
/// is fully verified before it is returned.
pub fn dihedral_coord_to_map(d2n: &Arc<Group>, coord: DihedralAutCoord) -> Result<GroupMap> {
    let n = dihedral_parameter(d2n)?;
    let DihedralAutCoord { t, s } = coord;
    if s >= n || t >= n || gcd(s, n) != 1 {
        return Err(GroupError::Parameter(format!(
            "(t={t}, s={s}) is not a valid automorphism coordinate for n={n}"
        )));
    }
    let mut images = vec![0usize; 2 * n];
    for i in 0..n {
        images[i] = s * i % n;
        images[n + i] = n + (s * i + t) % n;
    }
    GroupMap::new(Arc::clone(d2n), Arc::clone(d2n), images)
}

/// Recovers the (t, s) coordinate of a dihedral automorphism.
pub fn dihedral_map_to_coord(map: &GroupMap) -> Result<DihedralAutCoord> {
    let n = dihedral_parameter(map.domain())?;
    let s = map.apply(1);
    let bt = map.apply(n);
    if s >= n || bt < n {
        return Err(GroupError::Contract(
            "map does not preserve the rotation/reflection split".into(),
        ));
    }
    Ok(DihedralAutCoord { t: bt - n, s })
}

/// Composition law in coordinates: (t, s) ∘ (t', s') = (t + s·t', s·s'),
/// the left map applied second.
pub fn dihedral_coord_compose(
    n: usize,
    a: DihedralAutCoord,
    b: DihedralAutCoord,
) -> DihedralAutCoord {
    DihedralAutCoord { t: (a.t + a.s * b.t) % n, s: a.s * b.s % n }
}

fn dihedral_parameter(g: &Arc<Group>) -> Result<usize> {
    let n = g.order() / 2;
    if g.order() % 2 != 0 || n < 3 {
        return Err(GroupError::Parameter(
            "dihedral coordinates need the standard D_{2n} table with n >= 3".into(),
        ));
    }
    Ok(n)
}
