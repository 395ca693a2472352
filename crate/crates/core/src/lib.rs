//! Finite-group computation engine.
//!
//! Builds finite groups as explicit Cayley tables, searches for
//! homomorphisms, automorphisms, isomorphisms and subgroup embeddings,
//! enumerates extensions by Z_2, recognizes groups against the abstract
//! catalog of finite subgroups of O(3), and detects the obstruction-kernel
//! subgroups that exclude a group from acting on 3-space.
//!
//! All computation is exact and deterministic: identical inputs produce
//! identical tables, witnesses, and reports regardless of thread count.

pub mod bruteforce;
pub mod catalog;
pub mod corpus;
pub mod error;
pub mod extensions;
pub mod group;
pub mod invariants;
pub mod morphisms;
pub mod obstructions;
pub mod subgroup;

pub use catalog::{classify_in_o3, o3_candidates_of_order, O3Family};
pub use error::{GroupError, Result};
pub use extensions::{build_extension, enumerate_extension_data, enumerate_extensions};
pub use group::{direct_product, semidirect_product, Group, DEFAULT_ORDER_CAP};
pub use obstructions::{detect_obstructions, kernel_specs_up_to, make_kernel, KernelSpec};
pub use invariants::{group_invariants, InvariantVector};
pub use morphisms::{
    automorphism_group, find_embedding, inner_automorphism_group, is_isomorphic, pair_isomorphic,
    GroupMap,
};
pub use subgroup::{index_two_subgroups, subgroup_closure, sylow_2, SubgroupHandle};
