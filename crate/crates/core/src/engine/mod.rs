//! Brute-force permutation groups and G-sets.
//!
//! Everything here works on explicit element sets and explicit point sets,
//! so it is only meant for small groups (a few thousand elements). It is the
//! independent check for the formulas in [`crate::schur`] and evaluates the
//! λ-operations for arbitrary small groups.

mod burnside;
mod group;
mod gset;
mod perm;
mod verify;

pub use burnside::{
    conjugating_element, schur_membership, young_subgroup, BurnsideElement, BurnsideRing, OrbitClassKey, OrbitVerdict,
    SchurNames,
};
pub use group::{GroupHom, Limits, PermGroup, Subgroup};
pub use gset::{GSet, Point};
pub use perm::{parse_cycle_notation, Permutation};
pub use verify::{
    induce_restrict, verify_induced_lambda, verify_induced_shape, InducedLambdaReport, InducedShapeReport,
};
