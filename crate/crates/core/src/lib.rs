//! Exact λ-operations on the Burnside ring of the symmetric groups.
//!
//! The crate is `no_std` (it needs `alloc`). It is organised in four layers:
//!
//! * [`partitions`]: partitions, compositions, multiplicity profiles and
//!   multinomial coefficients.
//! * [`schur`]: the subring of `B(S_n)` spanned by the classes `[P_μ]`,
//!   its multiplication (contingency tables), symmetric powers and the two
//!   independent routes to `λ^i({1..n})`.
//! * [`marks`]: fixed-point counts `|P_μ^σ|` at every cycle type and the
//!   triangularity check that makes them injective on the Schur subring.
//! * [`engine`]: explicit permutation groups and G-sets, used as a
//!   brute-force oracle for every identity above and for arbitrary small
//!   groups.

#![no_std]

extern crate alloc;

pub mod engine;
mod error;
pub mod marks;
pub mod partitions;
pub mod schur;

pub use error::{Error, Result};
pub use marks::{fixed_points, mark_matrix, marks_of, verify_injectivity, MarkMatrix, MarkVector};
pub use partitions::{enumerate_partitions, Composition, MultiplicityProfile, Partition};
pub use schur::{closed_lambda, recursive_lambda, sigma, SchurElement};

/// Exact coefficient type. All arithmetic on it is checked.
pub type Coeff = i128;
