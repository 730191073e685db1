use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("cannot pad a partition of {weight} to ambient {ambient}")]
    PadTooSmall { weight: usize, ambient: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("ambient mismatch: n={left} vs n={right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("degree is only defined for 2k < n (got k={k}, n={n})")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutations of different degrees: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds cap {cap}")]
    GroupCapExceeded { cap: usize },
    #[error("{construction} would have {size} points, cap is {cap}")]
    PointCapExceeded { construction: &'static str, size: u128, cap: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid coset transversal: {0}")]
    InvalidTransversal(String),
    #[error("G-sets over different groups")]
    GroupMismatch,
    #[error("expected the full symmetric group on {0} points")]
    NotSymmetricGroup(usize),
}
