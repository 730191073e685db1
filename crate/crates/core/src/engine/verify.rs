use alloc::sync::Arc;

use super::burnside::{conjugating_element, BurnsideElement, BurnsideRing, SchurNames};
use super::group::{GroupHom, Limits, PermGroup};
use super::gset::GSet;
use crate::partitions::Partition;
use crate::schur::SchurElement;
use crate::{Error, Result};

/// `ind_{S_i × S_{n-i}}^{S_n} ∘ res^{S_i}_{S_i × S_{n-i}}` applied to a set
/// over `S_i`, where the restriction goes along the projection to `S_i`.
pub fn induce_restrict(set: &GSet, s_n: &Arc<PermGroup>) -> Result<GSet> {
    let s_i = set.group().clone();
    let (i, n) = (s_i.degree(), s_n.degree());
    if i > n {
        return Err(Error::PadTooSmall { weight: i, ambient: n });
    }
    let young = PermGroup::young_pair(i, n, s_n.limits())?;
    let projection = GroupHom::truncation(young, s_i)?;
    set.restrict(&projection)?.induce(s_n.clone(), None)
}

#[derive(Debug, Clone)]
pub struct InducedShapeReport {
    pub mu: Partition,
    pub n: usize,
    pub induced_size: usize,
    pub expected_size: u128,
    pub transitive: bool,
    pub conjugate_stabilizers: bool,
}

impl InducedShapeReport {
    pub fn passed(&self) -> bool {
        self.transitive && self.conjugate_stabilizers && self.induced_size as u128 == self.expected_size
    }
}

/// Checks `ind∘res(P_μ^{(i)}) ≅ P_μ^{(n)}` by comparing sizes and finding an
/// explicit conjugation between the two stabilizers.
pub fn verify_induced_shape(mu: &Partition, n: usize, limits: Limits) -> Result<InducedShapeReport> {
    let i = mu.weight();
    let s_i = PermGroup::symmetric(i, limits)?;
    let s_n = PermGroup::symmetric(n, limits)?;
    let small = GSet::natural(s_i).p_mu(mu)?;
    let induced = induce_restrict(&small, &s_n)?;
    let target = GSet::natural(s_n.clone()).p_mu(mu)?;
    let expected_size = mu.pad(n)?.tuple_count()?;
    let orbits = induced.orbits();
    let transitive = orbits.len() == 1 && target.orbits().len() == 1;
    let conjugate_stabilizers =
        transitive && conjugating_element(&s_n, &induced.stabilizer(0), &target.stabilizer(0)).is_some();
    Ok(InducedShapeReport {
        mu: mu.clone(),
        n,
        induced_size: induced.len(),
        expected_size,
        transitive,
        conjugate_stabilizers,
    })
}

#[derive(Debug, Clone)]
pub struct InducedLambdaReport {
    pub i: usize,
    pub n: usize,
    /// `ind∘res(λ^i({1..i}))`.
    pub lhs: BurnsideElement,
    /// `λ^i({1..n})`.
    pub rhs: BurnsideElement,
    pub lhs_schur: Option<SchurElement>,
    pub rhs_schur: Option<SchurElement>,
}

impl InducedLambdaReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Computes `λ^i({1..i})` in `B(S_i)`, pushes it termwise through
/// restriction and induction, and compares with `λ^i({1..n})` in `B(S_n)`.
/// Both sides use only the brute-force recursion.
pub fn verify_induced_lambda(i: usize, n: usize, limits: Limits) -> Result<InducedLambdaReport> {
    if i > n {
        return Err(Error::PadTooSmall { weight: i, ambient: n });
    }
    let s_i = PermGroup::symmetric(i, limits)?;
    let s_n = PermGroup::symmetric(n, limits)?;
    let mut small_ring = BurnsideRing::new(s_i.clone());
    let lambda_small = small_ring.lambda_general(&GSet::natural(s_i), i)?;

    let mut ring = BurnsideRing::new(s_n.clone());
    let mut lhs = BurnsideElement::zero(s_n.clone());
    for (key, c) in lambda_small.terms() {
        let rep = small_ring.representative(key)?;
        let pushed = ring.decompose(&induce_restrict(&rep, &s_n)?)?;
        lhs.add_scaled(&pushed, c)?;
    }
    let rhs = ring.lambda_general(&GSet::natural(s_n), i)?;
    let names = SchurNames::new(&mut ring)?;
    Ok(InducedLambdaReport { i, n, lhs_schur: names.to_schur(&lhs)?, rhs_schur: names.to_schur(&rhs)?, lhs, rhs })
}
