use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::group::{PermGroup, Subgroup};
use super::gset::GSet;
use crate::partitions::{enumerate_partitions, Partition};
use crate::schur::SchurElement;
use crate::{Coeff, Error, Result};

/// Canonical name of a conjugacy class of subgroups: the subgroup order and
/// the lexicographically least sorted rank set over all conjugates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitClassKey {
    order: usize,
    fingerprint: Vec<usize>,
}

impl OrbitClassKey {
    /// Brute force over all conjugates `g H g⁻¹`.
    pub fn of(group: &PermGroup, sub: &Subgroup) -> OrbitClassKey {
        let ranks = |s: &Subgroup| s.members().iter().map(|&e| group.rank(e)).collect::<Vec<_>>();
        let mut best = ranks(sub);
        let mut buf = Vec::with_capacity(sub.order());
        for g in 0..group.order() {
            buf.clear();
            buf.extend(sub.members().iter().map(|&h| group.rank(group.conjugate(g, h))));
            buf.sort_unstable();
            if buf < best {
                best.clone_from(&buf);
            }
        }
        OrbitClassKey { order: sub.order(), fingerprint: best }
    }

    /// Order of the stabilizer subgroup.
    pub fn stabilizer_order(&self) -> usize {
        self.order
    }

    pub fn fingerprint(&self) -> &[usize] {
        &self.fingerprint
    }

    /// The canonical representative subgroup.
    pub fn subgroup(&self, group: &PermGroup) -> Subgroup {
        let mut members: Vec<usize> = self.fingerprint.iter().map(|&r| group.by_rank(r)).collect();
        members.sort_unstable_by_key(|&e| group.rank(e));
        Subgroup::from_sorted_unchecked(members)
    }
}

impl fmt::Display for OrbitClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[orbit: stabilizer-order {}, fingerprint ", self.order)?;
        // long fingerprints are abbreviated to their head and length
        const SHOWN: usize = 8;
        for (j, r) in self.fingerprint.iter().take(SHOWN).enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", r)?;
        }
        if self.fingerprint.len() > SHOWN {
            write!(f, ",…({})", self.fingerprint.len())?;
        }
        f.write_str("]")
    }
}

/// An integer combination of transitive `G`-set classes.
#[derive(Debug, Clone)]
pub struct BurnsideElement {
    group: Arc<PermGroup>,
    terms: BTreeMap<OrbitClassKey, Coeff>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group.same_elements(&other.group)) && self.terms == other.terms
    }
}

impl Eq for BurnsideElement {}

impl BurnsideElement {
    pub fn zero(group: Arc<PermGroup>) -> Self {
        BurnsideElement { group, terms: BTreeMap::new() }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrbitClassKey, Coeff)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, key: &OrbitClassKey) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: OrbitClassKey, c: Coeff) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let v = self.coeff(&key).checked_add(c).ok_or(Error::Overflow("Burnside coefficient"))?;
        if v == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
        Ok(())
    }

    /// `self + factor · other`.
    pub fn add_scaled(&mut self, other: &BurnsideElement, factor: Coeff) -> Result<()> {
        for (k, c) in other.terms() {
            let t = c.checked_mul(factor).ok_or(Error::Overflow("Burnside coefficient"))?;
            self.add_term(k.clone(), t)?;
        }
        Ok(())
    }

    /// Number of points of the virtual set, `Σ c · [G : H]`.
    pub fn cardinality(&self) -> Result<Coeff> {
        let order = self.group.order() as Coeff;
        self.terms().try_fold(0 as Coeff, |acc, (k, c)| {
            c.checked_mul(order / k.order as Coeff)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("cardinality"))
        })
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (j, (k, c)) in self.terms().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{:+} * {}", c, k)?;
        }
        Ok(())
    }
}

/// Classification and multiplication in `B(G)` for one group, with caches.
#[derive(Debug)]
pub struct BurnsideRing {
    group: Arc<PermGroup>,
    keys: BTreeMap<Vec<usize>, OrbitClassKey>,
    products: BTreeMap<(OrbitClassKey, OrbitClassKey), BurnsideElement>,
}

impl BurnsideRing {
    pub fn new(group: Arc<PermGroup>) -> Self {
        BurnsideRing { group, keys: BTreeMap::new(), products: BTreeMap::new() }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    fn check_group(&self, set: &GSet) -> Result<()> {
        if set.group().same_indexing(&self.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn key_of(&mut self, sub: &Subgroup) -> OrbitClassKey {
        if let Some(k) = self.keys.get(sub.members()) {
            return k.clone();
        }
        let key = OrbitClassKey::of(&self.group, sub);
        self.keys.insert(sub.members().to_vec(), key.clone());
        key
    }

    /// The class of the one-point set.
    pub fn one(&mut self) -> BurnsideElement {
        let whole = Subgroup::from_sorted_unchecked((0..self.group.order()).map(|r| self.group.by_rank(r)).collect());
        let key = self.key_of(&whole);
        let mut out = BurnsideElement::zero(self.group.clone());
        out.terms.insert(key, 1);
        out
    }

    /// `[S]` in the basis of transitive classes.
    pub fn decompose(&mut self, set: &GSet) -> Result<BurnsideElement> {
        self.check_group(set)?;
        let mut out = BurnsideElement::zero(self.group.clone());
        for orbit in set.orbits() {
            let stab = set.stabilizer(orbit[0]);
            let key = self.key_of(&stab);
            out.add_term(key, 1)?;
        }
        Ok(out)
    }

    /// Transitive representative `G/H` of a class.
    pub fn representative(&self, key: &OrbitClassKey) -> Result<GSet> {
        GSet::coset_space(self.group.clone(), &key.subgroup(&self.group))
    }

    fn class_product(&mut self, a: &OrbitClassKey, b: &OrbitClassKey) -> Result<BurnsideElement> {
        let pair = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(p) = self.products.get(&pair) {
            return Ok(p.clone());
        }
        let set = self.representative(&pair.0)?.product(&self.representative(&pair.1)?)?;
        let prod = self.decompose(&set)?;
        self.products.insert(pair, prod.clone());
        Ok(prod)
    }

    pub fn mul(&mut self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        let mut out = BurnsideElement::zero(self.group.clone());
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let prod = self.class_product(ka, kb)?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("Burnside product"))?;
                out.add_scaled(&prod, c)?;
            }
        }
        Ok(out)
    }

    /// `λ^0(S), …, λ^{max_i}(S)` from `σ_t(x)·λ_{-t}(x) = 1`, using only
    /// symmetric powers, products and decomposition.
    pub fn lambda_series(&mut self, set: &GSet, max_i: usize) -> Result<Vec<BurnsideElement>> {
        self.check_group(set)?;
        let mut sigmas = vec![self.one()];
        for j in 1..=max_i {
            let power = set.symmetric_power(j)?;
            sigmas.push(self.decompose(&power)?);
        }
        let mut lambdas = vec![self.one()];
        for i in 1..=max_i {
            let mut acc = BurnsideElement::zero(self.group.clone());
            for j in 0..i {
                let term = self.mul(&lambdas[j], &sigmas[i - j])?;
                let sign = if (i + 1 + j) % 2 == 0 { 1 } else { -1 };
                acc.add_scaled(&term, sign)?;
            }
            lambdas.push(acc);
        }
        Ok(lambdas)
    }

    pub fn lambda_general(&mut self, set: &GSet, i: usize) -> Result<BurnsideElement> {
        Ok(self.lambda_series(set, i)?.pop().expect("series is nonempty"))
    }

    /// `(-1)^i Σ_{μ ⊢ i} (-1)^{ℓ(μ)} (ℓ(μ); α(μ)) [P_μ(S)]`, and `0` for
    /// `i > |S|`.
    pub fn closed_lambda_general(&mut self, set: &GSet, i: usize) -> Result<BurnsideElement> {
        self.check_group(set)?;
        if i == 0 {
            return Ok(self.one());
        }
        let mut out = BurnsideElement::zero(self.group.clone());
        if i > set.len() {
            return Ok(out);
        }
        for mu in enumerate_partitions(i) {
            let m = Coeff::try_from(mu.multinomial()?).map_err(|_| Error::Overflow("multinomial"))?;
            let c = if (i + mu.len()).is_multiple_of(2) { m } else { -m };
            let class = self.decompose(&set.p_mu(&mu)?)?;
            out.add_scaled(&class, c)?;
        }
        Ok(out)
    }
}

/// Names for the classes `[P_μ^{(n)}]` inside `B(S_n)`.
#[derive(Debug, Clone)]
pub struct SchurNames {
    n: usize,
    by_key: BTreeMap<OrbitClassKey, Partition>,
}

impl SchurNames {
    /// Requires the ring's group to be the full symmetric group of its degree.
    pub fn new(ring: &mut BurnsideRing) -> Result<SchurNames> {
        let group = ring.group().clone();
        let n = group.degree();
        let full = crate::partitions::factorial(n as u128)?;
        if group.order() as u128 != full {
            return Err(Error::NotSymmetricGroup(n));
        }
        let mut by_key = BTreeMap::new();
        for mu in enumerate_partitions(n) {
            let key = ring.key_of(&young_subgroup(&group, &mu));
            by_key.insert(key, mu);
        }
        Ok(SchurNames { n, by_key })
    }

    pub fn name(&self, key: &OrbitClassKey) -> Option<&Partition> {
        self.by_key.get(key)
    }

    pub fn key_of(&self, mu: &Partition) -> Option<&OrbitClassKey> {
        self.by_key.iter().find(|(_, m)| *m == mu).map(|(k, _)| k)
    }

    /// The Schur-basis expression of `x`, or `None` if some class is not of
    /// the form `[P_μ]`.
    pub fn to_schur(&self, x: &BurnsideElement) -> Result<Option<SchurElement>> {
        let mut terms = Vec::new();
        for (k, c) in x.terms() {
            match self.name(k) {
                Some(mu) => terms.push((mu.clone(), c)),
                None => return Ok(None),
            }
        }
        SchurElement::from_terms(self.n, terms).map(Some)
    }

    /// The Burnside element with the same classes as `x`.
    pub fn from_schur(&self, x: &SchurElement, group: Arc<PermGroup>) -> Result<BurnsideElement> {
        if x.ambient() != self.n {
            return Err(Error::AmbientMismatch { left: x.ambient(), right: self.n });
        }
        let mut out = BurnsideElement::zero(group);
        for (mu, c) in x.terms() {
            let key = self.key_of(mu).expect("every partition of n is named").clone();
            out.add_term(key, c)?;
        }
        Ok(out)
    }
}

/// The permutations preserving each block of the standard ordered set
/// partition of shape `mu` (consecutive runs of points).
pub fn young_subgroup(group: &PermGroup, mu: &Partition) -> Subgroup {
    let mut block_of = Vec::with_capacity(group.degree());
    for (b, &size) in mu.parts().iter().enumerate() {
        block_of.extend(core::iter::repeat_n(b, size));
    }
    let mut members: Vec<usize> = (0..group.order())
        .filter(|&e| {
            let p = group.element(e);
            (0..group.degree()).all(|x| block_of[p.apply(x)] == block_of[x])
        })
        .collect();
    members.sort_unstable_by_key(|&e| group.rank(e));
    Subgroup::from_sorted_unchecked(members)
}

/// Classification of one orbit of an `S_n`-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitVerdict {
    pub orbit: Vec<usize>,
    pub stabilizer_order: usize,
    /// `Some(μ)` when the orbit is isomorphic to `P_μ^{(n)}`.
    pub schur: Option<Partition>,
}

/// For each orbit, the partition `μ` with orbit `≅ P_μ^{(n)}`, if any.
pub fn schur_membership(ring: &mut BurnsideRing, set: &GSet) -> Result<Vec<OrbitVerdict>> {
    let names = SchurNames::new(ring)?;
    ring.check_group(set)?;
    let mut out = Vec::new();
    for orbit in set.orbits() {
        let stab = set.stabilizer(orbit[0]);
        let key = ring.key_of(&stab);
        out.push(OrbitVerdict { stabilizer_order: stab.order(), schur: names.name(&key).cloned(), orbit });
    }
    Ok(out)
}

/// Searches for `g` with `g H g⁻¹ = K`.
pub fn conjugating_element(group: &PermGroup, h: &Subgroup, k: &Subgroup) -> Option<usize> {
    if h.order() != k.order() {
        return None;
    }
    (0..group.order()).find(|&g| h.conjugate_by(g, group) == *k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::group::Limits;
    use crate::engine::perm::Permutation;

    fn s(n: usize) -> Arc<PermGroup> {
        PermGroup::symmetric(n, Limits::default()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stabilizer_of_two_blocks() {
        let g = s(4);
        let set = GSet::natural(g.clone()).p_mu(&p(&[2, 2])).unwrap();
        let x = set
            .points()
            .iter()
            .position(|pt| *pt == super::super::gset::Point::Blocks(vec![vec![0, 1], vec![2, 3]]))
            .unwrap();
        let stab = set.stabilizer(x);
        assert_eq!(stab.order(), 4);
        let t12 = g.index_of(&Permutation::parse_cycles(4, "(1 2)").unwrap()).unwrap();
        let t34 = g.index_of(&Permutation::parse_cycles(4, "(3 4)").unwrap()).unwrap();
        assert!(stab.contains(t12, &g) && stab.contains(t34, &g));
    }

    #[test]
    fn decompose_product_matches_table_product() {
        let g = s(4);
        let mut ring = BurnsideRing::new(g.clone());
        let names = SchurNames::new(&mut ring).unwrap();
        let nat = GSet::natural(g);
        let a = nat.p_mu(&p(&[1])).unwrap();
        let prod = ring.decompose(&a.product(&a).unwrap()).unwrap();
        let expected = SchurElement::from_terms(4, [(p(&[3, 1]), 1), (p(&[2, 1, 1]), 1)]).unwrap();
        assert_eq!(names.to_schur(&prod).unwrap().unwrap(), expected);
    }

    #[test]
    fn transitive_and_doubled() {
        let g = s(4);
        let mut ring = BurnsideRing::new(g.clone());
        let nat = GSet::natural(g);
        let once = ring.decompose(&nat).unwrap();
        assert_eq!(once.terms().count(), 1);
        let twice = ring.decompose(&nat.disjoint_union(&nat).unwrap()).unwrap();
        assert_eq!(twice.terms().map(|(_, c)| c).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn small_lambda_agrees() {
        let g = s(3);
        let mut ring = BurnsideRing::new(g.clone());
        let nat = GSet::natural(g);
        for i in 0..=4 {
            let lhs = ring.lambda_general(&nat, i).unwrap();
            let rhs = ring.closed_lambda_general(&nat, i).unwrap();
            assert_eq!(lhs, rhs, "i={}", i);
        }
        assert!(ring.lambda_general(&nat, 4).unwrap().is_zero());
    }

    #[test]
    fn names_require_full_symmetric_group() {
        let c4 = PermGroup::cyclic(4, Limits::default()).unwrap();
        let mut ring = BurnsideRing::new(c4);
        assert!(matches!(SchurNames::new(&mut ring), Err(Error::NotSymmetricGroup(4))));
    }
}
