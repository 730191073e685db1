//! The Schur subring of `B(S_n)`: integer combinations of the classes
//! `[P_μ^{(n)}]`, `μ ⊢ n`.
//!
//! Basis keys are always padded partitions of the ambient `n`. The product
//! of two basis classes is read off from contingency tables: an orbit of
//! `S_n` on `P_μ × P_ν` is determined by the matrix of intersection sizes
//! `|S_i ∩ T_j|`, and its stabilizer is the stabilizer of the ordered
//! partition `(S_i ∩ T_j)`, so the orbit is `P_γ` with `γ` the nonzero
//! entries.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{enumerate_partitions, Composition, Partition};
use crate::{Coeff, Error, Result};

/// An element of the Schur subring of `B(S_n)` for a fixed ambient `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurElement {
    ambient: usize,
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SchurElement {
    pub fn zero(n: usize) -> Self {
        SchurElement { ambient: n, coeffs: BTreeMap::new() }
    }

    /// The class of the one-point set, `[P_{(n)}]`.
    pub fn one(n: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::single(n), 1);
        SchurElement { ambient: n, coeffs }
    }

    /// `1·[P_{pad(μ, n)}]`.
    pub fn basis(mu: &Partition, n: usize) -> Result<Self> {
        let key = mu.pad(n)?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key, 1);
        Ok(SchurElement { ambient: n, coeffs })
    }

    /// Builds an element from `(partition, coefficient)` pairs. Partitions
    /// of weight below `n` are padded; repeated keys are summed.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut out = SchurElement::zero(n);
        for (mu, c) in terms {
            out.add_term(mu.pad(n)?, c)?;
        }
        Ok(out)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> Coeff {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending lex order of their keys.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, Coeff)> + '_ {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    fn add_term(&mut self, key: Partition, c: Coeff) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.coeffs.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let v = slot.get().checked_add(c).ok_or(Error::Overflow("Schur coefficient"))?;
                if v == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    fn check_ambient(&self, other: &SchurElement) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SchurElement) -> Result<SchurElement> {
        self.checked_add(&other.scale(-1)?)
    }

    pub fn scale(&self, factor: Coeff) -> Result<SchurElement> {
        let mut out = SchurElement::zero(self.ambient);
        if factor == 0 {
            return Ok(out);
        }
        for (k, c) in self.terms() {
            let v = c.checked_mul(factor).ok_or(Error::Overflow("Schur coefficient"))?;
            out.coeffs.insert(k.clone(), v);
        }
        Ok(out)
    }

    /// Number of points of the underlying virtual `S_n`-set.
    pub fn cardinality(&self) -> Result<Coeff> {
        self.terms().try_fold(0 as Coeff, |acc, (mu, c)| {
            let size = Coeff::try_from(mu.tuple_count()?).map_err(|_| Error::Overflow("cardinality"))?;
            c.checked_mul(size).and_then(|t| acc.checked_add(t)).ok_or(Error::Overflow("cardinality"))
        })
    }
}

/// Terms are written in descending lex order of their keys.
impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (j, (mu, c)) in self.terms().rev().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{:+}*[P(", c)?;
            for (t, p) in mu.parts().iter().enumerate() {
                if t > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p)?;
            }
            f.write_str(")]")?;
        }
        write!(f, " @ n={}", self.ambient)
    }
}

/// A nonnegative integer matrix with prescribed row and column sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    pub rows: Composition,
    pub cols: Composition,
    pub entries: Vec<Vec<usize>>,
}

impl ContingencyTable {
    /// Sorted nonzero entries: the shape of the orbit this table labels.
    pub fn shape(&self) -> Partition {
        let parts = self.entries.iter().flatten().copied().filter(|&e| e > 0).collect();
        Partition::from_unsorted(parts).expect("entries are positive")
    }

    pub fn is_valid(&self) -> bool {
        let row_ok = self.entries.len() == self.rows.len()
            && self
                .entries
                .iter()
                .zip(self.rows.parts())
                .all(|(r, &s)| r.len() == self.cols.len() && r.iter().sum::<usize>() == s);
        let col_ok =
            (0..self.cols.len()).all(|j| self.entries.iter().map(|r| r[j]).sum::<usize>() == self.cols.parts()[j]);
        row_ok && col_ok
    }
}

/// Every table with the given margins, in row-major lexicographic order of
/// the entries.
pub fn contingency_tables(rows: &Composition, cols: &Composition) -> Result<Vec<ContingencyTable>> {
    if rows.weight() != cols.weight() {
        return Err(Error::WeightMismatch { left: rows.weight(), right: cols.weight() });
    }
    let mut out = Vec::new();
    let mut entries = vec![vec![0; cols.len()]; rows.len()];
    let mut caps = cols.parts().to_vec();
    tables_from(rows, cols, 0, 0, rows.parts().first().copied().unwrap_or(0), &mut caps, &mut entries, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn tables_from(
    rows: &Composition,
    cols: &Composition,
    r: usize,
    c: usize,
    row_left: usize,
    caps: &mut Vec<usize>,
    entries: &mut Vec<Vec<usize>>,
    out: &mut Vec<ContingencyTable>,
) {
    if r == rows.len() {
        out.push(ContingencyTable { rows: rows.clone(), cols: cols.clone(), entries: entries.clone() });
        return;
    }
    if c + 1 == cols.len() {
        // last column takes what is left of the row
        if row_left > caps[c] {
            return;
        }
        entries[r][c] = row_left;
        caps[c] -= row_left;
        let next = rows.parts().get(r + 1).copied().unwrap_or(0);
        tables_from(rows, cols, r + 1, 0, next, caps, entries, out);
        caps[c] += row_left;
        entries[r][c] = 0;
        return;
    }
    let later: usize = caps[c + 1..].iter().sum();
    let lo = row_left.saturating_sub(later);
    for e in lo..=row_left.min(caps[c]) {
        entries[r][c] = e;
        caps[c] -= e;
        tables_from(rows, cols, r, c + 1, row_left - e, caps, entries, out);
        caps[c] += e;
    }
    entries[r][c] = 0;
}

/// Orbit decomposition of `P_μ × P_ν` as a map shape → number of tables.
///
/// Equivalent to tallying [`contingency_tables`] by [`ContingencyTable::shape`],
/// but merges partial tables that share the remaining column capacities and
/// the multiset of entries placed so far.
pub fn basis_product(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, Coeff>> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { left: mu.weight(), right: nu.weight() });
    }
    // state: (remaining column capacities, sorted nonzero entries so far)
    let mut states: BTreeMap<(Vec<usize>, Vec<usize>), Coeff> = BTreeMap::new();
    states.insert((nu.parts().to_vec(), Vec::new()), 1);
    for &row in mu.parts() {
        let mut next: BTreeMap<(Vec<usize>, Vec<usize>), Coeff> = BTreeMap::new();
        for ((caps, placed), count) in states {
            let mut fill = vec![0; caps.len()];
            distribute(row, &caps, 0, &mut fill, &mut |fill| {
                let new_caps: Vec<usize> = caps.iter().zip(fill).map(|(c, f)| c - f).collect();
                let mut new_placed = placed.clone();
                new_placed.extend(fill.iter().copied().filter(|&f| f > 0));
                new_placed.sort_unstable_by(|a, b| b.cmp(a));
                let slot = next.entry((new_caps, new_placed)).or_insert(0);
                *slot = slot.checked_add(count).ok_or(Error::Overflow("table count"))?;
                Ok(())
            })?;
        }
        states = next;
    }
    let mut out = BTreeMap::new();
    for ((caps, placed), count) in states {
        debug_assert!(caps.iter().all(|&c| c == 0));
        out.insert(Partition::new(placed)?, count);
    }
    Ok(out)
}

fn distribute<F>(left: usize, caps: &[usize], at: usize, fill: &mut Vec<usize>, emit: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if at + 1 == caps.len() {
        if left > caps[at] {
            return Ok(());
        }
        fill[at] = left;
        let res = emit(fill);
        fill[at] = 0;
        return res;
    }
    let later: usize = caps[at + 1..].iter().sum();
    for e in left.saturating_sub(later)..=left.min(caps[at]) {
        fill[at] = e;
        distribute(left - e, caps, at + 1, fill, emit)?;
    }
    fill[at] = 0;
    Ok(())
}

/// Memoises basis products for one ambient `n`.
#[derive(Debug, Default)]
pub struct SchurMultiplier {
    cache: BTreeMap<(Partition, Partition), BTreeMap<Partition, Coeff>>,
}

impl SchurMultiplier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul(&mut self, a: &SchurElement, b: &SchurElement) -> Result<SchurElement> {
        a.check_ambient(b)?;
        let mut out = SchurElement::zero(a.ambient);
        for (mu, ca) in a.terms() {
            for (nu, cb) in b.terms() {
                let key = if mu <= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
                if !self.cache.contains_key(&key) {
                    let prod = basis_product(&key.0, &key.1)?;
                    self.cache.insert(key.clone(), prod);
                }
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("Schur product"))?;
                for (gamma, m) in &self.cache[&key] {
                    let t = c.checked_mul(*m).ok_or(Error::Overflow("Schur product"))?;
                    out.add_term(gamma.clone(), t)?;
                }
            }
        }
        Ok(out)
    }
}

/// Product in the Schur subring.
pub fn schur_mul(a: &SchurElement, b: &SchurElement) -> Result<SchurElement> {
    SchurMultiplier::new().mul(a, b)
}

/// `σ^i({1..n}) = Σ_{μ ⊢ i, ℓ(μ) ≤ n} [P_{α(μ)}^{(n)}]`.
pub fn sigma(i: usize, n: usize) -> Result<SchurElement> {
    if i == 0 {
        return Ok(SchurElement::one(n));
    }
    let mut out = SchurElement::zero(n);
    for mu in enumerate_partitions(i).into_iter().filter(|mu| mu.len() <= n) {
        let key = Composition::from(mu.alpha()).sorted().pad(n)?;
        out.add_term(key, 1)?;
    }
    Ok(out)
}

/// `λ^0, …, λ^{max_i}` of `{1..n}` from `σ_t(x)·λ_{-t}(x) = 1`, i.e.
/// `λ^i = (-1)^{i+1} Σ_{j<i} (-1)^j λ^j σ^{i-j}`.
///
/// Every `λ^i` with `i > n` is checked to vanish; a nonzero value is
/// reported as [`Error::IdentityViolated`].
pub fn recursive_lambda_series(max_i: usize, n: usize) -> Result<Vec<SchurElement>> {
    let sigmas = (0..=max_i).map(|i| sigma(i, n)).collect::<Result<Vec<_>>>()?;
    let mut mult = SchurMultiplier::new();
    let mut lambdas = vec![SchurElement::one(n)];
    for i in 1..=max_i {
        let mut acc = SchurElement::zero(n);
        for (j, lambda_j) in lambdas.iter().enumerate() {
            let term = mult.mul(lambda_j, &sigmas[i - j])?;
            acc = if j % 2 == 0 { acc.checked_add(&term)? } else { acc.checked_sub(&term)? };
        }
        let lambda_i = if i % 2 == 1 { acc } else { acc.scale(-1)? };
        if i > n && !lambda_i.is_zero() {
            return Err(Error::IdentityViolated(format!(
                "lambda^{} of an {}-point set is {}, expected 0",
                i, n, lambda_i
            )));
        }
        lambdas.push(lambda_i);
    }
    Ok(lambdas)
}

pub fn recursive_lambda(i: usize, n: usize) -> Result<SchurElement> {
    Ok(recursive_lambda_series(i, n)?.pop().expect("series is nonempty"))
}

/// `λ^i({1..n}) = (-1)^i Σ_{μ ⊢ i} (-1)^{ℓ(μ)} (ℓ(μ); α(μ)) [P_μ^{(n)}]`.
pub fn closed_lambda(i: usize, n: usize) -> Result<SchurElement> {
    if i == 0 {
        return Ok(SchurElement::one(n));
    }
    let mut out = SchurElement::zero(n);
    if i > n {
        return Ok(out);
    }
    for mu in enumerate_partitions(i) {
        let m = Coeff::try_from(mu.multinomial()?).map_err(|_| Error::Overflow("multinomial"))?;
        let c = if (i + mu.len()).is_multiple_of(2) { m } else { -m };
        out.add_term(mu.pad(n)?, c)?;
    }
    Ok(out)
}

/// Degree of `[P_μ^{(n)}]` relative to the cut-off `k` (`2k < n`): `0` for
/// `(n)`, `j ≤ k` if `n - j` is a part of `μ`, and `k + 1` otherwise.
pub fn degree(mu: &Partition, n: usize, k: usize) -> Result<usize> {
    if 2 * k >= n {
        return Err(Error::DegreeOutOfRange { k, n });
    }
    if mu.weight() != n {
        return Err(Error::WeightMismatch { left: mu.weight(), right: n });
    }
    if mu.parts() == [n] {
        return Ok(0);
    }
    Ok((1..=k).find(|&j| mu.contains_part(n - j)).unwrap_or(k + 1))
}

/// For a basis key of degree `j ≤ k`, the partition `ν ⊢ j` with
/// `[P_μ^{(n)}] = [P_ν^{(n)}]`. `None` for the catch-all degree `k + 1`.
pub fn reduced_shape(mu: &Partition, n: usize, k: usize) -> Result<Option<Partition>> {
    let d = degree(mu, n, k)?;
    if d > k {
        return Ok(None);
    }
    Ok(mu.without_part(n - d))
}

/// Outcome of checking the leading term of one basis product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTerm {
    pub left: Partition,
    pub right: Partition,
    /// The concatenation class `[P_{α,β}]`.
    pub expected: Partition,
    pub expected_coeff: Coeff,
    /// Terms other than the concatenation class with degree `≥ m + m'`.
    pub offending: Vec<(Partition, usize)>,
}

impl LeadingTerm {
    pub fn holds(&self) -> bool {
        self.expected_coeff == 1 && self.offending.is_empty()
    }
}

/// Checks `[P_α][P_β] = [P_{α,β}] + (terms of degree < m + m')` for two
/// basis keys of degrees `m, m' ≤ k`. Returns `None` when a key has the
/// catch-all degree or `m + m' > n / 2`.
pub fn leading_term(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<Option<LeadingTerm>> {
    let (Some(a), Some(b)) = (reduced_shape(mu, n, k)?, reduced_shape(nu, n, k)?) else {
        return Ok(None);
    };
    let target = a.weight() + b.weight();
    if 2 * target > n {
        return Ok(None);
    }
    let expected = a.union(&b).pad(n)?;
    let product = basis_product(mu, nu)?;
    let mut offending = Vec::new();
    for (gamma, _) in product.iter().filter(|(g, _)| **g != expected) {
        let d = degree(gamma, n, k)?;
        if d >= target {
            offending.push((gamma.clone(), d));
        }
    }
    Ok(Some(LeadingTerm {
        left: mu.clone(),
        right: nu.clone(),
        expected_coeff: product.get(&expected).copied().unwrap_or(0),
        expected,
        offending,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn el(n: usize, terms: &[(&[usize], Coeff)]) -> SchurElement {
        SchurElement::from_terms(n, terms.iter().map(|(k, c)| (p(k), *c))).unwrap()
    }

    #[test]
    fn basis_elements() {
        assert_eq!(SchurElement::basis(&p(&[1]), 5).unwrap(), el(5, &[(&[4, 1], 1)]));
        assert_eq!(SchurElement::basis(&p(&[6]), 6).unwrap(), SchurElement::one(6));
        assert_eq!(SchurElement::basis(&p(&[2, 1]), 3).unwrap(), el(3, &[(&[2, 1], 1)]));
        assert!(SchurElement::basis(&p(&[3, 1]), 3).is_err());
    }

    #[test]
    fn products_of_basis_classes() {
        let x = el(4, &[(&[3, 1], 1)]);
        assert_eq!(schur_mul(&x, &x).unwrap(), el(4, &[(&[3, 1], 1), (&[2, 1, 1], 1)]));
        let y = el(4, &[(&[2, 2], 1)]);
        assert_eq!(schur_mul(&y, &y).unwrap(), el(4, &[(&[2, 2], 2), (&[1, 1, 1, 1], 1)]));
        assert_eq!(schur_mul(&SchurElement::one(4), &y).unwrap(), y);
        assert!(matches!(schur_mul(&x, &SchurElement::one(5)), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn tables_are_row_major_lex() {
        let rows = Composition::new(vec![2, 2]).unwrap();
        let tables = contingency_tables(&rows, &rows).unwrap();
        let entries: Vec<_> = tables.iter().map(|t| t.entries.clone()).collect();
        assert_eq!(
            entries,
            vec![vec![vec![0, 2], vec![2, 0]], vec![vec![1, 1], vec![1, 1]], vec![vec![2, 0], vec![0, 2]]]
        );
        assert!(tables.iter().all(ContingencyTable::is_valid));
    }

    #[test]
    fn sigma_small() {
        assert_eq!(sigma(1, 6).unwrap(), el(6, &[(&[5, 1], 1)]));
        assert_eq!(sigma(2, 5).unwrap(), el(5, &[(&[4, 1], 1), (&[3, 2], 1)]));
        assert_eq!(sigma(2, 1).unwrap(), SchurElement::one(1));
        assert_eq!(sigma(0, 5).unwrap(), SchurElement::one(5));
    }

    #[test]
    fn lambda_small() {
        assert_eq!(recursive_lambda(1, 3).unwrap(), el(3, &[(&[2, 1], 1)]));
        let expected = el(4, &[(&[2, 1, 1], 1), (&[2, 2], -1)]);
        assert_eq!(recursive_lambda(2, 4).unwrap(), expected);
        assert_eq!(closed_lambda(2, 4).unwrap(), expected);
        assert!(recursive_lambda(5, 4).unwrap().is_zero());
        assert_eq!(closed_lambda(3, 3).unwrap(), el(3, &[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)]));
        assert_eq!(closed_lambda(1, 7).unwrap(), el(7, &[(&[6, 1], 1)]));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&p(&[10]), 10, 4).unwrap(), 0);
        assert_eq!(degree(&p(&[6, 3, 1]), 10, 4).unwrap(), 4);
        assert_eq!(degree(&p(&[3, 3, 2, 2]), 10, 4).unwrap(), 5);
        assert!(matches!(degree(&p(&[5, 5]), 10, 5), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn cardinalities() {
        assert_eq!(SchurElement::one(7).cardinality().unwrap(), 1);
        assert_eq!(el(4, &[(&[2, 2], 1)]).cardinality().unwrap(), 6);
        assert_eq!(closed_lambda(3, 6).unwrap().cardinality().unwrap(), 20);
    }

    #[test]
    fn text_rendering() {
        let x = el(4, &[(&[2, 1, 1], 1), (&[2, 2], -1)]);
        assert_eq!(x.to_string(), "-1*[P(2,2)] +1*[P(2,1,1)] @ n=4");
        assert_eq!(SchurElement::zero(3).to_string(), "0");
        assert_eq!(sigma(2, 4).unwrap().to_string(), "+1*[P(3,1)] +1*[P(2,2)] @ n=4");
    }
}
