//! Integer partitions, compositions and the combinatorics attached to them.
//!
//! Partitions are always stored weakly decreasing; compositions keep the
//! order they were given in. Converting one into the other is explicit
//! ([`Composition::sorted`]).

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A weakly decreasing tuple of positive integers.
///
/// Ordering is lexicographic on the parts, which for partitions of equal
/// weight is the order obtained by padding the shorter one with zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {:?}", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: alloc::vec![n] }
        }
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition { parts: alloc::vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, part: usize) -> bool {
        self.parts.contains(&part)
    }

    /// Run lengths of equal parts, largest part first.
    pub fn alpha(&self) -> MultiplicityProfile {
        let mut counts = Vec::new();
        let mut iter = self.parts.iter().peekable();
        while let Some(&p) = iter.next() {
            let mut run = 1;
            while iter.peek() == Some(&&p) {
                iter.next();
                run += 1;
            }
            counts.push(run);
        }
        MultiplicityProfile { counts }
    }

    /// `ℓ(μ)! / ∏ α_j(μ)!`.
    pub fn multinomial(&self) -> Result<u128> {
        self.alpha().multinomial()
    }

    /// Inserts the part `n - weight` and re-sorts. Identity when the weight
    /// already equals `n`.
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let weight = self.weight();
        if weight > n {
            return Err(Error::PadTooSmall { weight, ambient: n });
        }
        if weight == n {
            return Ok(self.clone());
        }
        let extra = n - weight;
        let at = self.parts.iter().position(|&p| p < extra).unwrap_or(self.parts.len());
        let mut parts = self.parts.clone();
        parts.insert(at, extra);
        Ok(Partition { parts })
    }

    /// Removes one occurrence of `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let at = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(at);
        Some(Partition { parts })
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `n! / ∏ μ_j!` where `n` is the weight: the size of `P_μ^{(n)}`.
    pub fn tuple_count(&self) -> Result<u128> {
        let mut remaining = self.weight() as u128;
        let mut total: u128 = 1;
        for &p in &self.parts {
            total = total.checked_mul(binomial(remaining, p as u128)?).ok_or(Error::Overflow("tuple count"))?;
            remaining -= p as u128;
        }
        Ok(total)
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// An ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {:?}", parts)));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(α, n - i)`: appends the complementary block.
    pub fn pad(&self, n: usize) -> Result<Composition> {
        let weight = self.weight();
        if weight > n {
            return Err(Error::PadTooSmall { weight, ambient: n });
        }
        let mut parts = self.parts.clone();
        if weight < n {
            parts.push(n - weight);
        }
        Ok(Composition { parts })
    }

    /// Concatenation `(α, β)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// The partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl From<MultiplicityProfile> for Composition {
    fn from(a: MultiplicityProfile) -> Self {
        Composition { parts: a.counts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// The tuple `α(μ)` of run lengths of a partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityProfile {
    counts: Vec<usize>,
}

impl MultiplicityProfile {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `(Σα)! / ∏ α_j!`, accumulated as a product of binomials so the
    /// intermediate values stay as small as the result allows.
    pub fn multinomial(&self) -> Result<u128> {
        let mut seen: u128 = 0;
        let mut total: u128 = 1;
        for &a in &self.counts {
            seen += a as u128;
            total = total.checked_mul(binomial(seen, a as u128)?).ok_or(Error::Overflow("multinomial"))?;
        }
        Ok(total)
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.counts)
    }
}

/// All partitions of `i` in strictly decreasing lexicographic order.
///
/// `i = 0` yields the single empty partition.
pub fn enumerate_partitions(i: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(i, i, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Lexicographic comparison of two partitions of the same weight.
pub fn lex_compare(mu: &Partition, nu: &Partition) -> Result<Ordering> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { left: mu.weight(), right: nu.weight() });
    }
    Ok(mu.cmp(nu))
}

/// Checked binomial coefficient.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc * (n - j) is divisible by (j + 1) at every step
        acc = acc.checked_mul(n - j).ok_or(Error::Overflow("binomial"))? / (j + 1);
    }
    Ok(acc)
}

/// Checked factorial.
pub fn factorial(n: u128) -> Result<u128> {
    (1..=n).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (j, p) in parts.iter().enumerate() {
        if j > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", p)?;
    }
    f.write_str("]")
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .or_else(|| s.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
        .unwrap_or(s)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>().map_err(|_| Error::InvalidPartition(format!("cannot parse part {:?} in {:?}", t, s)))
        })
        .collect()
}
