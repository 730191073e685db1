//! Fixed-point counts of the Schur basis at each cycle type.
//!
//! A tuple `(T_1, …, T_l) ∈ P_μ` is fixed by `σ` exactly when every block is
//! a union of cycles of `σ`, so `|P_μ^σ|` counts the assignments of the
//! (distinguishable) cycles of `σ` to the ordered blocks that fill block `j`
//! to exactly `μ_j`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{enumerate_partitions, Partition};
use crate::schur::SchurElement;
use crate::{Coeff, Error, Result};

/// `|P_μ^{σ}|` for any `σ` of cycle type `cycle_type`.
pub fn fixed_points(mu: &Partition, cycle_type: &Partition) -> Result<Coeff> {
    if mu.weight() != cycle_type.weight() {
        return Err(Error::WeightMismatch { left: mu.weight(), right: cycle_type.weight() });
    }
    // DP over cycles; state is the remaining capacity of each block
    let mut states: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
    states.insert(mu.parts().to_vec(), 1);
    for &len in cycle_type.parts() {
        let mut next: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
        for (caps, count) in states {
            for b in 0..caps.len() {
                if caps[b] >= len {
                    let mut c = caps.clone();
                    c[b] -= len;
                    let slot = next.entry(c).or_insert(0);
                    *slot = slot.checked_add(count).ok_or(Error::Overflow("fixed points"))?;
                }
            }
        }
        states = next;
    }
    Ok(states.values().sum())
}

/// `φ(x)`: one fixed-point count per cycle type of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkVector {
    ambient: usize,
    entries: BTreeMap<Partition, Coeff>,
}

impl MarkVector {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn get(&self, cycle_type: &Partition) -> Coeff {
        self.entries.get(cycle_type).copied().unwrap_or(0)
    }

    /// Entries in descending lex order of cycle type.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, Coeff)> + '_ {
        self.entries.iter().rev().map(|(k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Linear extension of [`fixed_points`] to a Schur element.
pub fn marks_of(x: &SchurElement) -> Result<MarkVector> {
    let n = x.ambient();
    let mut entries = BTreeMap::new();
    for nu in enumerate_partitions(n) {
        let mut total: Coeff = 0;
        for (mu, c) in x.terms() {
            let f = fixed_points(mu, &nu)?;
            total = c.checked_mul(f).and_then(|t| total.checked_add(t)).ok_or(Error::Overflow("marks"))?;
        }
        entries.insert(nu, total);
    }
    Ok(MarkVector { ambient: n, entries })
}

/// Rows are cycle types, columns block shapes, both in descending lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkMatrix {
    pub labels: Vec<Partition>,
    pub rows: Vec<Vec<Coeff>>,
}

impl MarkMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }
}

impl fmt::Display for MarkMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::{String, ToString};
        let labels: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let cell_w = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain(labels.iter().map(String::len))
            .max()
            .unwrap_or(1);
        write!(f, "{:label_w$}", "")?;
        for l in &labels {
            write!(f, " {:>cell_w$}", l)?;
        }
        writeln!(f)?;
        for (l, row) in labels.iter().zip(&self.rows) {
            write!(f, "{:label_w$}", l)?;
            for v in row {
                write!(f, " {:>cell_w$}", v)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn mark_matrix(n: usize) -> Result<MarkMatrix> {
    let labels = enumerate_partitions(n);
    let rows = labels
        .iter()
        .map(|nu| labels.iter().map(|mu| fixed_points(mu, nu)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(MarkMatrix { labels, rows })
}

/// A cell of the mark matrix that breaks triangularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFailure {
    pub cycle_type: Partition,
    pub shape: Partition,
    pub value: Coeff,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub n: usize,
    pub matrix: MarkMatrix,
    pub cells_checked: usize,
    pub failures: Vec<CellFailure>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the mark matrix is lower triangular with nonzero diagonal,
/// which makes [`marks_of`] injective on the Schur subring.
pub fn verify_injectivity(n: usize) -> Result<InjectivityReport> {
    let matrix = mark_matrix(n)?;
    let mut failures = Vec::new();
    let mut cells_checked = 0;
    for (r, row) in matrix.rows.iter().enumerate() {
        // labels are descending, so the row label exceeds the column label when r < c
        for (c, &value) in row.iter().enumerate().skip(r) {
            cells_checked += 1;
            let bad = match r == c {
                true if value == 0 => Some("zero diagonal"),
                false if value != 0 => Some("nonzero above diagonal"),
                _ => None,
            };
            if let Some(reason) = bad {
                failures.push(CellFailure {
                    cycle_type: matrix.labels[r].clone(),
                    shape: matrix.labels[c].clone(),
                    value,
                    reason,
                });
            }
        }
    }
    Ok(InjectivityReport { n, matrix, cells_checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fixed_point_examples() {
        for nu in enumerate_partitions(5) {
            assert_eq!(fixed_points(&p(&[5]), &nu).unwrap(), 1);
        }
        let n = 6;
        for mu in enumerate_partitions(n) {
            let expected = factorial(n as u128).unwrap()
                / mu.parts().iter().map(|&m| factorial(m as u128).unwrap()).product::<u128>();
            assert_eq!(fixed_points(&mu, &Partition::ones(n)).unwrap() as u128, expected);
        }
        assert_eq!(fixed_points(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert!(fixed_points(&p(&[2, 2]), &p(&[3, 2])).is_err());
    }

    #[test]
    fn small_matrices() {
        assert_eq!(mark_matrix(1).unwrap().rows, vec![vec![1]]);
        let m2 = mark_matrix(2).unwrap();
        assert_eq!(m2.labels, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(m2.rows, vec![vec![1, 0], vec![1, 2]]);
    }

    #[test]
    fn marks_of_simple_elements() {
        assert!(marks_of(&SchurElement::zero(4)).unwrap().is_zero());
        let one = marks_of(&SchurElement::one(5)).unwrap();
        assert_eq!(one.len(), 7);
        assert!(one.entries().all(|(_, v)| v == 1));
    }

    #[test]
    fn triangular_small() {
        for n in 1..=7 {
            let report = verify_injectivity(n).unwrap();
            assert!(report.passed(), "n={}: {:?}", n, report.failures);
        }
    }
}
