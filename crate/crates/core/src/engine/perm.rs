use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A bijection of `{0, …, n-1}`. Displayed and parsed 1-based, in disjoint
/// cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{:?} is not a bijection", images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based cycles, e.g. `&[vec![1, 2], vec![3, 4]]` for `(1 2)(3 4)`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = alloc::vec![false; degree];
        for cycle in cycles {
            for (j, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!("point {} outside 1..={}", x, degree)));
                }
                if used[x - 1] {
                    return Err(Error::InvalidPermutation(format!("point {} repeated in cycles", x)));
                }
                used[x - 1] = true;
                let next = cycle[(j + 1) % cycle.len()];
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `(first first+1 … last)`, 1-based and inclusive.
    pub fn cycle_range(degree: usize, first: usize, last: usize) -> Result<Self> {
        Permutation::from_cycles(degree, &[(first..=last).collect()])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> crate::Partition {
        let mut seen = alloc::vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            lens.push(len);
        }
        crate::Partition::from_unsorted(lens).expect("cycle lengths are positive")
    }

    /// Parses `(1 2)(3 4)`, `()` or `id`. Commas are accepted as separators.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        Permutation::from_cycles(degree, &parse_cycle_notation(s)?)
    }
}

/// Splits cycle notation into 1-based cycles without fixing a degree.
pub fn parse_cycle_notation(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s == "id" || s == "()" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open =
            rest.strip_prefix('(').ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {:?}", s)))?;
        let close = open.find(')').ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {:?}", s)))?;
        let body = &open[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad point {:?} in {:?}", t, s))))
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (j, x) in cycle.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(p.cycle_type().parts(), &[3, 2]);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn composition_applies_right_first() {
        let a = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2 3)").unwrap();
        // (1 2)(2 3) sends 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b), Permutation::parse_cycles(3, "(1 2 3)").unwrap());
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
    }
}
