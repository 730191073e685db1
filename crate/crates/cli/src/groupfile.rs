//! Plain-text group files.
//!
//! One generator per line in disjoint-cycle notation, e.g. `(1 2)(3 4)`.
//! Blank lines and `#` comments are ignored. An optional `degree N` line
//! fixes the degree; otherwise it is the largest moved point.

use std::path::Path;
use std::sync::Arc;

use burnside_core::engine::{parse_cycle_notation, Limits, PermGroup, Permutation};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, CliError> {
        let mut degree = None;
        let mut cycles = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() {
                    return Err(CliError::parse(line_no, "duplicate degree header"));
                }
                if !cycles.is_empty() {
                    return Err(CliError::parse(line_no, "degree header must precede generators"));
                }
                let d = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::parse(line_no, format!("bad degree {:?}", rest.trim())))?;
                degree = Some(d);
                continue;
            }
            let parsed = parse_cycle_notation(line).map_err(|e| CliError::parse(line_no, e.to_string()))?;
            cycles.push((line_no, parsed));
        }
        let moved = cycles.iter().flat_map(|(_, c)| c.iter().flatten()).copied().max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < moved => {
                return Err(CliError::parse(0, format!("point {} exceeds declared degree {}", moved, d)))
            }
            Some(d) => d,
            None => moved,
        };
        let generators = cycles
            .into_iter()
            .map(|(line_no, c)| {
                Permutation::from_cycles(degree, &c).map_err(|e| CliError::parse(line_no, e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupFile { degree, generators })
    }

    pub fn read(path: &Path) -> Result<GroupFile, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {}", path.display(), e)))?;
        GroupFile::parse(&text)
    }

    pub fn group(&self, limits: Limits) -> Result<Arc<PermGroup>, CliError> {
        Ok(PermGroup::closure(self.degree, self.generators.clone(), limits)?)
    }
}
