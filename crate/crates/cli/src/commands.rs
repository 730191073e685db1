//! One function per subcommand. Each returns a [`CommandResult`] whose
//! status is `Error` when a verification fails.

use std::path::Path;

use burnside_core::engine::{
    verify_induced_lambda, verify_induced_shape, BurnsideRing, GSet, Limits, PermGroup, SchurNames,
};
use burnside_core::schur::{leading_term, recursive_lambda_series, schur_mul};
use burnside_core::{
    closed_lambda, enumerate_partitions, mark_matrix, recursive_lambda, sigma, verify_injectivity, Error, Partition,
    SchurElement,
};

use crate::groupfile::GroupFile;
use crate::output::{
    burnside_terms, CommandResult, IndresReport, InducedLambda, InducedShape, LambdaReport, MarksJson, OracleReport,
    OracleRow, Payload, SchurJson, Status, Tally, VerifyReport,
};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Closed,
    Recursive,
    Both,
}

/// The `G`-set built from the natural action of a group file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Action {
    /// The points `{1..d}`.
    Natural,
    /// Unordered pairs with repetition, `σ²` of the natural set.
    Sym2,
    /// Ordered pairs, the natural set times itself.
    Square,
    /// Two disjoint copies of the natural set.
    Double,
}

impl Action {
    fn name(self) -> &'static str {
        match self {
            Action::Natural => "natural",
            Action::Sym2 => "sym2",
            Action::Square => "square",
            Action::Double => "double",
        }
    }

    fn build(self, group: std::sync::Arc<PermGroup>) -> Result<GSet, CliError> {
        let natural = GSet::natural(group);
        Ok(match self {
            Action::Natural => natural,
            Action::Sym2 => natural.symmetric_power(2)?,
            Action::Square => natural.product(&natural)?,
            Action::Double => natural.disjoint_union(&natural)?,
        })
    }
}

fn verdict(mut r: CommandResult, ok: bool) -> CommandResult {
    if !ok {
        r.status = Status::Error;
    }
    r
}

pub fn lambda(n: usize, i: usize, method: Method) -> Result<CommandResult, CliError> {
    let closed = match method {
        Method::Closed | Method::Both => Some(closed_lambda(i, n)?),
        Method::Recursive => None,
    };
    let recursive = match method {
        Method::Recursive | Method::Both => Some(recursive_lambda(i, n)?),
        Method::Closed => None,
    };
    let equal = match (&closed, &recursive) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let report = LambdaReport {
        n,
        i,
        closed: closed.as_ref().map(SchurJson::from),
        recursive: recursive.as_ref().map(SchurJson::from),
        equal,
    };
    Ok(verdict(CommandResult::ok("lambda", Payload::Lambda(report)), equal != Some(false)))
}

pub fn sigma_cmd(n: usize, i: usize) -> Result<CommandResult, CliError> {
    Ok(CommandResult::ok("sigma", Payload::Element(SchurJson::from(&sigma(i, n)?))))
}

pub fn mul(n: usize, a: &Partition, b: &Partition) -> Result<CommandResult, CliError> {
    let x = SchurElement::basis(a, n)?;
    let y = SchurElement::basis(b, n)?;
    let product = schur_mul(&x, &y)?;
    let (cx, cy, cp) = (x.cardinality()?, y.cardinality()?, product.cardinality()?);
    let mut r = CommandResult::ok("mul", Payload::Element(SchurJson::from(&product)));
    r.diagnostics.push(format!("cardinality {} = {} * {}", cp, cx, cy));
    let consistent = cx.checked_mul(cy) == Some(cp);
    if !consistent {
        r.diagnostics.push("cardinality is not multiplicative".to_string());
    }
    Ok(verdict(r, consistent))
}

pub fn marks(n: usize) -> Result<CommandResult, CliError> {
    let m = mark_matrix(n)?;
    let payload = MarksJson { n, labels: m.labels.iter().map(ToString::to_string).collect(), rows: m.rows };
    Ok(CommandResult::ok("marks", Payload::Marks(payload)))
}

/// Closed versus recursive `λ^i` for `1 ≤ i ≤ min(n, i_max)`, `n ≤ n_max`;
/// triangularity of every mark matrix; leading terms of basis products
/// for `k = ⌊(n-1)/2⌋`.
pub fn verify(n_max: usize, i_max: Option<usize>) -> Result<CommandResult, CliError> {
    let mut lambda = Tally::new();
    let mut marks = Tally::new();
    let mut leading = Tally::new();
    for n in 1..=n_max {
        let top = i_max.map_or(n, |m| m.min(n));
        let series = recursive_lambda_series(top, n)?;
        for (i, rec) in series.iter().enumerate().skip(1) {
            let closed = closed_lambda(i, n)?;
            lambda
                .record(closed == *rec, || format!("lambda^{} at n={}: closed {} vs recursive {}", i, n, closed, rec));
        }
        let report = verify_injectivity(n)?;
        marks.record(report.passed(), || {
            let cells: Vec<String> = report
                .failures
                .iter()
                .map(|c| format!("({}, {}) = {}: {}", c.cycle_type, c.shape, c.value, c.reason))
                .collect();
            format!("mark matrix n={}: {}", n, cells.join("; "))
        });
        if n >= 3 {
            let k = (n - 1) / 2;
            let basis = enumerate_partitions(n);
            for (a, mu) in basis.iter().enumerate() {
                for nu in &basis[a..] {
                    if let Some(t) = leading_term(mu, nu, n, k)? {
                        leading.record(t.holds(), || {
                            format!(
                                "leading term n={} k={}: {} * {} has {} with coefficient {}, offending {:?}",
                                n, k, t.left, t.right, t.expected, t.expected_coeff, t.offending
                            )
                        });
                    }
                }
            }
        }
    }
    let ok = lambda.all_passed() && marks.all_passed() && leading.all_passed();
    let report = VerifyReport { n_max, i_max, lambda, marks, leading_terms: leading };
    Ok(verdict(CommandResult::ok("verify", Payload::Verify(report)), ok))
}

/// Closed formula against the recursion in the Burnside ring of the group
/// read from `path`, for one `i` or all `0 ≤ i ≤ |S| + 1`.
pub fn oracle(path: &Path, action: Action, i: Option<usize>, limits: Limits) -> Result<CommandResult, CliError> {
    let file = GroupFile::read(path)?;
    let group = file.group(limits)?;
    let set = action.build(group.clone())?;
    let mut ring = BurnsideRing::new(group.clone());
    let names = SchurNames::new(&mut ring).ok();
    let range: Vec<usize> = match i {
        Some(i) => vec![i],
        None => (0..=set.len() + 1).collect(),
    };
    let top = *range.last().expect("range is nonempty");
    // the largest P_μ(S) needed is the set of injective i-tuples
    let size = set.len() as u128;
    let widest = (0..top.min(set.len()) as u128).try_fold(1u128, |acc, j| acc.checked_mul(size - j));
    if widest.is_none_or(|w| w > limits.points as u128) {
        return Err(Error::PointCapExceeded {
            construction: "P_mu",
            size: widest.unwrap_or(u128::MAX),
            cap: limits.points,
        }
        .into());
    }
    let series = ring.lambda_series(&set, top)?;
    let mut rows = Vec::new();
    for &i in &range {
        let closed = ring.closed_lambda_general(&set, i)?;
        let recursive = &series[i];
        rows.push(OracleRow {
            i,
            equal: closed == *recursive,
            closed: burnside_terms(&closed, names.as_ref()),
            recursive: burnside_terms(recursive, names.as_ref()),
        });
    }
    let ok = rows.iter().all(|r| r.equal);
    let report = OracleReport {
        degree: group.degree(),
        group_order: group.order(),
        action: action.name().to_string(),
        set_size: set.len(),
        rows,
    };
    let mut r = CommandResult::ok("oracle", Payload::Oracle(report));
    if names.is_none() {
        r.diagnostics.push("group is not the full symmetric group; classes are shown unnamed".to_string());
    }
    Ok(verdict(r, ok))
}

/// Induction after restriction from `S_i` to `S_n`, on every `P_μ` with
/// `μ ⊢ i` and on `λ^i`.
pub fn indres(i: usize, n: usize, limits: Limits) -> Result<CommandResult, CliError> {
    if i > n {
        return Err(CliError::Usage(format!("--i {} exceeds --n {}", i, n)));
    }
    let mut shapes = Vec::new();
    for mu in enumerate_partitions(i) {
        let r = verify_induced_shape(&mu, n, limits)?;
        shapes.push(InducedShape {
            mu: mu.to_string(),
            induced_size: r.induced_size,
            expected_size: r.expected_size,
            transitive: r.transitive,
            conjugate_stabilizers: r.conjugate_stabilizers,
            passed: r.passed(),
        });
    }
    let r = verify_induced_lambda(i, n, limits)?;
    let mut ring = BurnsideRing::new(r.rhs.group().clone());
    let names = SchurNames::new(&mut ring)?;
    let lambda = InducedLambda {
        lhs: burnside_terms(&r.lhs, Some(&names)),
        rhs: burnside_terms(&r.rhs, Some(&names)),
        lhs_schur: r.lhs_schur.as_ref().map(SchurJson::from),
        rhs_schur: r.rhs_schur.as_ref().map(SchurJson::from),
        passed: r.passed(),
    };
    let ok = lambda.passed && shapes.iter().all(|s| s.passed);
    let report = IndresReport { i, n, shapes, lambda };
    Ok(verdict(CommandResult::ok("indres", Payload::Indres(report)), ok))
}
