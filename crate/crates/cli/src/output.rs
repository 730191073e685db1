//! Serializable results and their text rendering.

use std::fmt::Write as _;

use burnside_core::engine::{BurnsideElement, SchurNames};
use burnside_core::{Coeff, MarkMatrix, Partition, SchurElement};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub payload: Payload,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Element(SchurJson),
    Lambda(LambdaReport),
    Marks(MarksJson),
    Verify(VerifyReport),
    Oracle(OracleReport),
    Indres(IndresReport),
    Error(ErrorJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: String,
    pub coefficient: Coeff,
}

/// A Schur element; terms in descending lex order of partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl From<&SchurElement> for SchurJson {
    fn from(x: &SchurElement) -> Self {
        SchurJson {
            n: x.ambient(),
            terms: x.terms().rev().map(|(mu, c)| TermJson { partition: mu.to_string(), coefficient: c }).collect(),
        }
    }
}

impl TryFrom<&SchurJson> for SchurElement {
    type Error = burnside_core::Error;

    fn try_from(x: &SchurJson) -> Result<Self, Self::Error> {
        let terms = x
            .terms
            .iter()
            .map(|t| Ok((t.partition.parse::<Partition>()?, t.coefficient)))
            .collect::<Result<Vec<_>, Self::Error>>()?;
        SchurElement::from_terms(x.n, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    pub n: usize,
    pub i: usize,
    pub closed: Option<SchurJson>,
    pub recursive: Option<SchurJson>,
    /// Present when both methods ran.
    pub equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<Coeff>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Tally { passed: 0, total: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(failure());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

impl Default for Tally {
    fn default() -> Self {
        Tally::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub i_max: Option<usize>,
    pub lambda: Tally,
    pub marks: Tally,
    pub leading_terms: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideTermJson {
    pub coefficient: Coeff,
    pub stabilizer_order: usize,
    pub fingerprint: Vec<usize>,
    /// The partition `μ` when the class is `[P_μ]`.
    pub schur: Option<String>,
}

pub fn burnside_terms(x: &BurnsideElement, names: Option<&SchurNames>) -> Vec<BurnsideTermJson> {
    x.terms()
        .map(|(key, c)| BurnsideTermJson {
            coefficient: c,
            stabilizer_order: key.stabilizer_order(),
            fingerprint: key.fingerprint().to_vec(),
            schur: names.and_then(|n| n.name(key)).map(ToString::to_string),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub i: usize,
    pub closed: Vec<BurnsideTermJson>,
    pub recursive: Vec<BurnsideTermJson>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub degree: usize,
    pub group_order: usize,
    pub action: String,
    pub set_size: usize,
    pub rows: Vec<OracleRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedShape {
    pub mu: String,
    pub induced_size: usize,
    pub expected_size: u128,
    pub transitive: bool,
    pub conjugate_stabilizers: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedLambda {
    pub lhs: Vec<BurnsideTermJson>,
    pub rhs: Vec<BurnsideTermJson>,
    pub lhs_schur: Option<SchurJson>,
    pub rhs_schur: Option<SchurJson>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndresReport {
    pub i: usize,
    pub n: usize,
    pub shapes: Vec<InducedShape>,
    pub lambda: InducedLambda,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
}

impl CommandResult {
    pub fn ok(command: &str, payload: Payload) -> Self {
        CommandResult { command: command.to_string(), status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("results serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The text form written to stdout. Diagnostics are not included.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Element(x) => {
                out.push_str(&schur_text(x));
                out.push('\n');
            }
            Payload::Lambda(r) => lambda_text(&mut out, r),
            Payload::Marks(m) => out.push_str(&marks_text(m)),
            Payload::Verify(r) => verify_text(&mut out, r),
            Payload::Oracle(r) => oracle_text(&mut out, r),
            Payload::Indres(r) => indres_text(&mut out, r),
            Payload::Error(e) => {
                let _ = writeln!(out, "error: {}", e.message);
            }
        }
        out
    }
}

/// Same rendering as `SchurElement`'s `Display`.
pub fn schur_text(x: &SchurJson) -> String {
    match SchurElement::try_from(x) {
        Ok(e) => e.to_string(),
        Err(err) => format!("<invalid element: {}>", err),
    }
}

fn lambda_text(out: &mut String, r: &LambdaReport) {
    match (&r.closed, &r.recursive) {
        (Some(c), Some(rec)) => {
            let _ = writeln!(out, "closed    {}", schur_text(c));
            let _ = writeln!(out, "recursive {}", schur_text(rec));
            let verdict = if r.equal == Some(true) { "EQUAL" } else { "DIFFER" };
            let _ = writeln!(out, "{}", verdict);
        }
        (Some(x), None) | (None, Some(x)) => {
            let _ = writeln!(out, "{}", schur_text(x));
        }
        (None, None) => {}
    }
}

fn marks_text(m: &MarksJson) -> String {
    let labels: Result<Vec<Partition>, _> = m.labels.iter().map(|l| l.parse()).collect();
    match labels {
        Ok(labels) => MarkMatrix { labels, rows: m.rows.clone() }.to_string(),
        Err(err) => format!("<invalid labels: {}>\n", err),
    }
}

fn verify_text(out: &mut String, r: &VerifyReport) {
    let all = r.lambda.all_passed() && r.marks.all_passed() && r.leading_terms.all_passed();
    let _ = writeln!(
        out,
        "{}: {}/{} lambda equalities, {}/{} mark matrices triangular",
        if all { "PASS" } else { "FAIL" },
        r.lambda.passed,
        r.lambda.total,
        r.marks.passed,
        r.marks.total
    );
    let _ = writeln!(out, "leading terms: {}/{} products", r.leading_terms.passed, r.leading_terms.total);
    for f in r.lambda.failures.iter().chain(&r.marks.failures).chain(&r.leading_terms.failures) {
        let _ = writeln!(out, "  failed: {}", f);
    }
}

fn burnside_text(terms: &[BurnsideTermJson]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    const SHOWN: usize = 8;
    let mut s = String::new();
    for (j, t) in terms.iter().enumerate() {
        if j > 0 {
            s.push(' ');
        }
        let head: Vec<String> = t.fingerprint.iter().take(SHOWN).map(ToString::to_string).collect();
        let _ = write!(
            s,
            "{:+} * [orbit: stabilizer-order {}, fingerprint {}",
            t.coefficient,
            t.stabilizer_order,
            head.join(",")
        );
        if t.fingerprint.len() > SHOWN {
            let _ = write!(s, ",…({})", t.fingerprint.len());
        }
        s.push(']');
        if let Some(mu) = &t.schur {
            let _ = write!(s, " = [P{}]", mu.replace('[', "(").replace(']', ")"));
        }
    }
    s
}

fn oracle_text(out: &mut String, r: &OracleReport) {
    let _ = writeln!(
        out,
        "group of order {} on {} points, action {} ({} points)",
        r.group_order, r.degree, r.action, r.set_size
    );
    for row in &r.rows {
        let _ = writeln!(out, "i={} {}", row.i, if row.equal { "EQUAL" } else { "DIFFER" });
        let _ = writeln!(out, "  closed    {}", burnside_text(&row.closed));
        if !row.equal {
            let _ = writeln!(out, "  recursive {}", burnside_text(&row.recursive));
        }
    }
    let all = r.rows.iter().all(|row| row.equal);
    let _ = writeln!(out, "{}", if all { "EQUAL" } else { "DIFFER" });
}

fn indres_text(out: &mut String, r: &IndresReport) {
    for s in &r.shapes {
        let _ = writeln!(
            out,
            "P{} from S_{} to S_{}: {} points (expected {}), {}, {}  {}",
            s.mu,
            r.i,
            r.n,
            s.induced_size,
            s.expected_size,
            if s.transitive { "transitive" } else { "not transitive" },
            if s.conjugate_stabilizers { "stabilizers conjugate" } else { "stabilizers not conjugate" },
            if s.passed { "PASS" } else { "FAIL" }
        );
    }
    let side = |schur: &Option<SchurJson>, terms: &[BurnsideTermJson]| match schur {
        Some(x) => schur_text(x),
        None => burnside_text(terms),
    };
    let l = &r.lambda;
    let _ = writeln!(out, "ind res lambda^{} of {} points: {}", r.i, r.i, side(&l.lhs_schur, &l.lhs));
    let _ = writeln!(out, "lambda^{} of {} points:         {}", r.i, r.n, side(&l.rhs_schur, &l.rhs));
    let all = l.passed && r.shapes.iter().all(|s| s.passed);
    let _ = writeln!(out, "{}", if all { "PASS" } else { "FAIL" });
}
