use std::io::Write;
use std::process::{Command, Output};

use burnside::{CommandResult, Payload, SchurJson};
use burnside_core::{closed_lambda, SchurElement};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(args)
        .env_remove(burnside::GROUP_CAP_VAR)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn group_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn lambda_both_methods_agree() {
    let out = run(&["lambda", "--n", "4", "--i", "2", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0].trim_start_matches("closed").trim(), lines[1].trim_start_matches("recursive").trim());
    assert_eq!(lines[2], "EQUAL");
}

#[test]
fn lambda_examples() {
    assert_eq!(stdout(&run(&["lambda", "--n", "3", "--i", "5"])), "0\n");
    assert_eq!(stdout(&run(&["lambda", "--n", "3", "--i", "1"])), "+1*[P(2,1)] @ n=3\n");
    assert_eq!(stdout(&run(&["lambda", "--n", "3", "--i", "5", "--method", "recursive"])), "0\n");
}

#[test]
fn sigma_examples() {
    assert_eq!(stdout(&run(&["sigma", "--n", "4", "--i", "2"])), "+1*[P(3,1)] +1*[P(2,2)] @ n=4\n");
    assert_eq!(stdout(&run(&["sigma", "--n", "5", "--i", "0"])), "+1*[P(5)] @ n=5\n");
    assert_eq!(stdout(&run(&["sigma", "--n", "1", "--i", "3"])), "+1*[P(1)] @ n=1\n");
}

#[test]
fn mul_examples() {
    let out = run(&["mul", "--n", "4", "--a", "[2,2]", "--b", "[2,2]"]);
    assert_eq!(stdout(&out), "+2*[P(2,2)] +1*[P(1,1,1,1)] @ n=4\n");
    assert_eq!(stdout(&run(&["mul", "--n", "4", "--a", "[4]", "--b", "[2,2]"])), "+1*[P(2,2)] @ n=4\n");
    let out = run(&["mul", "--n", "3", "--a", "[2,1]", "--b", "[2,1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cardinality 9 = 3 * 3"));
}

#[test]
fn marks_table() {
    let text = stdout(&run(&["marks", "--n", "2"]));
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows, vec![vec!["[2]", "[1,1]"], vec!["[2]", "1", "0"], vec!["[1,1]", "1", "2"]]);
}

#[test]
fn verify_sweep() {
    let out = run(&["verify", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next().unwrap(), "PASS: 36/36 lambda equalities, 8/8 mark matrices triangular");
    let out = run(&["verify", "--n-max", "6", "--i-max", "2"]);
    assert!(stdout(&out).starts_with("PASS: 11/11 lambda equalities"));
}

#[test]
fn oracle_on_s4() {
    let f = group_file("# S4\n(1 2)\n\n(1 2 3 4)\n");
    let path = f.path().to_str().unwrap();
    let out = run(&["oracle", "--group", path, "--i", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("i=2 EQUAL"));
    assert!(text.contains("= [P(2,2)]"));
    assert_eq!(text.lines().last(), Some("EQUAL"));

    let out = run(&["oracle", "--group", path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(" EQUAL").count(), 6);
}

#[test]
fn oracle_on_other_groups_and_actions() {
    let d4 = group_file("(1 2 3 4)\n(1 3)\n");
    let path = d4.path().to_str().unwrap();
    for action in ["natural", "sym2", "square", "double"] {
        let out = run(&["oracle", "--group", path, "--action", action, "--i", "3"]);
        assert_eq!(out.status.code(), Some(0), "{}", action);
        assert!(stdout(&out).contains("i=3 EQUAL"), "{}", action);
    }
    let trivial = group_file("degree 3\n");
    let out = run(&["oracle", "--group", trivial.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn indres_reports() {
    let out = run(&["indres", "--i", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1*[P(2,1)] +1*[P(1,1,1)] @ n=3"));
    assert_eq!(text.lines().last(), Some("PASS"));
    assert_eq!(run(&["indres", "--i", "3", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["lambda", "--n", "0", "--i", "1"]).status.code(), Some(2));
    assert_eq!(run(&["lambda", "--i", "1"]).status.code(), Some(2));
    assert_eq!(run(&["mul", "--n", "2", "--a", "[3]", "--b", "[1]"]).status.code(), Some(2));
    assert_eq!(run(&["mul", "--n", "4", "--a", "[1,2]", "--b", "[1]"]).status.code(), Some(2));

    let bad = group_file("(1 2)\n(1 2 x)\n");
    let out = run(&["oracle", "--group", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let s4 = group_file("(1 2)\n(1 2 3 4)\n");
    let out = Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(["oracle", "--group", s4.path().to_str().unwrap()])
        .env(burnside::GROUP_CAP_VAR, "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let d4 = group_file("(1 2 3 4)\n(1 3)\n");
    let out = run(&["oracle", "--group", d4.path().to_str().unwrap(), "--action", "sym2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn structured_output_round_trips() {
    let cases: &[&[&str]] = &[
        &["sigma", "--n", "4", "--i", "2"],
        &["lambda", "--n", "5", "--i", "3", "--method", "both"],
        &["mul", "--n", "4", "--a", "[2,2]", "--b", "[2,2]"],
        &["marks", "--n", "4"],
        &["verify", "--n-max", "5"],
        &["indres", "--i", "2", "--n", "4"],
        &["mul", "--n", "2", "--a", "[3]", "--b", "[1]"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "structured"]);
        let text = stdout(&run(&full));
        let parsed = CommandResult::from_json(&text).unwrap_or_else(|e| panic!("{:?}: {}", args, e));
        assert_eq!(parsed.to_json(), text, "{:?}", args);
    }
}

#[test]
fn structured_element_matches_library() {
    let text = stdout(&run(&["lambda", "--n", "6", "--i", "4", "--format", "structured"]));
    let parsed = CommandResult::from_json(&text).unwrap();
    let Payload::Lambda(report) = parsed.payload else { panic!("unexpected payload") };
    let closed: &SchurJson = report.closed.as_ref().unwrap();
    assert_eq!(SchurElement::try_from(closed).unwrap(), closed_lambda(4, 6).unwrap());
    let parts: Vec<&str> = closed.terms.iter().map(|t| t.partition.as_str()).collect();
    let mut sorted = parts.clone();
    sorted.sort_by(|a, b| {
        let pa: burnside_core::Partition = a.parse().unwrap();
        let pb: burnside_core::Partition = b.parse().unwrap();
        pb.cmp(&pa)
    });
    assert_eq!(parts, sorted);
}

#[test]
fn output_is_deterministic() {
    let f = group_file("(1 2 3 4 5)\n(1 2)\n");
    let args = ["oracle", "--group", f.path().to_str().unwrap(), "--i", "2", "--format", "structured"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    assert_eq!(stdout(&run(&["marks", "--n", "5"])), stdout(&run(&["marks", "--n", "5"])));
}
