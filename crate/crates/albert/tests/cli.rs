//! End-to-end tests of the `albert` binary: subcommands, file parsing,
//! exit codes, and byte-level determinism of seeded reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_albert"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("albert-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_paper_passes_and_reports_convention() {
    let out = run(&["verify-paper", "--seed", "42"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report["table_convention"]
        .as_str()
        .unwrap()
        .contains("cayley-dickson"));
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 25, "only {} checks", checks.len());
    let discrepancies = checks
        .iter()
        .filter(|c| c["status"] == "discrepancy")
        .count();
    assert_eq!(discrepancies, 2);
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    // check names are emitted in canonical (sorted) order
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn eigs_on_diagonal_file() {
    let path = write_temp(
        "diag.json",
        r#"{"p":1.0,"m":2.0,"n":3.0,
            "a":[0,0,0,0,0,0,0,0],
            "b":[0,0,0,0,0,0,0,0],
            "c":[0,0,0,0,0,0,0,0]}"#,
    );
    let out = run(&["eigs", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let families = report["families"].as_array().unwrap();
    assert_eq!(families.len(), 2);
    for fam in families {
        assert!(fam["r"].as_f64().unwrap().abs() <= 1e-9);
        let lambdas: Vec<f64> = fam["lambdas"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_f64().unwrap())
            .collect();
        for (l, want) in lambdas.iter().zip(&[1.0, 2.0, 3.0]) {
            assert!((l - want).abs() <= 1e-9);
        }
    }
}

#[test]
fn eigs_on_builtin_example_with_search() {
    let out = run(&[
        "eigs",
        "--example",
        "1",
        "--p",
        "0",
        "--q",
        "1",
        "--theta",
        "0",
        "--seed",
        "5",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut all: Vec<f64> = Vec::new();
    for fam in report["families"].as_array().unwrap() {
        for l in fam["lambdas"].as_array().unwrap() {
            all.push(l.as_f64().unwrap());
        }
    }
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let want = [-2.0, -1.0, -1.0, 1.0, 1.0, 2.0];
    assert_eq!(all.len(), want.len());
    for (g, w) in all.iter().zip(&want) {
        assert!((g - w).abs() <= 1e-8, "{all:?}");
    }

    // with the non-real search enabled, found pairs verify by construction
    let out = run(&[
        "eigs",
        "--example",
        "1",
        "--p",
        "0",
        "--q",
        "1",
        "--theta",
        "0.785",
        "--search-nonreal",
        "--seeds",
        "6",
        "--seed",
        "11",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    for line in report["nonreal"].as_array().unwrap() {
        assert!(line["residual"].as_f64().unwrap() <= 1e-8);
        assert!(line["nullity"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn eigs_accepts_example_matrix_file() {
    let path = write_temp("ex2.json", r#"{"example":2,"p":0.5,"q":2.0}"#);
    let out = run(&["eigs", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!((report["trace"].as_f64().unwrap() - 1.5).abs() <= 1e-12);
}

#[test]
fn nullity_subcommand() {
    // lambda_w = p - 2q conj(s) at p=1, q=2, theta=0.7
    let (p, q, theta): (f64, f64, f64) = (1.0, 2.0, 0.7);
    let lambda = format!(
        "[{},0,0,0,{},0,0,0]",
        p - 2.0 * q * theta.cos(),
        2.0 * q * theta.sin()
    );
    let out = run(&[
        "nullity",
        "--example",
        "1",
        "--p",
        "1",
        "--q",
        "2",
        "--theta",
        "0.7",
        "--lambda",
        &lambda,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "1");

    // lambda_u = p + q conj(s): 5-dimensional
    let lambda = format!("[{},0,0,0,{},0,0,0]", p + q * theta.cos(), -q * theta.sin());
    let out = run(&[
        "nullity",
        "--example",
        "1",
        "--p",
        "1",
        "--q",
        "2",
        "--theta",
        "0.7",
        "--lambda",
        &lambda,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "5");
}

#[test]
fn property_suite_deterministic_bytes() {
    let a = run(&["property-suite", "--trials", "500", "--seed", "9"]);
    let b = run(&["property-suite", "--trials", "500", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["property-suite", "--trials", "1", "--seed", "1"]);
    assert!(c.status.success());

    // text format carries one line per identity
    let t = run(&[
        "property-suite",
        "--trials",
        "100",
        "--seed",
        "2",
        "--format",
        "text",
    ]);
    assert!(t.status.success());
    assert!(stdout_of(&t).lines().count() >= 10);
}

#[test]
fn parse_errors_exit_with_code_2() {
    let path = write_temp("bad.json", r#"{"p": 1.0, "m": }"#);
    let out = run(&["eigs", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "{err}");

    // missing matrix source
    let out = run(&["eigs"]);
    assert_eq!(out.status.code(), Some(2));

    // clap usage errors also exit 2
    let out = run(&["eigs", "--example", "7"]);
    assert_eq!(out.status.code(), Some(2));

    // non-finite entries are rejected
    let path = write_temp(
        "inf.json",
        r#"{"p":1e999,"m":0,"n":0,
            "a":[0,0,0,0,0,0,0,0],
            "b":[0,0,0,0,0,0,0,0],
            "c":[0,0,0,0,0,0,0,0]}"#,
    );
    let out = run(&["eigs", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
