use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use spk::cli::{cache_path, run_cli};
use spk::catalog::FamilyName;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["spk"];
    full.extend_from_slice(args);
    let code = run_cli(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

fn assert_golden(args: &[&str], name: &str) {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, golden(name), "{args:?}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn golden_documents() {
    assert_golden(&["--format", "json", "gamma", "--n", "4"], "gamma_4.json");
    assert_golden(&["--format", "json", "poly", "--family", "b", "--n", "2"], "poly_b_2.json");
    assert_golden(&["--format", "json", "zeros", "--family", "f", "--n", "4"], "zeros_f_4.json");
    assert_golden(
        &["--format", "json", "verify", "--check", "counts", "--check", "table1", "--n-max", "3"],
        "verify_small.json",
    );
    assert_golden(
        &["--format", "json", "enumerate", "--family", "q", "--n", "2", "--emit", "stats"],
        "enumerate_q_2.json",
    );
}

#[test]
fn text_outputs() {
    assert_eq!(run(&["poly", "--family", "b", "--n", "1"]).1, "1 + y\n");
    assert_eq!(run(&["gamma", "--n", "4"]).1, "(0,0,3):6\n(1,1,2):8\n(0,3,1):1\n");
    assert_eq!(run(&["enumerate", "--family", "q", "--n", "2"]).1, "2211\n1221\n1122\n");
    assert_eq!(run(&["enumerate", "--family", "q", "--n", "5", "--emit", "count"]).1, "945\n");
    assert_eq!(run(&["poly", "--family", "b", "--n", "2", "--var-map", "x=1,y=1"]).1, "8\n");
    let (_, g, _) = run(&["grammar", "--name", "gprime", "--power", "2"]);
    assert_eq!(g, "8*E*a*c + 6*E*b*d + E*a*d^2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["poly", "--family", "nope", "--n", "2"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["verify", "--check", "no-such-check"]).0, 2);
    assert_eq!(run(&["zeros", "--family", "f"]).0, 2);
    assert_eq!(run(&["zeros", "--theorem", "--n-max", "1"]).0, 2);
    let (code, out, _) = run(&["zeros", "--theorem", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("summary: 28 items, 28 passed, 0 failed\n"), "{out}");
}

#[test]
fn verify_out_file_carries_timings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&["verify", "--check", "counts", "--n-max", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(!out.contains("millis"));
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["rows"][0]["millis"].is_u64());
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "poly", "--family", "T", "--n", "6"];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let path = cache_path(dir.path(), FamilyName::T, 6);
    let stored = fs::read(&path).unwrap();
    assert_eq!(run(&args).1, first);
    assert_eq!(fs::read(&path).unwrap(), stored);

    fs::write(&path, "1 + + garbage").unwrap();
    assert_eq!(run(&args).1, first);
    assert_eq!(fs::read(&path).unwrap(), stored);

    // parses, but not in canonical form
    fs::write(&path, "x^2 + x\n").unwrap();
    assert_eq!(run(&args).1, first);
    assert_eq!(fs::read(&path).unwrap(), stored);
}

#[test]
fn jobs_do_not_change_output() {
    let base = ["verify", "--all", "--n-max", "4"];
    let one = run(&[&["--jobs", "1"][..], &base[..]].concat());
    let three = run(&[&["--jobs", "3"][..], &base[..]].concat());
    assert_eq!(one.0, 0);
    assert_eq!(one.1, three.1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_spk");
    let ok = Command::new(bin).args(["poly", "--family", "A", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1 + 4*x + x^2\n");
    let bad = Command::new(bin).args(["gamma"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
