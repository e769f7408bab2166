use std::path::PathBuf;
use std::process::{Command, Output};

use coregular::harness::{analyze, paper_example_spec, render_json, render_text, AnalysisOptions};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coregular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn fixture() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/paper_example.json")
        .display()
        .to_string()
}

fn write_spec(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("coregular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn paper_report_matches_golden_files() {
    let r = analyze(&paper_example_spec(), &AnalysisOptions::default()).unwrap();
    assert_eq!(render_text(&r), golden("paper_example.txt"));
    assert_eq!(render_json(&r), golden("paper_example.json"));

    let out = bin(&["paper-example"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("paper_example.txt"));
    let out = bin(&["--output", "json", "analyze", &fixture()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("paper_example.json"));
}

#[test]
fn json_reports_are_byte_identical() {
    let a = bin(&["--output", "json", "paper-example"]);
    let b = bin(&["--output", "json", "paper-example"]);
    assert_eq!(a.stdout, b.stdout);
    // timings go to stderr only
    assert!(String::from_utf8(a.stderr).unwrap().contains("coregularity:"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["analyze", "/nonexistent/spec.json"]).status.code(), Some(1));
    let bad = write_spec("composite.json", r#"{"name":"c","p":6,"n":1,"generators":[]}"#);
    let out = bin(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a prime"));
    let singular = write_spec("singular.json", r#"{"name":"s","p":3,"n":2,"generators":[[[1,1],[1,1]]]}"#);
    let out = bin(&["analyze", &singular]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("singular"));
    let big = bin(&["--element-cap", "4", "paper-example"]);
    assert_eq!(big.status.code(), Some(1));
}

#[test]
fn non_abelian_input_is_flagged() {
    let spec = write_spec("gl2.json", r#"{"name":"gl2","p":2,"n":2,"generators":[[[1,1],[0,1]],[[1,0],[1,1]]]}"#);
    let out = bin(&["--output", "json", "analyze", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scope"], "out_of_theorem_scope");
    assert_eq!(v["group"]["order"], 6);
    assert!(v.get("coregularity").is_none());
    assert_eq!(bin(&["dsp", &spec]).status.code(), Some(1));
}

#[test]
fn subcommands_run() {
    let f = fixture();
    let out = bin(&["different", &f]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("theta = x1^2*x2 + x1*x2^2"));
    let out = bin(&["dsp", &f]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("direct summand property: no"));
    let out = bin(&["--output", "json", "invariants", &f, "--max-degree", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["hilbert_series"], serde_json::json!([1, 2, 3, 5, 9]));
    let out = bin(&["transfer-image", &f]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("principal: no"));
    let out = bin(&["--output", "json", "verify-theorem", "--n", "2", "--p", "3", "--max-order", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
}
