use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn quandle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn quandle_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quandle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn fx(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn euler_on_sphere() {
    let out = quandle(&["--json", "euler", &fx("sphere2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"chi":2,"exact":true,"witness":[0,1,3,2,5,4],"dis_order":4,"upper_bound":2}"#
    );
}

#[test]
fn euler_fixtures() {
    let cases = [
        ("trivial4.json", 4),
        ("dihedral3.json", 0),
        ("dihedral5.json", 0),
        ("sphere3.json", 0),
        ("cycle3.json", 2),
        ("path4.json", 4),
        ("torus3x5.json", 0),
        ("galex_z5_double.json", 0),
        ("galex_s3_conj.json", 0),
        ("core_klein.json", 4),
        ("cycle3_union_cycle3.json", 0),
        ("complete_graph3.json", 2),
    ];
    for (name, chi) in cases {
        let out = quandle(&["euler", &fx(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let report = stdout_json(&out);
        assert_eq!(report["chi"], chi, "{name}");
        assert_eq!(report["exact"], true, "{name}");
    }
}

#[test]
fn fast_graph_matches_and_rejects_other_roots() {
    for name in ["cycle3.json", "path4.json", "complete_graph3.json"] {
        let slow = quandle(&["--json", "euler", &fx(name)]);
        let fast = quandle(&["--json", "euler", "--fast-graph", &fx(name)]);
        assert_eq!(fast.status.code(), Some(0));
        assert_eq!(slow.stdout, fast.stdout, "{name}");
    }
    let out = quandle(&["euler", "--fast-graph", &fx("sphere2.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn cap_exceeded_exits_3() {
    let out = quandle(&["euler", "--cap", "2", &fx("path4.json")]);
    assert_eq!(out.status.code(), Some(3));
    let report = stdout_json(&out);
    assert_eq!(report["exact"], false);
    assert_eq!(report["chi"], Value::Null);
    assert_eq!(report["upper_bound"], 4);
}

#[test]
fn search_rescues_capped_run() {
    // a cap of 1 stops enumeration at the identity
    for s in [r#"{"type":"dihedral","n":101}"#, r#"{"type":"torus","m":[3,3]}"#] {
        let out = quandle_stdin(&["euler", "--cap", "1", "--search-trials", "500", "--seed", "3", "-"], s);
        assert_eq!(out.status.code(), Some(0));
        let report = stdout_json(&out);
        assert_eq!(report["chi"], 0);
        let witness: Vec<usize> = serde_json::from_value(report["witness"].clone()).unwrap();
        assert!(witness.iter().enumerate().all(|(i, &w)| i != w));
    }
    let out = quandle_stdin(&["euler", "--cap", "1", "--search-trials", "50", "--seed", "3", "-"], r#"{"type":"sphere","dim":2}"#);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_trials_needs_seed() {
    let out = quandle(&["euler", "--search-trials", "5", &fx("dihedral3.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_reports_q1_violation() {
    let out = quandle(&["validate", &fx("broken_q1.json")]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(stderr.contains("Q1 violation: s_0(0)"), "{stderr}");
    assert_eq!(stdout_json(&out)["valid"], false);

    let out = quandle(&["validate", &fx("sphere3.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["size"], 8);
}

#[test]
fn validate_from_stdin() {
    let out = quandle_stdin(&["validate", "-"], r#"{"type":"sphere"}"#);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).to_string().contains("/dim"));

    let out = quandle_stdin(&["validate", "-"], r#"{"type":"bogus"}"#);
    assert_eq!(out.status.code(), Some(1));

    let out = quandle_stdin(&["validate", "-"], "{not json");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).to_string().contains("line 1"));
}

#[test]
fn info_report() {
    let out = quandle(&["--json", "info", &fx("dihedral5.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"size":5,"trivial":false,"connected":true,"homogeneous":true,"inn_order":10,"dis_order":5}"#
    );
    let out = quandle(&["--json", "info", "--cap", "3", &fx("dihedral5.json")]);
    let report = stdout_json(&out);
    assert_eq!(report["inn_order"], Value::Null);
    assert_eq!(report["dis_order"], Value::Null);

    // zero budget: the inner orbit of the cycle quandle does not cover every
    // point, so the automorphism search is needed and fails
    let out = quandle(&["info", "--budget", "0", &fx("cycle3.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["homogeneous"], Value::Null);
    let out = quandle(&["info", &fx("cycle3.json")]);
    assert_eq!(stdout_json(&out)["homogeneous"], true);
}

#[test]
fn table_round_trips() {
    let out = quandle(&["table", &fx("torus3x5.json")]);
    assert_eq!(out.status.code(), Some(0));
    let first = String::from_utf8(out.stdout).unwrap();
    let again = quandle_stdin(&["table", "-"], &first);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), first);

    let out = quandle(&["table", &fx("dihedral3.json")]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"type":"table","n":3,"s":[[0,2,1],[2,1,0],[1,0,2]]}"#
    );
}

#[test]
fn check_laws() {
    let out = quandle(&["check", &fx("dihedral3.json"), &fx("trivial2.json"), "--law", "product"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["chi_combined"], 0);
    assert_eq!(report["holds"], true);

    let out = quandle(&["--json", "check", &fx("cycle3.json"), &fx("cycle3.json"), "--law", "union"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"law":"union","chi_left":2,"chi_right":2,"chi_combined":0,"holds":true}"#
    );

    let out = quandle(&["check", &fx("path4.json"), &fx("trivial2.json"), "--law", "product", "--cap", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["holds"], Value::Null);
}

#[test]
fn usage_errors() {
    assert_eq!(quandle(&[]).status.code(), Some(2));
    assert_eq!(quandle(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(quandle(&["check", &fx("cycle3.json"), &fx("cycle3.json")]).status.code(), Some(2));
    assert_eq!(quandle(&["euler", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(quandle(&["euler", "--cap", "0", &fx("cycle3.json")]).status.code(), Some(2));
    let help = quandle(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8(help.stdout).unwrap().contains("euler"));
}

#[test]
fn in_process_run_matches_binary() {
    let path = fx("sphere2.json");
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = quandle_core::cli::run(
        ["quandle", "--json", "euler", path.as_str()],
        &mut std::io::empty(),
        &mut stdout,
        &mut stderr,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, quandle(&["--json", "euler", &path]).stdout);
    assert!(stderr.is_empty());
}

#[test]
fn spec_file_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    std::fs::write(&path, r#"{"type":"product","factors":[{"type":"dihedral","n":3},{"type":"sphere","dim":2}]}"#).unwrap();
    let out = quandle(&["euler", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["chi"], 0);
}
