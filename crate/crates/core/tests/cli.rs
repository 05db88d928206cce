//! Black-box tests of the `qtn` binary: exit codes, output shapes, and
//! input validation.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn qtn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtn"))
        .args(args)
        .output()
        .expect("qtn spawns")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn quantion_file(components: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    write!(f, "{components}").expect("write temp file");
    f
}

#[test]
fn tables_text_renders_and_exits_zero() {
    let out = qtn(&["tables", "--basis", "tetrad"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("i\u{b7}e3"));
    assert!(text.contains("-i\u{b7}e2"));
    assert!(text.contains("\u{3a9}"));
}

#[test]
fn tables_json_tetrad_diagonal_is_omega() {
    let out = qtn(&["tables", "--basis", "tetrad", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["basis"], "tetrad");
    for r in 0..4 {
        assert_eq!(v["cells"][r][r], "\u{3a9}");
    }
}

#[test]
fn tables_json_null_has_eight_zero_cells() {
    let out = qtn(&["tables", "--basis", "null", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let zeros = (0..4)
        .flat_map(|r| (0..4).map(move |c| (r, c)))
        .filter(|&(r, c)| v["cells"][r][c] == "0")
        .count();
    assert_eq!(zeros, 8);
}

#[test]
fn tables_json_quaternion_diagonal() {
    let out = qtn(&["tables", "--basis", "quaternion", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["cells"][0][0], "1");
    for r in 1..4 {
        assert_eq!(v["cells"][r][r], "-1");
    }
}

#[test]
fn verify_json_reports_carry_the_flags() {
    let out = qtn(&[
        "verify",
        "--algebra",
        "hermitian:2",
        "--a",
        "1",
        "--samples",
        "50",
        "--seed",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let reports = v.as_array().expect("array of reports");
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert_eq!(r["algebra"], "hermitian:2");
        assert_eq!(r["samples"], 50);
        assert_eq!(r["seed"], 11);
        assert_eq!(r["tol"], 1e-10);
        assert_eq!(r["verdict"], "pass");
        assert!(r["max_residual"].as_f64().unwrap() < 1e-10);
    }
}

#[test]
fn verify_foreign_a_fails_with_exit_one() {
    let out = qtn(&[
        "verify",
        "--algebra",
        "realsym:2",
        "--a",
        "1",
        "--samples",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("petersen"));
    assert!(text.contains("FAIL"));
}

#[test]
fn verify_poisson_is_exact() {
    let out = qtn(&[
        "verify",
        "--algebra",
        "poisson:4",
        "--a",
        "0",
        "--samples",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    for r in v.as_array().unwrap() {
        assert_eq!(r["max_residual"].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn verify_rejects_bad_specs() {
    for spec in [
        "clifford:2",
        "hermitian",
        "hermitian:x",
        "hermitian:99",
        "poisson:1",
    ] {
        let out = qtn(&["verify", "--algebra", spec, "--a", "1", "--samples", "5"]);
        assert_eq!(out.status.code(), Some(2), "spec {spec}");
        assert!(!out.stderr.is_empty(), "spec {spec} should explain itself");
    }
}

#[test]
fn verify_rejects_bad_numbers() {
    let out = qtn(&[
        "verify",
        "--algebra",
        "hermitian:2",
        "--a",
        "5",
        "--samples",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = qtn(&[
        "verify",
        "--algebra",
        "hermitian:2",
        "--a",
        "1",
        "--samples",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = qtn(&[
        "verify",
        "--algebra",
        "hermitian:2",
        "--a",
        "1",
        "--samples",
        "5",
        "--tol",
        "0.0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = qtn(&[]);
    assert_eq!(out.status.code(), Some(2));
    let out = qtn(&["tables", "--basis", "octonion"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qtn(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compose_runs_the_product_suite() {
    let out = qtn(&[
        "compose",
        "--left",
        "hermitian:2",
        "--right",
        "hermitian:3",
        "--samples",
        "50",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let reports = v.as_array().unwrap();
    assert!(reports.iter().any(|r| r["identity"] == "closure"));
    assert!(reports.iter().all(|r| r["verdict"] == "pass"));
    assert_eq!(reports[0]["algebra"], "hermitian:2(x)hermitian:3");
}

#[test]
fn compose_rejects_incompatible_factors() {
    let out = qtn(&["compose", "--left", "hermitian:2", "--right", "realsym:2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qtn(&["compose", "--left", "poisson:3", "--right", "hermitian:2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("matrix"));
}

#[test]
fn current_classifies_omega_and_null_elements() {
    let omega = quantion_file("[1.0,0.0,0.0,0.0,0.0,0.0,1.0,0.0]");
    let out = qtn(&["current", "--in", omega.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["j"], serde_json::json!([1.0, 0.0, 0.0, 0.0]));
    assert_eq!(v["class"], "timelike_future");

    let m = quantion_file("[0.0,0.0,0.0,0.0,1.0,0.0,0.0,0.0]");
    let out = qtn(&["current", "--in", m.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["j"], serde_json::json!([0.5, 0.0, 0.0, -0.5]));
    assert_eq!(v["class"], "null_future");

    let zero = quantion_file("[0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0]");
    let out = qtn(&["current", "--in", zero.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["class"], "zero");
}

#[test]
fn inverse_of_omega_is_omega() {
    let omega = quantion_file("[1.0,0.0,0.0,0.0,0.0,0.0,1.0,0.0]");
    let out = qtn(&["inverse", "--in", omega.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Vec<f64> = serde_json::from_slice(&out.stdout).unwrap();
    let expected = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0];
    for (got, want) in v.iter().zip(expected) {
        assert_eq!(*got, want);
    }
}

#[test]
fn inverse_matches_the_real_quantion_closed_form() {
    // p = (2,0,0,1): q = {3,0,0,1}, (p,p) = 3, inverse = {1/3,0,0,1}.
    let q = quantion_file("[3.0,0.0,0.0,0.0,0.0,0.0,1.0,0.0]");
    let out = qtn(&["inverse", "--in", q.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Vec<f64> = serde_json::from_slice(&out.stdout).unwrap();
    let expected = [1.0 / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0];
    for (got, want) in v.iter().zip(expected) {
        assert_eq!(*got, want);
    }
}

#[test]
fn inverse_of_null_element_exits_one() {
    let l = quantion_file("[1.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0]");
    let out = qtn(&["inverse", "--in", l.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("null divisor"));
}

#[test]
fn malformed_inputs_exit_two() {
    for body in [
        "not json",
        "[1.0,2.0,3.0]",
        "{\"a\":1}",
        "[1e999,0,0,0,0,0,0,0]",
    ] {
        let f = quantion_file(body);
        for cmd in ["current", "inverse"] {
            let out = qtn(&[cmd, "--in", f.path().to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(2), "{cmd} on {body}");
            assert!(!out.stderr.is_empty());
        }
    }
    let out = qtn(&["current", "--in", "/nonexistent/q.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_output_is_reproducible() {
    let args = [
        "verify",
        "--algebra",
        "realsym:3",
        "--a",
        "-1",
        "--samples",
        "200",
        "--seed",
        "5",
    ];
    let a = qtn(&args);
    let b = qtn(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
