use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pseudofn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudofn")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn pnorm_of_gamma_matrix_at_one() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", r#"{"rows":2,"cols":2,"entries":[[[0.5,0.5],[0.5,-0.5]],[[0.5,-0.5],[0.5,0.5]]]}"#);
    let out = pseudofn(&["pnorm", &a, "--p", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((v["lower"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-12);
    assert!((v["upper"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-12);
    assert_eq!(v["converged"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn pnorm_of_identity() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "i.json", r#"{"rows":2,"cols":2,"entries":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#);
    let v = json(&pseudofn(&["pnorm", &a, "--p", "1.7"]));
    assert!((v["lower"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["upper"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn pnorm_matches_fixture_oracle() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/oracle_matrices.json");
    let cases: serde_json::Value = serde_json::from_str(&fs::read_to_string(fixture).unwrap()).unwrap();
    let case = &cases[1];
    let entries = &case["entries"];
    let n = entries.as_array().unwrap().len();
    assert_eq!(n, 3);
    let dir = tempfile::tempdir().unwrap();
    let text = serde_json::json!({"rows": n, "cols": n, "entries": entries}).to_string();
    let a = write(dir.path(), "m.json", &text);
    let expected = case["values"][0][1].as_f64().unwrap();
    assert_eq!(case["values"][0][0].as_f64().unwrap(), 1.3);
    let v = json(&pseudofn(&["pnorm", &a, "--p", "1.3", "--seed", "5"]));
    assert!((v["lower"].as_f64().unwrap() - expected).abs() < 1e-4);
}

#[test]
fn malformed_matrix_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "bad.json", r#"{"rows":2,"cols":2,"entries":[[[1,0],[0,0]],[[0,0],[1]]]}"#);
    let out = pseudofn(&["pnorm", &a, "--p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("entries[1][1]"), "{err}");
}

#[test]
fn bad_exponent_and_coefficients_are_usage_errors() {
    let out = pseudofn(&["gamma", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pseudofn(&["quotient", "--modulus", "2", "--coeffs", "1,zz", "--p", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--coeffs"));
    let out = pseudofn(&["quotient", "--modulus", "3", "--coeffs", "1,0", "--p", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_table() {
    let out = pseudofn(&["gamma", "1", "2", "1.2", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().skip(1).all(|l| l.ends_with("pass")));
    assert!(text.contains("1.414213562373095"));
}

#[test]
fn quotient_unit_is_one() {
    let out = pseudofn(&["quotient", "--modulus", "2", "--coeffs", "1,0", "--p", "2", "--k", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    let r = &v["record"];
    for field in ["target_lower", "target_upper", "lift_lower"] {
        assert!((r[field].as_f64().unwrap() - 1.0).abs() < 1e-6, "{field}");
    }
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["m", "p", "k", "L", "target_lower", "target_upper", "lift_lower", "lift_upper_apriori"]);
}

#[test]
fn quotient_sandwich_with_default_window() {
    let out = pseudofn(&["quotient", "--modulus", "3", "--coeffs", "1,0+1i,-1", "--p", "1.3", "--k", "32"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(json(&out)["sandwich"], true);
}

#[test]
fn quotient_short_window_fails_the_sandwich() {
    let out = pseudofn(&["quotient", "--modulus", "2", "--coeffs", "1,0+1i", "--p", "1.5", "--k", "64", "--window", "512"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["sandwich"], false);
}

#[test]
fn verify_shift_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = pseudofn(&["verify", "shift", "--seed", "42", "--report", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 300);
    let keys: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["key"].as_str().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["expected"]["provenance"].is_string()));
}

#[test]
fn verify_theta_and_gamma_pass() {
    for suite in ["theta", "gamma"] {
        let out = pseudofn(&["verify", suite]);
        assert!(out.status.success(), "{suite}");
        assert_eq!(json(&out)["failed"], 0);
    }
}

#[test]
fn verify_timings_are_opt_in() {
    let out = pseudofn(&["verify", "gamma", "--timings"]);
    assert!(json(&out)["checks"][0]["wall_time_ms"].is_number());
    let out = pseudofn(&["verify", "gamma"]);
    assert!(json(&out)["checks"][0].get("wall_time_ms").is_none());
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = pseudofn(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}
