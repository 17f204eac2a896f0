use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn hcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcell")).args(args).output().unwrap()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn passing_run_exits_zero() {
    let out = hcell(&["check-hopf", &path("sweedler")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check-hopf sweedler: PASS"));
}

#[test]
fn failing_checks_exit_one() {
    let out = hcell(&["check-hopf", &path("sweedler_bad_antipode")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn errors_exit_two() {
    let missing = hcell(&["cells", "/nonexistent/spec.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8(missing.stderr).unwrap().starts_with("error:"));
    let wrong_kind = hcell(&["cells", &path("s3")]);
    assert_eq!(wrong_kind.status.code(), Some(2));
    let no_spec = hcell(&["classify"]);
    assert_eq!(no_spec.status.code(), Some(2));
}

#[test]
fn json_output_and_timing() {
    let out = hcell(&["classify", &path("klein4"), "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "classify");
    assert!(v.get("timing_ms").is_none_or(serde_json::Value::is_null));
    let timed = hcell(&["classify", &path("klein4"), "--output", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn group_flag_without_spec() {
    let out = hcell(&["classify", "--group", &path("s3")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("total: 7"));
}

#[test]
fn runs_are_byte_identical() {
    let a = hcell(&["cells", &path("taft3"), "--tilde", "--output", "json"]);
    let b = hcell(&["cells", &path("taft3"), "--tilde", "--output", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
