use std::path::PathBuf;

use hcell_cli::{parse_spec, run, Command, Flags, Report, Spec};
use serde_json::Value;

fn fixture(name: &str) -> Spec {
    parse_spec(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))).unwrap()
}

fn run_on(command: Command, name: &str, tilde: bool) -> Report {
    let spec = fixture(name);
    run(command, Some(&spec), &Flags { tilde, ..Flags::default() }).unwrap()
}

fn lines(report: &Report) -> Vec<String> {
    report.sections.iter().flat_map(|s| s.lines.clone()).collect()
}

#[test]
fn hopf_commands_pass_on_good_fixtures() {
    for name in ["trivial", "sweedler", "taft3"] {
        for command in [Command::CheckHopf, Command::EmbedCheck, Command::Cells, Command::Adjoints] {
            let report = run_on(command, name, false);
            assert!(report.passed(), "{} on {name}: {:?}", command.name(), report.failures().next());
        }
    }
}

#[test]
fn bad_antipode_fails_with_witnesses() {
    let report = run_on(Command::CheckHopf, "sweedler_bad_antipode", false);
    assert!(!report.passed());
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.iter().any(|(_, c)| c.name.contains("antipode") && c.witness.is_some()));
    assert!(report.to_text().contains("FAIL"));
}

#[test]
fn cell_counts_in_both_configurations() {
    let plain = lines(&run_on(Command::Cells, "taft3", false));
    assert!(plain.iter().any(|l| l.starts_with("2 two-sided cells")));
    assert!(plain.iter().any(|l| l == "H_0 has 3 classes"));
    let tilde = lines(&run_on(Command::Cells, "taft3", true));
    for prefix in ["2 two-sided cells", "3 left cells", "3 right cells", "5 H-cells"] {
        assert!(tilde.iter().any(|l| l.starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn classification_counts() {
    let counts = |name: &str| {
        let report = run_on(Command::Classify, name, false);
        assert!(report.passed());
        lines(&report)
    };
    let v4 = counts("klein4");
    assert!(v4.contains(&"apex J_0, K over all subgroups: 6".to_string()));
    assert!(v4.contains(&"total: 7".to_string()));
    let s3 = counts("s3");
    assert!(s3.contains(&"apex J_0, K up to conjugacy: 4".to_string()));
    assert!(s3.contains(&"apex J_0, K over all subgroups: 6".to_string()));
    let z2 = counts("z2");
    assert!(z2.contains(&"total: 3".to_string()));
    let one = counts("trivial");
    assert!(one.contains(&"total: 2".to_string()));
}

#[test]
fn schur_and_vec_g_on_group_specs() {
    let schur = run_on(Command::Schur, "klein4", false);
    assert!(schur.passed());
    assert!(lines(&schur).iter().any(|l| l.ends_with("H³(K, Z) = Z/2")));
    for name in ["z2", "z3"] {
        assert!(run_on(Command::VecG, name, false).passed(), "{name}");
    }
}

#[test]
fn group_flag_overrides_the_spec() {
    let spec = fixture("sweedler");
    let flags = Flags { group: Some(fixture("klein4")), ..Flags::default() };
    let report = run(Command::Classify, Some(&spec), &flags).unwrap();
    assert_eq!(report.spec, "klein4");
    assert!(lines(&report).contains(&"total: 7".to_string()));
}

#[test]
fn commands_needing_an_algebra_reject_group_specs() {
    let spec = fixture("s3");
    for command in [Command::CheckHopf, Command::Cells, Command::EmbedCheck] {
        assert!(run(command, Some(&spec), &Flags::default()).is_err(), "{}", command.name());
    }
    assert!(run(Command::Classify, None, &Flags::default()).is_err());
}

#[test]
fn json_reports_round_trip_and_are_deterministic() {
    let first = run_on(Command::Cells, "sweedler", true).to_json();
    let second = run_on(Command::Cells, "sweedler", true).to_json();
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["command"], "cells");
    assert_eq!(v["status"], "pass");
    assert!(v["sections"].as_array().is_some_and(|s| !s.is_empty()));
    assert!(v.get("timing_ms").is_none_or(Value::is_null));
}

#[test]
fn adjoint_sampling_follows_the_seed() {
    let spec = fixture("sweedler");
    let with_seed = |seed| run(Command::Adjoints, Some(&spec), &Flags { seed, tilde: true, group: None }).unwrap().to_json();
    assert_eq!(with_seed(3), with_seed(3));
    assert!(serde_json::from_str::<Value>(&with_seed(4)).is_ok());
}
