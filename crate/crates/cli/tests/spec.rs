use std::path::PathBuf;

use hcell_cli::{parse_spec, parse_spec_str, SpecError, SpecFile};
use proptest::prelude::*;
use serde_json::{json, Value};

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn fixture_json(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn parse_value(v: &Value) -> Result<hcell_cli::Spec, SpecError> {
    parse_spec_str(&v.to_string(), "inline")
}

#[test]
fn sweedler_fixture() {
    let spec = parse_spec(&fixture_path("sweedler")).unwrap();
    assert_eq!(spec.name, "sweedler");
    assert_eq!(spec.field.characteristic(), 257);
    assert_eq!(spec.group.order(), 2);
    let alg = spec.algebra.as_ref().unwrap();
    assert_eq!((alg.num_vertices(), alg.num_arrows(), alg.dim()), (2, 2, 4));
    assert!(spec.action.is_some());
    assert!(spec.hopf.is_some());
    assert!(spec.hopf_report.as_ref().unwrap().passed());
}

#[test]
fn every_fixture_parses() {
    for entry in std::fs::read_dir(fixture_path("x").parent().unwrap()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            parse_spec(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        }
    }
}

#[test]
fn group_only_fixture_has_no_algebra() {
    let spec = parse_spec(&fixture_path("s3")).unwrap();
    assert_eq!(spec.group.order(), 6);
    assert!(spec.algebra.is_none() && spec.hopf.is_none());
}

#[test]
fn name_falls_back_to_the_file_stem() {
    let mut v = fixture_json("z2");
    v.as_object_mut().unwrap().remove("name");
    assert_eq!(parse_spec_str(&v.to_string(), "fallback").unwrap().name, "fallback");
}

#[test]
fn empty_and_missing_fields_are_schema_errors() {
    assert!(matches!(parse_spec_str("", "x"), Err(SpecError::Schema { .. })));
    assert!(matches!(parse_spec_str("{}", "x"), Err(SpecError::Schema { .. })));
    assert!(matches!(parse_spec_str("[1, 2]", "x"), Err(SpecError::Schema { .. })));
}

#[test]
fn unknown_keys_are_rejected_with_a_path() {
    let mut v = fixture_json("sweedler");
    v["quiver"]["arrows"][0]["colour"] = json!("red");
    match parse_value(&v) {
        Err(SpecError::Schema { path, message }) => {
            assert!(path.starts_with("quiver.arrows"), "{path}");
            assert!(message.contains("colour"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn non_associative_table_names_the_triple() {
    let v = json!({
        "field": {"char": 7},
        "group": {"elements": ["1", "a", "b"], "table": [["1", "a", "b"], ["a", "1", "b"], ["b", "b", "1"]]},
        "relations": []
    });
    match parse_value(&v) {
        Err(SpecError::Semantic { path, message }) => {
            assert_eq!(path, "group.table");
            assert!(message.contains("associativity fails on ("), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_names_are_semantic_errors() {
    let mut v = fixture_json("sweedler");
    v["relations"][0][0]["arrows"][0] = json!("nope");
    assert!(matches!(parse_value(&v), Err(SpecError::Semantic { .. })));
    let mut v = fixture_json("sweedler");
    v["quiver"]["arrows"][1]["target"] = json!("elsewhere");
    assert!(matches!(parse_value(&v), Err(SpecError::Semantic { .. })));
}

#[test]
fn action_disagreeing_with_the_hopf_block_is_rejected() {
    let mut v = fixture_json("sweedler");
    // Drop the signs: still an automorphism, but not the one the coproduct induces.
    v["action"][1]["arrows"] = json!([[0, 1], [1, 0]]);
    match parse_value(&v) {
        Err(SpecError::Semantic { path, .. }) => assert!(path.starts_with("action"), "{path}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn non_prime_field_is_rejected() {
    let mut v = fixture_json("z2");
    v["field"]["char"] = json!(15);
    assert!(matches!(parse_value(&v), Err(SpecError::Semantic { .. })));
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(parse_spec(&fixture_path("does_not_exist")), Err(SpecError::Io { .. })));
}

#[test]
fn spec_files_round_trip() {
    for name in ["sweedler", "taft3", "s3"] {
        let spec = parse_spec(&fixture_path(name)).unwrap();
        let text = serde_json::to_string(&spec.file).unwrap();
        let back: SpecFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec.file);
    }
}

fn cyclic_spec(n: usize, relabel: &[usize]) -> Value {
    let names: Vec<String> = relabel.iter().map(|k| format!("g{k}")).collect();
    let table: Vec<Vec<String>> =
        (0..n).map(|a| (0..n).map(|b| names[(a + b) % n].clone()).collect()).collect();
    json!({"field": {"char": 7}, "group": {"elements": names, "table": table}, "relations": []})
}

proptest! {
    #[test]
    fn relabelled_cyclic_groups_parse(relabel in (1usize..9).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
        let n = relabel.len();
        let spec = parse_value(&cyclic_spec(n, &relabel)).unwrap();
        prop_assert_eq!(spec.group.order(), n);
        prop_assert!(spec.group.is_abelian());
        prop_assert_eq!(spec.group.exponent(), n);
    }

    #[test]
    fn swapping_two_products_breaks_the_group(n in 3usize..8, row in 0usize..8, a in 0usize..8, b in 0usize..8) {
        let (row, a, b) = (row % n, a % n, b % n);
        prop_assume!(a != b);
        let mut v = cyclic_spec(n, &(0..n).collect::<Vec<_>>());
        let table = v["group"]["table"][row].as_array_mut().unwrap();
        table.swap(a, b);
        let is_semantic = matches!(parse_value(&v), Err(SpecError::Semantic { .. }));
        prop_assert!(is_semantic);
    }
}

#[test]
fn schema_lists_every_top_level_key() {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/spec.schema.json")).unwrap(),
    )
    .unwrap();
    let props = schema["properties"].as_object().unwrap();
    let spec = parse_spec(&fixture_path("sweedler")).unwrap();
    let written = serde_json::to_value(&spec.file).unwrap();
    for key in written.as_object().unwrap().keys() {
        assert!(props.contains_key(key), "{key}");
    }
    assert_eq!(props.len(), written.as_object().unwrap().len());
}
