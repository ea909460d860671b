//! Every subcommand's `--json` output validates against the shipped schema.

use lieosc::cli::{run_with, EXIT_OK};
use lieosc::golden::DataDir;
use serde_json::Value;

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["lieosc", "--json"].into_iter().chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}): {text}"));
    (code, value)
}

const INVOCATIONS: &[&[&str]] = &[
    &["roots", "G2"],
    &["sorth", "E7"],
    &["k", "C2:[1,0]"],
    &["k", "A1:[1]*S1"],
    &["type", "D4:[0,0,1,1]"],
    &["dim", "E6:[1,0,0,0,0,0]"],
    &["mult", "F4:[0,0,0,1]"],
    &["mult", "C4:[0,1,0,0]", "--weight", "[0,0,0,0]"],
    &["nsum", "F4", "--theta", "2θ1"],
    &["nsum", "C3", "--weight", "[0,2,0]"],
    &["check", "--cond", "c1", "C3:[0,0,1]"],
    &["check", "--cond", "chalf", "A1:[3]"],
    &["check", "--cond", "uk", "B3:[1,0,1]", "--mu", "[0,0,1]", "--level", "2"],
    &["check", "--cond", "c2mu", "B3:[1,0,1]", "--mu", "[0,0,1]"],
    &["prop-d", "B3:[0,0,1]"],
    &["transitive", "B3:[0,0,1]"],
    &["classify", "k4", "--rank-cap", "4"],
    &["classify", "simple", "--rank-cap", "4"],
    &["classify", "ctables", "--rank-cap", "4"],
    &["classify", "composite", "--rank-cap", "3"],
    &["classify", "bms", "--rank-cap", "4"],
    &["tables", "--which", "a", "--verify"],
    &["tables", "--which", "b1"],
    &["tables", "--which", "hermitian", "--verify"],
    &["hermitian"],
    &["hermitian", "--ambient", "D5", "--node", "4"],
];

#[test]
fn json_outputs_match_schema() {
    let schema: Value = DataDir::resolve(None).load("cli_output.schema.json").unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for args in INVOCATIONS {
        let (code, value) = run_json(args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        let errors: Vec<String> = validator.iter_errors(&value).map(|e| format!("{e} at {}", e.instance_path())).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn error_envelope_matches_schema() {
    let schema: Value = DataDir::resolve(None).load("cli_output.schema.json").unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let (code, value) = run_json(&["check", "--cond", "c2", "E8:[0,0,0,0,0,0,0,2]", "--dim-cap", "100"]);
    assert_eq!(code, 3);
    assert!(value["error"].is_string());
    assert!(validator.is_valid(&value));
}

#[test]
fn schema_rejects_a_malformed_envelope() {
    let schema: Value = DataDir::resolve(None).load("cli_output.schema.json").unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    assert!(!validator.is_valid(&serde_json::json!({ "command": "dim", "result": { "rep": "A1:[0]" } })));
    assert!(!validator.is_valid(&serde_json::json!({ "command": "bogus", "result": {} })));
}
