//! Black-box tests of the command-line contract: exit codes, JSON shapes,
//! byte-level determinism, and table caching.

use std::path::Path;
use std::process::{Command, Output};

fn twistfuse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistfuse"))
        .args(args)
        .env_remove("TWISTFUSE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn fuse_untwisted_json_matches_contract() {
    let out = twistfuse(&[
        "fuse",
        "untwisted",
        "--n",
        "1",
        "--level",
        "1",
        "--f",
        "1,0",
        "--g",
        "1,0",
        "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), r#"{"result":{"0,0":1}}"#);
}

#[test]
fn fuse_module_json_matches_contract() {
    let out = twistfuse(&[
        "fuse", "module", "--n", "2", "--level", "1", "--f", "1,0,0,0", "--h", "1,0", "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), r#"{"result":{"0,0":1}}"#);
}

#[test]
fn untwisted_inputs_are_normalized_automatically() {
    // (2,1) normalizes to (1,0); same product as the plain call.
    let shifted = twistfuse(&[
        "fuse",
        "untwisted",
        "--n",
        "1",
        "--level",
        "1",
        "--f",
        "2,1",
        "--g",
        "1,0",
        "--json",
    ]);
    assert!(shifted.status.success());
    let plain = twistfuse(&[
        "fuse",
        "untwisted",
        "--n",
        "1",
        "--level",
        "1",
        "--f",
        "1,0",
        "--g",
        "1,0",
        "--json",
    ]);
    assert_eq!(stdout_of(&shifted), stdout_of(&plain));
}

#[test]
fn malformed_signature_exits_2_naming_the_constraint() {
    let out = twistfuse(&[
        "fuse",
        "untwisted",
        "--n",
        "1",
        "--level",
        "1",
        "--f",
        "0,1",
        "--g",
        "1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("weakly decreasing"), "stderr: {stderr}");
}

#[test]
fn non_permissible_signature_exits_2() {
    let out = twistfuse(&[
        "fuse",
        "untwisted",
        "--n",
        "1",
        "--level",
        "1",
        "--f",
        "2,0",
        "--g",
        "1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("f_1 - f_2N <= 1"), "stderr: {stderr}");

    let out = twistfuse(&[
        "fuse", "module", "--n", "2", "--level", "1", "--f", "1,0,0,0", "--h", "1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("h_1 + h_2 <= 1"), "stderr: {stderr}");
}

#[test]
fn unknown_flags_exit_2() {
    let out = twistfuse(&["fuse", "untwisted", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_cell_passes() {
    let out = twistfuse(&["verify", "--n", "1", "--level", "2", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(doc["passed"], serde_json::Value::Bool(true));
    assert_eq!(doc["checks"].as_array().unwrap().len(), 7);
    for check in doc["checks"].as_array().unwrap() {
        assert!(
            check["tolerance"].is_number(),
            "every check lists its tolerance"
        );
    }
}

#[test]
fn verify_rejects_grid_with_cell() {
    let out = twistfuse(&["verify", "--n", "1", "--level", "2", "--grid"]);
    assert_eq!(out.status.code(), Some(2));
    let out = twistfuse(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn qseries_euler_reports_ok() {
    let out = twistfuse(&["qseries", "euler", "--order", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "OK through t^5");

    let out = twistfuse(&["qseries", "euler", "--order", "12", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(doc["ok"], serde_json::Value::Bool(true));
    assert_eq!(doc["firstMismatch"], serde_json::Value::Null);
}

#[test]
fn points_json_carries_exact_fractions() {
    let out = twistfuse(&["points", "--n", "2", "--level", "1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let points = doc["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    assert_eq!(points[0]["type"], "integral");
    assert_eq!(points[0]["angles"][0], "3/10");
    assert_eq!(points[1]["type"], "half-integral");
    assert_eq!(points[1]["doubled"][0], 1);
}

#[test]
fn dims_twisted_reports_constant() {
    let out = twistfuse(&["dims", "--n", "2", "--level", "1", "--twisted", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let c = doc["c"].as_f64().unwrap();
    assert!((c - 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn diagnostics_always_succeed() {
    for (n, level) in [("1", "1"), ("2", "1"), ("2", "2")] {
        let out = twistfuse(&["diagnostics", "--n", n, "--level", level, "--json"]);
        assert!(out.status.success());
        let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
        assert_eq!(doc["pairs"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "--n", "2", "--level", "2", "--json"];
    let first = twistfuse(&args);
    let second = twistfuse(&args);
    assert_eq!(first.stdout, second.stdout);

    let args = ["dims", "--n", "2", "--level", "3"];
    let first = twistfuse(&args);
    let second = twistfuse(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn tables_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();

    let first = twistfuse(&[
        "tables",
        "--n",
        "1",
        "--level",
        "1",
        "--cache-dir",
        cache,
        "--json",
    ]);
    assert!(first.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&first).trim()).unwrap();
    assert_eq!(doc["reused"], serde_json::Value::Bool(false));
    let path = doc["path"].as_str().unwrap().to_string();
    let bytes = std::fs::read(Path::new(&path)).unwrap();

    let second = twistfuse(&[
        "tables",
        "--n",
        "1",
        "--level",
        "1",
        "--cache-dir",
        cache,
        "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&second).trim()).unwrap();
    assert_eq!(doc["reused"], serde_json::Value::Bool(true));
    assert_eq!(std::fs::read(Path::new(&path)).unwrap(), bytes);

    // The table document itself has the advertised shape.
    let table: serde_json::Value = serde_json::from_slice(&bytes).expect("valid JSON table file");
    assert_eq!(table["format"], 1);
    assert_eq!(table["basisUntwisted"].as_array().unwrap().len(), 2);
    assert_eq!(table["basisTwisted"].as_array().unwrap().len(), 2);
    assert!(table["fundamentalMatrices"]["1"].is_array());
    assert!(table["moduleMatrices"]["1"].is_array());
}

#[test]
fn tables_env_var_supplies_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_twistfuse"))
        .args(["tables", "--n", "1", "--level", "2", "--json"])
        .env("TWISTFUSE_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert!(doc["path"].as_str().unwrap().contains("tables_n1_l2.json"));
}

#[test]
fn tables_without_destination_exit_2() {
    let out = twistfuse(&["tables", "--n", "1", "--level", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
