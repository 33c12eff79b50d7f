use std::fs;
use std::path::Path;

use harrison_core::cli::run;
use serde_json::Value;

fn harrison(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("harrison").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(path).unwrap()
}

fn export(dir: &Path, name: &str) -> String {
    let (code, text, _) = harrison(&["algebra", "export", name]);
    assert_eq!(code, 0, "export {name}");
    let path = dir.join(format!("{name}.alg"));
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn operad_bar_matches_golden() {
    let (code, out, _) = harrison(&[
        "--no-cache",
        "--format",
        "json",
        "operad",
        "--n",
        "3",
        "bar",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("operad_bar_3.json"));
}

#[test]
fn moduli_cells_match_golden() {
    let (code, out, _) = harrison(&[
        "--no-cache",
        "--format",
        "json",
        "moduli",
        "--v",
        "0,4,0",
        "cells",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("moduli_cells_0_4_0.json"));
}

#[test]
fn reports_follow_the_schema() {
    let (_, out, _) = harrison(&[
        "--no-cache",
        "--format",
        "json",
        "operad",
        "--n",
        "4",
        "cobar-bar",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["command", "input", "result", "schema", "status"]);
    assert!(out.starts_with("{\n  \"schema\""), "{out}");
    assert_eq!(v["schema"], "harrison-report/1");
    assert_eq!(v["command"], "operad cobar-bar");
    assert_eq!(v["input"]["n"], 4);
    assert_eq!(v["status"], "pass");
}

#[test]
fn text_output_ends_with_status() {
    let (code, out, _) = harrison(&["--no-cache", "moduli", "--v", "1,1,0", "homology"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("status: pass\n"), "{out}");
}

#[test]
fn cache_hit_reproduces_the_miss() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "--cache-dir",
        cache,
        "--format",
        "json",
        "moduli",
        "--v",
        "1,2,0",
        "iso-check",
    ];
    let first = harrison(&args);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = harrison(&args);
    assert_eq!(first, second);
    let uncached = harrison(&args[2..]);
    assert_eq!(first.1, uncached.1);
}

#[test]
fn thread_count_does_not_change_results() {
    let one = harrison(&["--no-cache", "--threads", "1", "operad", "--n", "4", "bar"]);
    let two = harrison(&["--no-cache", "--threads", "2", "operad", "--n", "4", "bar"]);
    assert_eq!(one, two);
}

#[test]
fn exported_builtins_validate() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["Q", "Qx2", "Qx3", "S1", "S2"] {
        let file = export(dir.path(), name);
        let (code, out, _) = harrison(&["--no-cache", "validate", &file]);
        assert_eq!(code, 0, "{name}: {out}");
    }
}

#[test]
fn mutations_fail_validation_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "Qx3-identity-pairing");
    let (code, out, _) = harrison(&["--no-cache", "--format", "json", "validate", &file]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "fail");
    let failed: Vec<&Value> = v["result"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| !c["witness"].is_null()), "{out}");
}

#[test]
fn harrison_refuses_invalid_algebras_unless_forced() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "Qx2-x1-double");
    let (code, _, err) = harrison(&["--no-cache", "harrison", &file, "--weight", "3"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    let (code, out, _) = harrison(&["--no-cache", "harrison", &file, "--weight", "3", "--force"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("status: FAIL\n"), "{out}");
}

#[test]
fn harrison_agrees_with_its_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = export(dir.path(), "Qx2");
    let (code, out, _) = harrison(&[
        "--no-cache",
        "--format",
        "json",
        "harrison",
        &file,
        "--weight",
        "4",
        "--oracle",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["oracle_diff"], Value::Array(vec![]));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["operad", "--n", "1", "bar"],
        vec!["moduli", "--v", "0,1,0", "cells"],
        vec!["moduli", "--v", "nonsense", "cells"],
        vec!["validate", "/nonexistent/algebra.alg"],
        vec!["frobnicate"],
    ] {
        let mut full = vec!["--no-cache"];
        full.extend(&args);
        let (code, _, err) = harrison(&full);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = harrison(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("moduli"));
}
