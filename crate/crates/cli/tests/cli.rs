use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use vinberg::lie::ElementJson;
use vinberg::modes::ModeReport;
use vinberg::slices::SliceInductionReport;
use vinberg::tables::RowOutcome;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn trivector(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/trivectors").join(name).display().to_string()
}

fn vinberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vinberg")).args(args).output().expect("binary runs")
}

/// Runs with `--json`, checks the exit code and that the output is canonical.
fn json(args: &[&str], code: i32) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = vinberg(&a);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(code), "{args:?}: {stdout} {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), stdout.trim_end(), "not canonical");
    v
}

fn round_trips<T: serde::Serialize + serde::de::DeserializeOwned>(v: &Value) {
    let typed: T = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(&serde_json::to_value(&typed).unwrap(), v);
}

fn code(args: &[&str]) -> Option<i32> {
    vinberg(args).status.code()
}

#[test]
fn grade_g2() {
    let v = json(&["grade", "G2", "s=[1,0,1]"], 0);
    assert_eq!(v["m"], 3);
    assert_eq!(v["rank"], 1);
    assert_eq!(v["nilcone_dim"], 4);
    assert_eq!(v["graded_dims"], serde_json::json!([4, 5, 5]));
    assert_eq!(json(&["grade", "G2: s=[1,0,1]"], 0), v);
}

#[test]
fn grade_a1_trivial() {
    let v = json(&["grade", "A1", "s=[1,0]"], 0);
    assert_eq!(v["m"], 1);
    assert_eq!(v["graded_dims"], serde_json::json!([3]));
    assert_eq!(v["rank"], 1);
    assert_eq!(v["nilcone_dim"], 2);
}

#[test]
fn malformed_labels_exit_2() {
    assert_eq!(code(&["grade", "G2", "s=[1,x]"]), Some(2));
    assert_eq!(code(&["grade", "G2", "s=[1,0]"]), Some(2));
    assert_eq!(code(&["grade", "G2", "s=[0,0,0]"]), Some(2));
    assert_eq!(code(&["grade", "Q7", "s=[1,0]"]), Some(2));
    assert_eq!(code(&["grade", "G2", "1,0,1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}

#[test]
fn tables_small_budget() {
    let v = json(&["verify-tables"], 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(v["skipped_by_budget"], 22);
    assert_eq!(v["not_checked"], serde_json::json!(["orbits", "components"]));
    for r in rows {
        round_trips::<RowOutcome>(r);
        assert_eq!(r["pass"], true);
        assert_eq!(r["orbits_checked"], false);
    }
    let g2 = json(&["verify-tables", "--filter", "G2"], 0);
    assert_eq!(g2["rows"][0]["computed"], serde_json::json!([1, 4]));
    let f4 = json(&["verify-tables", "--filter", "F4: s=[1,1,1,0,1]"], 0);
    assert_eq!(f4["rows"][0]["m"], 8);
    assert_eq!(f4["rows"][0]["computed"], serde_json::json!([1, 6]));
}

#[test]
fn tables_e8_row_with_full_budget() {
    let filter = "E8: s=[0,0,0,0,0,0,1,0,0]";
    let small = json(&["verify-tables", "--filter", filter], 0);
    assert_eq!(small["rows"].as_array().unwrap().len(), 0);
    let v = json(&["verify-tables", "--budget", "full", "--filter", filter], 0);
    assert_eq!(v["rows"][0]["m"], 4);
    assert_eq!(v["rows"][0]["computed"], serde_json::json!([4, 60]));
}

#[test]
fn tables_mismatch_and_bad_fixture() {
    let v = json(&["verify-tables", &data("wrong_row.toml")], 1);
    assert_eq!(v["failed"], 1);
    assert_eq!(code(&["verify-tables", &data("g2_zero.json")]), Some(2));
    assert_eq!(code(&["verify-tables", "/nonexistent/rows.toml"]), Some(2));
}

#[test]
fn analyze_class_7_trivector() {
    let v = json(&["analyze", &trivector("class7.json")], 0);
    assert_eq!(v["centralizer"]["graded_dims"], serde_json::json!([4, 6, 8]));
    assert_eq!(v["centralizer"]["orbit_dim_g0"], 76);
    assert_eq!(v["jordan_class"]["semisimple_centralizer_dims"], serde_json::json!([24, 28, 28]));
    round_trips::<ElementJson>(&v["x_s"]);
    round_trips::<ElementJson>(&v["x_n"]);
    assert_eq!(v["x_s"]["coeffs"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_zero_element() {
    let v = json(&["analyze", &data("g2_zero.json")], 0);
    assert_eq!(v["centralizer"]["dim"], 14);
    assert_eq!(v["centralizer"]["graded_dims"], serde_json::json!([4, 5, 5]));
    assert_eq!(v["x_s"]["coeffs"], serde_json::json!([]));
    assert_eq!(v["x_n"]["coeffs"], serde_json::json!([]));
}

#[test]
fn analyze_semisimple_and_nilpotent() {
    let s = json(&["analyze", &data("g2_semisimple.json")], 0);
    assert_eq!(s["x_n"]["coeffs"], serde_json::json!([]));
    assert_eq!(s["regularity"]["regular"], true);
    assert_eq!(s["regularity"]["bullet_regular"], true);
    let n = json(&["analyze", &data("g2_nilpotent.json")], 0);
    assert_eq!(n["x_s"]["coeffs"], serde_json::json!([]));
    assert_eq!(n["regularity"]["regular"], false);
    let h = json(&["analyze", &data("a1_h.json")], 0);
    assert_eq!(h["m"], 1);
    assert_eq!(h["centralizer"]["dim"], 1);
}

#[test]
fn analyze_rejects_bad_input() {
    assert_eq!(code(&["analyze", &data("bad_basis.json")]), Some(2));
    assert_eq!(code(&["analyze", &data("wrong_row.toml")]), Some(2));
    assert_eq!(code(&["analyze", "/nonexistent.json"]), Some(2));
    assert_eq!(code(&["analyze", "--degree-one", &data("g2_degree_zero.json")]), Some(2));
    json(&["analyze", &data("g2_degree_zero.json")], 0);
}

#[test]
fn sl2_triples() {
    let v = json(&["sl2-triple", &data("g2_nilpotent.json")], 0);
    assert_eq!(v["relations_hold"], true);
    assert_eq!(v["transversal"], true);
    round_trips::<ElementJson>(&v["h"]);
    let e8 = json(&["sl2-triple", &trivector("class7_nilpotent.json"), "--in", &trivector("x_s_vi.json")], 0);
    assert_eq!(e8["m_graded_dims"], serde_json::json!([24, 28, 28]));
    assert_eq!(e8["relations_hold"], true);
    assert_eq!(code(&["sl2-triple", &data("g2_nilpotent.json"), "--in", &trivector("x_s_vi.json")]), Some(2));
    assert_eq!(code(&["sl2-triple", &data("g2_semisimple.json")]), Some(1));
}

#[test]
fn slice_induction_witnesses() {
    let v = json(&["slice-induction", &trivector("class7.json"), &trivector("class7.json")], 0);
    round_trips::<SliceInductionReport>(&v);
    assert_eq!(v["witnessed"], true);
    let v = json(&["slice-induction", &trivector("class7.json"), &trivector("class8.json")], 1);
    assert_eq!(v["witnessed"], false);
    assert!(v["note"].is_string());
}

#[test]
fn e8_checks_pass() {
    for which in ["dims", "slice", "glue", "modes"] {
        let v = json(&["e8", which], 0);
        assert_eq!(v["pass"], true, "{which}");
        assert_eq!(v["mismatches"], serde_json::json!([]));
    }
    let d = json(&["e8", "dims"], 0);
    assert_eq!(d["details"]["classes"][0]["dims"], serde_json::json!([4, 6, 8]));
    let m = json(&["e8", "modes"], 0);
    assert_eq!(m["details"]["verdict"], "Obstructed");
    let s = json(&["e8", "slice"], 0);
    assert_eq!(s["details"].as_array().unwrap().len(), 3);
}

#[test]
fn modes_solve_json_and_flags() {
    let dir = std::env::temp_dir().join(format!("vinberg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let req = dir.join("req.json");
    std::fs::write(&req, r#"{"m": 3, "n": [3,0,0]}"#).unwrap();
    let v = json(&["modes", "solve", req.to_str().unwrap()], 0);
    round_trips::<ModeReport>(&v);
    assert_eq!(v["identity_holds"], true);
    assert_eq!(v["lambda"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(json(&["modes", "solve", "--m", "3", "--n", "3,0,0"], 0), v);
    let neg = json(&["modes", "solve", "--n", "-1,2,0,5"], 0);
    assert_eq!(neg["lambda_0"], "3/2");
    assert_eq!(code(&["modes", "solve", "--m", "3", "--n", "1,2"]), Some(2));
    assert_eq!(code(&["modes", "solve", req.to_str().unwrap(), "--n", "1"]), Some(2));
    std::fs::write(&req, r#"{"m": "three"}"#).unwrap();
    assert_eq!(code(&["modes", "solve", req.to_str().unwrap()]), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_output() {
    let out = vinberg(&["verify-tables", "--filter", "G2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("PASS G2: s=[1,0,1]"));
    assert!(s.contains("NOT CHECKED"));
    let out = vinberg(&["e8", "modes"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "PASS e8 modes");
}
