use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn verma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma"))
        .args(args)
        .env_remove("VERMA_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read(path).expect("golden file")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn column(doc: &Value, key: &str) -> Vec<Value> {
    doc["rows"].as_array().unwrap().iter().map(|r| r[key].clone()).collect()
}

const ANNIHILATOR: &[&str] = &["annihilator", "--n", "2", "--flag", "1", "--weights", "3", "--max-level", "4"];
const JETS: &[&str] = &["jets", "--n", "3", "--flag", "1", "--weights", "3", "--max-level", "4"];
const BASIS: &[&str] = &["basis", "--n", "3", "--flag", "1,2", "--weights", "2,3", "--level", "0"];

#[test]
fn golden_files_match() {
    for (args, name) in [
        (ANNIHILATOR, "annihilator_sl2_d3.json"),
        (JETS, "jets_sl3_flag1_l3.json"),
        (BASIS, "basis_sl3_level0.json"),
    ] {
        let out = verma(args);
        assert!(out.status.success());
        assert_eq!(out.stdout, golden(name), "{name}");
    }
}

#[test]
fn golden_contents() {
    let doc = json(&verma(ANNIHILATOR));
    let equal: Vec<bool> = column(&doc, "equal").iter().map(|v| v.as_bool().unwrap()).collect();
    assert_eq!(equal, [true, true, true, true, false]);
    let doc = json(&verma(JETS));
    let dims: Vec<u64> = column(&doc, "dim_l").iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 3, 6, 10, 10]);
    let identity: Vec<bool> = column(&doc, "identity").iter().map(|v| v.as_bool().unwrap()).collect();
    assert_eq!(identity, [true, true, true, true, false]);
    let doc = json(&verma(BASIS));
    assert_eq!(column(&doc, "dim"), [Value::from(1)]);
}

#[test]
fn rationals_render_reduced() {
    let doc = json(&verma(&["simple", "--n", "2", "--flag", "1", "--weights", "2/4", "--level", "1"]));
    assert_eq!(doc["config"]["weights"], serde_json::json!(["1/2"]));
    let doc = json(&verma(&["simple", "--n", "2", "--flag", "1", "--weights", "-6/3", "--level", "1"]));
    assert_eq!(doc["config"]["weights"], serde_json::json!([-2]));
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["bogus", "--n", "2", "--flag", "1", "--weights", "3", "--level", "1"][..],
        &["basis", "--n", "3", "--flag", "2,1", "--weights", "1,1", "--level", "1"],
        &["basis", "--n", "3", "--flag", "1", "--weights", "1,1", "--level", "1"],
        &["basis", "--n", "3", "--flag", "1,x", "--weights", "1,1", "--level", "1"],
        &["basis", "--n", "2", "--flag", "1", "--weights", "3"],
        &["verify", "--n", "4", "--flag", "2", "--weights", "1", "--level", "1"],
    ] {
        let out = verma(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn capacity_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_verma"))
        .args(ANNIHILATOR)
        .env("VERMA_MAX_DIM", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
}

#[test]
fn csv_output() {
    let out = verma(&[JETS, &["--format", "csv"]].concat());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("dim_l,dim_m,identity,in_range_all,in_range_flag,level"));
    assert_eq!(lines.last(), Some("10,15,false,false,false,4"));
}

#[test]
fn classify_and_verify() {
    let doc = json(&verma(&["classify", "--n", "2", "--flag", "1", "--weights", "3", "--level", "6"]));
    assert_eq!(doc["notes"][0], "finite, dim L = 4");
    let doc = json(&verma(&["classify", "--n", "2", "--flag", "1", "--weights", "-2", "--level", "8"]));
    assert_eq!(doc["notes"][0], "infinite, all l_i negative");
    let ok = verma(&["verify", "--n", "2", "--flag", "1", "--weights", "3", "--level", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    // the generator description of ann_l breaks at level 3 for the adjoint weight
    let bad = verma(&["verify", "--n", "3", "--flag", "1,2", "--weights", "1,1", "--level", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("ideals.generators_describe_ann"));
}
