use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bks")).args(args).env("BKS_THREADS", "1").output().expect("run bks")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = bks(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn parity_census_three_qubits() {
    let (code, v) = json(&["parity-proofs", "--qubits", "3"]);
    assert_eq!(code, 0);
    let counts = &v["result"]["counts"];
    assert_eq!((counts["36-11"].as_u64(), counts["38-13"].as_u64(), counts["40-15"].as_u64()), (Some(320), Some(640), Some(64)));
    assert_eq!(v["command"], "bks parity-proofs --qubits 3 --format json");
    assert_eq!(v["seed"], 0);
}

#[test]
fn parity_type_filter_lists_proofs() {
    let (code, v) = json(&["parity-proofs", "--qubits", "2", "--type", "18-9"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["proofs"].as_array().unwrap().len(), 16);
    let (code, _) = json(&["parity-proofs", "--qubits", "2", "--type", "19-9"]);
    assert_eq!(code, 1);
    assert_eq!(bks(&["parity-proofs", "--qubits", "2", "--type", "nine"]).status.code(), Some(2));
}

#[test]
fn distances_csv_two_qubits() {
    let o = bks(&["distances", "--qubits", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(rows[0], "class_label,dist_sq,dist,count");
    let sq: Vec<&str> = rows[1..].iter().map(|r| r.split(',').nth(1).unwrap()).collect();
    assert_eq!(sq, ["1/3", "7/12", "2/3", "5/6", "1"]);
    let total: usize = rows[1..].iter().map(|r| r.rsplit(',').next().unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(total, 24 * 23 / 2);
}

#[test]
fn verify_reference_proofs() {
    let (code, v) = json(&["verify", "--paper-proof", "80-21"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "non-colorable");
    assert_eq!(v["result"]["type"], "80-21");
}

#[test]
fn colorable_file_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "two.json", r#"{"catalog":"rays24","bases":[[1,2,3,4],[1,2,15,16]],"v":6,"l":2}"#);
    let (code, v) = json(&["verify", &file]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"], "colorable");
    assert!(!v["result"]["witness"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"catalog":"rays24","bases":[[1,2,3,5]],"v":4,"l":1}"#);
    assert_eq!(bks(&["verify", &bad]).status.code(), Some(2));
    let junk = write(dir.path(), "junk.json", "not json");
    assert_eq!(bks(&["verify", &junk]).status.code(), Some(2));
    assert_eq!(bks(&["verify", "--paper-proof", "12-5"]).status.code(), Some(2));
    assert_eq!(bks(&["rays", "--qubits", "5"]).status.code(), Some(2));
    assert_eq!(bks(&["aut", "--crossing", &junk]).status.code(), Some(2));
    assert_eq!(bks(&["verify"]).status.code(), Some(2));
}

#[test]
fn paper_proof_round_trips_through_verify() {
    let o = bks(&["paper-proof", "--name", "80-21", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["bases"].as_array().unwrap().len(), 21);
    assert_eq!(v["result"]["v"], 80);
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p.json", &stdout(&o));
    let (code, r) = json(&["verify", &file]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["verdict"], "non-colorable");
}

#[test]
fn critical_reports_surviving_deletions() {
    let (code, v) = json(&["critical", "--paper-proof", "18-9"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["basis_critical"], true);
    assert_eq!(v["result"]["non_colorable_deletions"].as_array().unwrap().len(), 0);
}

#[test]
fn automorphism_orders() {
    for (args, order) in [
        (vec!["aut", "--config", "square2q"], "72"),
        (vec!["aut", "--config", "pentagram3q"], "120"),
        (vec!["aut", "--family", "proofsbis", "--overlap", "8"], "2304"),
        (vec!["aut", "--paper-proof", "18-9", "--overlap", "1"], "72"),
    ] {
        let (code, v) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["result"]["order"], order, "{args:?}");
    }
    assert_eq!(bks(&["aut", "--family", "square"]).status.code(), Some(2));
}

#[test]
fn crossing_file_family() {
    let dir = tempfile::tempdir().unwrap();
    let proofs: Vec<Value> = ["18-9", "20-11A"]
        .iter()
        .map(|n| {
            let o = bks(&["paper-proof", "--name", n, "--format", "json"]);
            serde_json::from_str::<Value>(&stdout(&o)).unwrap()["result"].clone()
        })
        .collect();
    let file = write(dir.path(), "family.json", &Value::Array(proofs).to_string());
    let (code, v) = json(&["aut", "--crossing", &file, "--overlap", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["graph"]["vertices"], 2);
}

#[test]
fn emit_tables_four_qubits() {
    let o = bks(&["emit-tables", "--qubits", "4", "--format", "csv"]);
    let rows: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        rows,
        [
            "type,count,a1,a2,a3,a4,a5,a6,a7,total",
            "80-21,1,1,1,14,19,60,64,51,210",
            "80-22,1,1,1,17,19,65,64,64,231",
            "80-23,1,1,3,17,19,76,69,68,253",
        ]
    );
}

#[test]
fn search_is_reproducible_and_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("found.json");
    let args = ["search4q", "--seed", "3", "--restarts", "2", "--out", out.to_str().unwrap(), "--format", "json"];
    let first = bks(&args);
    assert_eq!(first.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["result"]["found"]["flags"]["bks_verified"], true);
    assert_eq!(stdout(&bks(&args)), stdout(&first));
    let (code, r) = json(&["verify", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["verdict"], "non-colorable");
}

#[test]
fn csv_rejected_where_unsupported() {
    let o = bks(&["aut", "--config", "square2q", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_thread_cap_is_input_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_bks")).args(["rays", "--qubits", "2"]).env("BKS_THREADS", "zero").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generated_catalog_matches_reference_as_set() {
    let rays = |extra: &[&str]| {
        let mut args = vec!["rays", "--qubits", "3"];
        args.extend(extra);
        let (_, v) = json(&args);
        let mut list: Vec<Value> = v["result"]["rays"].as_array().unwrap().clone();
        list.sort_by_key(|r| r.to_string());
        list
    };
    assert_eq!(rays(&["--generated"]), rays(&[]));
}
