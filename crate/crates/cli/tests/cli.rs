use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn crq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crq"))
        .args(args)
        .output()
        .expect("crq runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn analyze_ex351() {
    let v = json(&crq(&["analyze", &data("ex351.json")]));
    let r = &v[0];
    assert_eq!(r["decision"]["holds"], true);
    assert_eq!(r["splitting_type"]["parts"], serde_json::json!([[-4, 1]]));
    assert_eq!(r["decomposition"]["tags"], serde_json::json!([["U_1", 1]]));
}

#[test]
fn analyze_ex352_text() {
    let out = crq(&["--format", "text", "analyze", &data("ex352.json")]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("splitting type: 2O(-3)"), "{text}");
    assert!(text.contains("U'_1"), "{text}");
}

#[test]
fn analyze_keeps_input_order_in_parallel() {
    let (a, b) = (data("ex351.json"), data("ex352.json"));
    let v = json(&crq(&["analyze", "--jobs", "3", &b, &a, &b]));
    let sources: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["source"].as_str().unwrap())
        .collect();
    assert_eq!(sources, [b.as_str(), a.as_str(), b.as_str()]);
}

#[test]
fn examples_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("f.json");
    let out = crq(&[
        "examples",
        "f_model",
        "--l",
        "1",
        "--k",
        "2",
        "-o",
        p.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&crq(&["analyze", p.to_str().unwrap()]));
    assert_eq!(v[0]["codim"], 1);
    assert_eq!(v[0]["f_certificate"]["l"], 1);
    assert_eq!(
        v[0]["splitting_type"]["parts"],
        serde_json::json!([[-2, 1], [-1, 2]])
    );
}

#[test]
fn cocr_role_reads_a_kernel() {
    let dir = tempfile::tempdir().unwrap();
    // ker ρ = R·1 in H: the co-CR space Im H
    let p = write(
        dir.path(),
        "imh.json",
        r#"{"k": 1, "role": "cocr", "basis": [["1", "0", "0", "0"]]}"#,
    );
    let v = json(&crq(&["analyze", p.to_str().unwrap()]));
    assert_eq!(v[0]["role"], "cocr");
    assert_eq!(v[0]["splitting_type"]["parts"], serde_json::json!([[2, 1]]));
    assert_eq!(v[0]["f_certificate"]["images_triple_test"], true);
}

#[test]
fn classify_counts() {
    let v = json(&crq(&["classify", "--k", "2", "--l", "2"]));
    assert_eq!(v["count"], 1);
    assert_eq!(v["classes"][0]["splitting_type"]["text"], "2O(2)");
}

#[test]
fn maps_and_products() {
    let v = json(&crq(&["map", &data("im_h_inclusion_map.json")]));
    assert_eq!(
        (v["lift_found"].clone(), v["unique"].clone()),
        (Value::Bool(true), Value::Bool(true))
    );
    let v = json(&crq(&["map", &data("im_h_inclusion_f_map.json")]));
    assert_eq!(v["lift_found"], false);
    let v = json(&crq(&["semidirect", &data("nonsplit_semidirect.json")]));
    assert_eq!(v["direct"], false);
    assert_eq!(v["splitting_type"]["text"], "2O(3)");
    assert_eq!(v["direct_sum_splitting_type"]["text"], "O(2) + O(4)");
    let v = json(&crq(&["semidirect", &data("f_factor_semidirect.json")]));
    assert_eq!(v["direct"], true);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "bad_rat.json",
            r#"{"k": 1, "role": "cr", "basis": [["1", "x", "0", "0"]]}"#,
            "basis[0][1]",
        ),
        (
            "number.json",
            r#"{"k": 1, "role": "cr", "basis": [[1, 0, 0, 0]]}"#,
            "basis[0]",
        ),
        (
            "short.json",
            r#"{"k": 1, "role": "cr", "basis": [["1", "0"]]}"#,
            "expected 4",
        ),
        (
            "extra.json",
            r#"{"k": 1, "role": "cr", "basis": [], "rank": 2}"#,
            "rank",
        ),
        (
            "dependent.json",
            r#"{"k": 1, "role": "cr", "basis": [["1","0","0","0"],["2","0","0","0"],["0","1","0","0"]]}"#,
            "",
        ),
    ];
    for (name, text, needle) in cases {
        let p = write(dir.path(), name, text);
        let out = crq(&["analyze", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", stderr(&out));
        assert!(stderr(&out).contains(needle), "{name}: {}", stderr(&out));
    }
    let out = crq(&["analyze", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn contract_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(
        dir.path(),
        "empty.json",
        r#"{"k": 1, "role": "cr", "basis": []}"#,
    );
    let out = crq(&["analyze", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("structurally impossible"),
        "{}",
        stderr(&out)
    );

    let out = crq(&["analyze", "--role", "cocr", &data("ex351.json")]);
    assert_eq!(out.status.code(), Some(3));

    let bare = write(
        dir.path(),
        "bare.json",
        r#"{"k": 1, "basis": [["1","0","0","0"]]}"#,
    );
    assert_eq!(
        crq(&["analyze", bare.to_str().unwrap()]).status.code(),
        Some(3)
    );

    let alpha = write(
        dir.path(),
        "alpha.json",
        r#"{"k": 1, "role": "cocr", "basis": [["1","0","0","0"]], "alpha": ["1","0","0"]}"#,
    );
    assert_eq!(
        crq(&["analyze", alpha.to_str().unwrap()]).status.code(),
        Some(3)
    );

    assert_eq!(crq(&["examples", "nonsense"]).status.code(), Some(3));
    assert_eq!(crq(&["examples", "u_k"]).status.code(), Some(3));
}

#[test]
fn not_quaternionic_is_reported_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    // span{1, i} in each factor plus one vector: U + iU is only 6-dimensional
    let p = write(
        dir.path(),
        "fails.json",
        r#"{"k": 2, "role": "cr", "basis": [
            ["1","0","0","0","0","0","0","0"],
            ["0","1","0","0","0","0","0","0"],
            ["0","0","0","0","1","0","0","0"],
            ["0","0","0","0","0","1","0","0"],
            ["0","0","1","0","0","0","1","0"]]}"#,
    );
    let v = json(&crq(&["analyze", p.to_str().unwrap()]));
    assert_eq!(v[0]["decision"]["holds"], false);
    assert!(v[0]["decision"]["witness"].is_string());
    assert!(v[0]["splitting_type"].is_null());
}

#[test]
fn full_witness_from_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "imh.json",
        r#"{"k": 1, "role": "cr", "basis": [["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]], "alpha": ["1","0","0"]}"#,
    );
    let v = json(&crq(&["analyze", p.to_str().unwrap()]));
    let w = &v[0]["full_witness"];
    assert!(w["attempts"].as_u64().unwrap() >= 1);
    assert_eq!(w["u"].as_array().unwrap().len(), 4);
}
