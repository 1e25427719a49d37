use std::process::Command;

fn skewcat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_skewcat")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn list_names_suites_and_actions() {
    let (code, out, _) = skewcat(&["list"]);
    assert_eq!(code, 0);
    for name in ["skew-laws", "monoid-oracle", "counterexamples", "truncation", "copower", "flatten"] {
        assert!(out.contains(name), "{name}");
    }
}

#[test]
fn passing_run_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, out, err) = skewcat(&["run", "--suite", "monoid-oracle", "--max-order", "2", "--seed", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 5);
}

#[test]
fn report_goes_to_stdout_without_out() {
    let (code, out, _) = skewcat(&["run", "--suite", "skew-laws", "--action", "copower", "--budget", "200"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(skewcat(&["run", "--suite", "nope"]).0, 2);
    assert_eq!(skewcat(&["run", "--suite", "duals", "--action", "nope"]).0, 2);
    assert_eq!(skewcat(&["run", "--suite", "duals", "--load", "/nonexistent.json"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind": "gms", "dist": [["0", "1", "5"], ["1", "0", "1"], ["5", "1", "0"]]}"#).unwrap();
    let (code, _, err) = skewcat(&["run", "--suite", "duals", "--load", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("triangle") || err.contains("invalid"), "{err}");
    let inf = dir.path().join("inf.json");
    std::fs::write(&inf, r#"{"kind": "gms", "dist": [["0", "inf"], ["inf", "0"]]}"#).unwrap();
    assert_eq!(skewcat(&["run", "--suite", "counterexamples", "--load", inf.to_str().unwrap()]).0, 2);
    assert_eq!(skewcat(&["bogus"]).0, 2);
}

#[test]
fn law_failures_exit_1() {
    // a one-object category whose composition is not associative
    let doc = r#"{"kind": "category", "objects": ["*"],
        "morphisms": [{"src": 0, "tgt": 0, "payload": "1"}, {"src": 0, "tgt": 0, "payload": "a"}, {"src": 0, "tgt": 0, "payload": "b"}],
        "identities": [0],
        "compose": [[0, 1, 2], [1, 2, 2], [2, 1, 2]]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    std::fs::write(&path, doc).unwrap();
    let (code, _, err) = skewcat(&["run", "--suite", "duals", "--load", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("FAIL category-axioms"));
}

#[test]
fn loaded_monoid_action() {
    let doc = r#"{"kind": "monoid_action", "x": {"mul": [[0, 1], [1, 0]], "unit": 0},
        "c": {"mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "unit": 0}, "act": [[0, 0], [1, 2], [2, 1]]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, doc).unwrap();
    let (code, out, _) = skewcat(&["run", "--suite", "monoid-oracle", "--max-order", "1", "--load", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("loaded-action"));
}
