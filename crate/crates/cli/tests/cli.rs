use std::process::{Command, Output};

fn gmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mutate_example() {
    let o = gmat(&["mutate", "--matrix", "[[0,1],[-1,0]]", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[[0, -1], [1, 0]]");
}

#[test]
fn weyl_matrix() {
    let o = gmat(&["weyl", "rw", "--type", "A2", "--word", "1"]);
    assert_eq!(stdout(&o).trim(), "[[-1, 1], [0, 1]]");
    let o = gmat(&["--json", "weyl", "reduce", "--type", "A2", "--word", "1,1,2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["reduced"], serde_json::json!([2]));
}

#[test]
fn verify_auslander_three() {
    let o = gmat(&["verify", "thm5.4", "--n", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|r| r["pass"] == true && r["claim"] == "thm-5.4"));
}

#[test]
fn verify_is_deterministic() {
    let a = gmat(&["verify", "thm3.1", "--n", "2", "--json"]);
    let b = gmat(&["verify", "thm3.1", "--n", "2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn ideal_and_gmatrix() {
    let o = gmat(&["ideal", "--type", "preprojective:B2", "--word", "1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = gmat(&["--json", "gmatrix", "--type", "hereditary:A2", "--modules", "P1,S1"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["g"], serde_json::json!([[1, 1], [0, -1]]));
}

#[test]
fn algebra_from_file() {
    let dir = std::env::temp_dir().join(format!("gmat-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    std::fs::write(
        &path,
        r#"{"vertices": 2, "arrows": [{"label": "a", "src": 1, "tgt": 2}], "relations": []}"#,
    )
    .unwrap();
    let o = gmat(&["--json", "algebra", "info", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["dim"], 3);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(gmat(&["mutate", "--matrix", "[[0,1]", "--k", "1"]).status.code(), Some(2));
    assert_eq!(gmat(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(gmat(&["module", "gvec", "--type", "hereditary:A2", "--module", "Q7"]).status.code(), Some(2));
    assert_eq!(gmat(&["algebra", "info", "--type", "unknown:X"]).status.code(), Some(2));
}

#[test]
fn known_failure_exits_one() {
    let o = gmat(&["verify", "thm6.7", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL cor-6.11(2)"));
}
