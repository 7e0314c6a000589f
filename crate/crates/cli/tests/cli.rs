use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn dgsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgsym")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dgsym-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = scratch(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn group_report() {
    let o = dgsym(&["group", "catalog:PSL(3,2)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], "168");
    assert_eq!(v["primitive"], true);
    assert_eq!(v["solvable"], false);
    let o = dgsym(&["group", "catalog:S4", "--stabilizer", "2"]);
    assert!(stdout(&o).contains("stabilizer of 2: order 6"));
}

#[test]
fn coset_spec_checks() {
    let spec = write(
        "f21.json",
        r#"{"group": "catalog:F21", "subgroup_gens": ["(2 3 5)(4 7 6)"], "g": "(1 2 3 4 5 6 7)"}"#,
    );
    let o = dgsym(&["digraph", "build-coset", &spec, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"], 7);
    assert_eq!(v["valency"], 3);

    let crit = dgsym(&["check", "criterion", &spec]);
    let arc2 = dgsym(&["check", "arc-transitivity", "--spec", &spec, "--s", "2"]);
    // the criterion and 2-arc-transitivity give the same exit code
    assert_eq!(crit.status.code(), arc2.status.code());
    assert!(matches!(crit.status.code(), Some(0 | 1)));
    let arc1 = dgsym(&["check", "arc-transitivity", "--spec", &spec, "--s", "1"]);
    assert_eq!(arc1.status.code(), Some(0));

    let lemma = dgsym(&["check", "lemma22", "--spec", &spec, "--format", "json"]);
    assert_eq!(lemma.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&lemma)).unwrap();
    assert_eq!(v["two_arc"].as_array().unwrap().len(), 3);

    let edges = dgsym(&["digraph", "build-coset", &spec, "--export", "edges"]);
    let path = write("f21.edges", &stdout(&edges));
    let info = dgsym(&["digraph", "info", &path, "--max-s", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&info)).unwrap();
    assert_eq!(v["s_arc_counts"], serde_json::json!(["7", "21", "63"]));
}

#[test]
fn cayley_and_products() {
    let o = dgsym(&["digraph", "build-cayley", "catalog:C5", "--element", "(1 2 3 4 5)", "--export", "edges"]);
    assert_eq!(o.status.code(), Some(0));
    let c5 = write("c5.edges", &stdout(&o));
    let c3 = write("c3.edges", "3 3\n0 1\n1 2\n2 0\n");
    let p = dgsym(&["digraph", "product", &c3, &c5, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&p)).unwrap();
    assert_eq!(v["vertices"], 15);
    assert_eq!(v["strongly_connected"], true);
    let w = dgsym(&["digraph", "product", &c5, "--power", "2", "--group", "catalog:C5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&w)).unwrap();
    assert_eq!(v["group_order"], "50");
    let dot = dgsym(&["digraph", "export", &c3]);
    assert!(stdout(&dot).contains("0 -> 1"));
}

#[test]
fn regular_subgroup_search() {
    let o = dgsym(&["search", "regular-subgroup", "catalog:A4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["regular_subgroup"].is_array());
    let o = dgsym(&["search", "regular-subgroup", "catalog:PSL(2,9)", "--bound-regular-nodes", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes_and_errors() {
    assert_eq!(dgsym(&["case", "run", "unknown"]).status.code(), Some(2));
    assert_eq!(dgsym(&["group", "catalog:NoSuchGroup"]).status.code(), Some(2));
    assert_eq!(dgsym(&["group", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(dgsym(&["frobnicate"]).status.code(), Some(2));
    let bad = write("bad.json", r#"{"group": "catalog:S3", "subgroup_gens": [], "g": "(1 2)"}"#);
    assert_eq!(dgsym(&["check", "criterion", &bad]).status.code(), Some(2));
    let loops = write("loop.edges", "2 1\n0 0\n");
    assert_eq!(dgsym(&["digraph", "info", &loops]).status.code(), Some(2));
}

#[test]
fn case_report_to_file() {
    let out = scratch("he.jsonl");
    let o = dgsym(&["case", "run", "he_divisor", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["actual"], "8160");
    assert_eq!(lines[0]["status"], "pass");
    let list = dgsym(&["case", "list"]);
    assert!(stdout(&list).contains("diagonal_a5_k3"));
}
