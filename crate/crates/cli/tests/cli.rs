use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("layerwr-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn layerwr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_layerwr")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn sparsify_tri() {
    let o = layerwr(&["sparsify", &fixture("tri.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("output    [[7, 1]]"));
}

#[test]
fn sparsify_writes_code_and_cell_table() {
    let out = scratch("shor-layer.json");
    let o = layerwr(&[
        "sparsify",
        &fixture("shor.json"),
        "--coloring",
        &fixture("shor_coloring.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = layerwr(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("n           173\nk           1\n"));
    let cells = fs::read_to_string(format!("{}.cells.tsv", out.display())).unwrap();
    let lines: Vec<&str> = cells.lines().collect();
    assert_eq!(lines[0], "level\tindex\tblock\tlayer\ta\tb");
    assert_eq!(lines.iter().filter(|l| l.starts_with("1\t")).count(), 173);
}

#[test]
fn malformed_coloring_cites_the_condition() {
    let o = layerwr(&["sparsify", &fixture("shor.json"), "--coloring", &fixture("shor_bad_coloring.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("condition 1"), "{}", stderr(&o));
}

#[test]
fn io_and_parse_errors_exit_one() {
    assert_eq!(layerwr(&["verify", "/nonexistent/code.json"]).status.code(), Some(1));
    let bad = scratch("bad.json");
    fs::write(&bad, "{\"format_version\": 1, \"n\": 2, \"hx\": [[1, 0]], \"hz\": []}").unwrap();
    let o = layerwr(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not strictly ascending"));
    assert_eq!(layerwr(&["sparsify", &fixture("tri.json"), "--chi", "1,2"]).status.code(), Some(1));
    assert_eq!(layerwr(&["distance", &fixture("tri.json"), "--search", "10"]).status.code(), Some(1));
}

#[test]
fn verify_reports_anticommuting_checks() {
    let f = scratch("anti.json");
    fs::write(&f, "{\"format_version\": 1, \"n\": 2, \"hx\": [[0]], \"hz\": [[0, 1]]}").unwrap();
    let o = layerwr(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("commutation FAIL"));
}

#[test]
fn hastings_refuses_the_two_qubit_toy() {
    let o = layerwr(&["hastings", &fixture("two_qubit_toy.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("qubits [0]"), "{}", stderr(&o));
}

#[test]
fn hastings_partial_cones_only_the_subset() {
    let o = layerwr(&["hastings", &fixture("steane.json"), "--partial", "0,2", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let coned: Vec<u64> = v["report"]["cone"]["coned"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["z"].as_u64().unwrap())
        .collect();
    assert_eq!(coned, vec![0, 2]);
}

#[test]
fn distance_exact_and_search() {
    let o = layerwr(&["distance", &fixture("tri.json"), "--exact"]);
    assert_eq!(stdout(&o), "d_X = 2  witness [0, 2]\nd_Z = 1  witness [2]\n");
    let o = layerwr(&["distance", &fixture("shor.json"), "--side", "Z", "--search", "20", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("d_Z <= 3"));
}

#[test]
fn expansion_reports() {
    let o = layerwr(&["expansion", "--rep", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("R(3)  c* = 3/4"));
    let o = layerwr(&["expansion", "--square", "2", "4", "1", "--report", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(layerwr(&["expansion", "--square", "5", "5", "1"]).status.code(), Some(1));
}

#[test]
fn timing_only_when_requested() {
    let plain = layerwr(&["sparsify", &fixture("tri.json"), "--report", "json"]);
    assert!(!stdout(&plain).contains("timing_ms"));
    let timed = layerwr(&["sparsify", &fixture("tri.json"), "--report", "json", "--timing"]);
    assert!(stdout(&timed).contains("timing_ms"));
}

#[test]
fn import_alist_builds_steane() {
    let h = fixture("hamming7.alist");
    let o = layerwr(&["import-alist", &h, &h, "--name", "steane"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fs::read_to_string(fixture("steane.json")).unwrap());
    let o = layerwr(&["import-alist", &h, "--hgp"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 49 + 9);
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_layerwr"))
        .args(["expansion", "--rep", "4"])
        .env("LAYERWR_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_layerwr"))
        .args(["expansion", "--rep", "4"])
        .env("LAYERWR_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
