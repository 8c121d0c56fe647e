//! End-to-end runs of the `brickwork` binary: outputs and exit codes.

use std::process::{Command, Output};

fn brickwork(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brickwork"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_petersen_json() {
    let o = brickwork(&["analyze", "--catalog", "petersen", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "brick");
    assert_eq!(v["snark"], true);
    assert_eq!(v["quasi_b_invariant_edges"], 15);
}

#[test]
fn analyze_reads_graph6_files() {
    let dir = std::env::temp_dir().join(format!("brickwork-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let o = brickwork(&["analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict Brick"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn decompose_counts_bricks_and_braces() {
    let o = brickwork(&["decompose", "--catalog", "fig1", "--policy", "seed:7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bricks 1 braces 1"));
}

#[test]
fn classify_edges_lists_every_edge() {
    let o = brickwork(&["classify-edges", "--catalog", "petersen", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let edges = v.as_array().unwrap();
    assert_eq!(edges.len(), 15);
    assert!(edges.iter().all(|e| e["verdict"]["class"] == "quasi-b-invariant"));
}

#[test]
fn verify_emits_json_lines_with_summary() {
    let o = brickwork(&["verify", "--theorem", "T1.6", "--n", "4", "6", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["type"], "summary");
    assert_eq!(last["checked"], 3);
    assert_eq!(last["failed"], 0);
}

#[test]
fn catalog_show_checks_facts() {
    let o = brickwork(&["catalog", "show", "k4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["facts"].as_array().unwrap().iter().all(|f| f["holds"] == true));
}

#[test]
fn generate_writes_graph6() {
    let o = brickwork(&["generate", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    for args in [
        &["verify", "--theorem", "T9.9", "--n", "4"][..],
        &["analyze"],
        &["analyze", "--g6", "!!"],
        &["generate", "--n", "7"],
        &["catalog", "show", "nosuch"],
    ] {
        assert_eq!(brickwork(args).status.code(), Some(2), "{args:?}");
    }
}
