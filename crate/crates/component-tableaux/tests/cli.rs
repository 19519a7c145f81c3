//! End-to-end runs of the binary: exit codes, formats and written reports.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_component-tableaux"))
        .args(args)
        .env_remove("COMPONENT_TABLEAUX_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--composition", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("composition (4): 1 component tableaux\n"));

    let o = run(&["enumerate", "--composition", "1,2,1,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_latex_has_one_diagram_and_matrix_per_tableau() {
    let o = run(&["enumerate", "--composition", "2,1,2,1,2,1", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.matches("\\begin{tikzcd}").count(), 5);
    assert_eq!(s.matches("\\begin{pmatrix}").count(), 5);
}

#[test]
fn enumerate_writes_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("t.txt");
    let o = run(&["enumerate", "--composition", "2,1,1,2", "--out", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&f).unwrap().starts_with("composition (2,1,1,2): 2 component tableaux"));
}

#[test]
fn verify_passes_and_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.json");
    let o = run(&["verify", "--composition", "2,1,1,2", "--out", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("status: pass"));
    let v = read_json(&f);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["compositions"][0]["tableauCount"], 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));

    let o = run(&["verify", "--composition", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_latex_table() {
    let o = run(&["verify", "--composition", "1,2,1,2", "--format", "latex", "--checks", "vanishing,dimension"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("\\begin{tabular}"));
    // Header row plus one per tableau.
    assert_eq!(s.matches("\\\\\n").count(), 3);
}

#[test]
fn orbital_flags_one_closure_and_two_others() {
    let o = run(&["verify", "--composition", "2,1,1,1,2", "--checks", "orbital", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let statuses: Vec<&str> = v["compositions"][0]["tableaux"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["orbital"]["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses.iter().filter(|s| **s == "closure").count(), 1);
    assert_eq!(statuses.iter().filter(|s| **s == "notclosure").count(), 2);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["verify", "--composition", "2,0,1"],
        vec!["verify", "--composition", "a,b"],
        vec!["verify", "--composition", "1,2", "--checks", "bogus"],
        vec!["enumerate", "--composition", "1,2", "--format", "pdf"],
        vec!["verify", "--bogus-flag"],
        vec!["sweep", "--n", "13"],
        vec!["verify", "--composition", "7,6"],
        vec!["enumerate"],
        vec![],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_counts_and_is_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = run(&["sweep", "--n", "4", "--seed", "5", "--threads", "2", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    for n in 1..=4 {
        let name = format!("sweep-n{n}.json");
        let x = std::fs::read(a.path().join(&name)).unwrap();
        let y = std::fs::read(b.path().join(&name)).unwrap();
        assert_eq!(x, y, "{name}");
    }
    let v = read_json(&a.path().join("sweep-n3.json"));
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["seed"], 5);
    let counts: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["tableaux"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1, 1, 1]);
}

#[test]
fn cache_directory_is_filled_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_component-tableaux"))
            .args(["verify", "--composition", "2,1,1,2", "--format", "json"])
            .env("COMPONENT_TABLEAUX_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert_eq!(first.status.code(), Some(0));
    let mut files: Vec<String> =
        std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    files.sort();
    assert_eq!(files, vec!["2-1-1-2_0.json", "2-1-1-2_1.json"]);
    let second = run_cached();
    assert_eq!(first.stdout, second.stdout);
}
