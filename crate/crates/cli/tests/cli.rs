use std::process::{Command, Output};

use domfree::format::to_graph6;
use domfree::generators::{gen_k_star, gen_path};
use serde_json::Value;

fn domfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = domfree(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

#[test]
fn gamma_of_path() {
    let p7 = to_graph6(&gen_path(7).unwrap());
    let r = report(&["gamma", "--graph", &p7]);
    assert_eq!(r["command"], "gamma");
    assert_eq!(r["input"], p7);
    assert_eq!(r["result"]["gamma"], 3);
}

#[test]
fn family_specs_are_canonicalized() {
    let r = report(&["gamma", "--graph", "path:7"]);
    assert_eq!(r["input"], to_graph6(&gen_path(7).unwrap()));
}

#[test]
fn gen_kstar() {
    let r = report(&["gen", "--family", "kstar", "--size", "3"]);
    assert_eq!(r["result"]["graph6"], to_graph6(&gen_k_star(3).unwrap()));
    assert_eq!(r["result"]["order"], 6);
}

#[test]
fn gen_connected_counts() {
    let r = report(&["gen", "--family", "connected", "--size", "5"]);
    assert_eq!(r["result"]["count"], 21);
}

#[test]
fn dominate_complete_graph() {
    let r = report(&["dominate", "--graph", "complete:6", "--k", "3", "--l", "2", "--m", "5"]);
    assert_eq!(r["result"]["size"], 1);
    assert_eq!(r["result"]["is_dominating"], true);
    assert_eq!(r["bound_report"]["bound_held"], true);
    assert_eq!(r["bound_report"]["forbidden_free"], true);
}

#[test]
fn dominate_without_bound() {
    let r = report(&["dominate", "--graph", "path:7", "--root", "3", "--gamma"]);
    assert_eq!(r["result"]["gamma"], 3);
    assert_eq!(r["bound_report"]["bound_held"], Value::Null);
}

#[test]
fn free_reports_pattern() {
    let r = report(&["free", "--graph", "sstar:3", "--k", "3", "--m", "5"]);
    assert_eq!(r["result"]["free"], false);
    assert_eq!(r["result"]["pattern"], "path:5");
    let r = report(&["free", "--graph", "cycle:5", "--forbid", "path:5"]);
    assert_eq!(r["result"]["free"], true);
}

#[test]
fn witness_on_spider() {
    let r = report(&["witness", "--graph", "sstar:3", "--k", "3", "--l", "2", "--root", "0"]);
    assert_eq!(r["result"]["found"], 1);
    let w = &r["witnesses"][0]["witness"];
    assert_eq!(w["shape"], "sstar");
    assert_eq!(w["size"], 2);
}

#[test]
fn leq_against_family() {
    let r = report(&["leq", "--left", "path:3", "--k", "3", "--l", "2", "--m", "5"]);
    assert_eq!(r["result"]["leq"], true);
    let r = report(&["leq", "--left", "complete:3", "--right", "path:5"]);
    assert_eq!(r["result"]["leq"], false);
}

#[test]
fn bounds_table() {
    let r = report(&["bounds", "--k", "3", "--l", "3", "--m", "4"]);
    assert_eq!(r["result"]["total"], "31");
    assert_eq!(r["result"]["g"], serde_json::json!(["1", "5"]));
    let r = report(&["bounds", "--k", "2", "--l", "2", "--m", "5"]);
    assert_eq!(r["result"]["total"], "5");
}

#[test]
fn edge_list_input_and_output_file() {
    let dir = std::env::temp_dir().join(format!("domfree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("p4.txt");
    std::fs::write(&input, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let output = dir.join("report.json");
    let out = domfree(&[
        "gamma",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "edgelist",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(r["result"]["gamma"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["gamma", "--graph", "D~~~~~~~"][..],
        &["gamma", "--input", "/nonexistent/graph.g6"],
        &["gamma"],
        &["dominate", "--graph", "path:4", "--k", "3"],
        &["dominate", "--graph", "empty:3"],
        &["witness", "--graph", "path:4", "--k", "2", "--l", "2", "--root", "9"],
        &["gen", "--family", "nope", "--size", "3"],
        &["bounds", "--k", "0", "--l", "1", "--m", "1"],
        &["verify", "--suite", "nope"],
    ] {
        let out = domfree(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "witness", "--suite", "bounds", "--samples", "25", "--seed", "5"];
    let a = domfree(&args);
    let b = domfree(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["result"]["passed"], true);
    assert_eq!(r["parameters"]["seed"], 5);
    assert_eq!(r["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_failure_exits_one() {
    // the edgeless graph on four vertices breaks the Ore bound
    let dir = std::env::temp_dir().join(format!("domfree-cli-ore-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("bad.g6");
    std::fs::write(&corpus, "C?\nA_\n").unwrap();
    let out = domfree(&["verify", "--suite", "ore", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["checks"][0]["passed"], false);
    assert_eq!(r["checks"][0]["failed"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
