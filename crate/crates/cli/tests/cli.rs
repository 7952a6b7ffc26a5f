use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::sync::Arc;

use homhom::catalog::{disjoint_union, make_uniform};
use homhom::io::structure_to_json;
use homhom::{Color, ColoredStructure, Poset};

use serde_json::Value;

fn homhom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_homhom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn example(args: &[&str]) -> String {
    let mut full = vec!["example"];
    full.extend_from_slice(args);
    let out = homhom(&full, "");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn example1_is_mh() {
    let out = homhom(&["decide", "-", "MH"], &example(&["example1"]));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["member"], true);
}

#[test]
fn example1_is_not_hh() {
    let out = homhom(&["decide", "-", "hh"], &example(&["example1"]));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["class"], "HH");
    assert_eq!(v["member"], false);
    assert_eq!(
        v["witness"]["pairs"],
        serde_json::json!([["a", "a"], ["b", "a"]])
    );
}

#[test]
fn budget_exhaustion_is_unknown() {
    let out = homhom(
        &["decide", "-", "MH", "--max-maps", "2"],
        &example(&["example1"]),
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["member"], Value::Null);
}

#[test]
fn malformed_input_is_an_error() {
    let out = homhom(&["decide", "-", "MH"], "{\"poset\": ");
    assert_eq!(out.status.code(), Some(4));
    assert!(!out.stderr.is_empty());
    let out = homhom(&["decide", "-", "XY"], &example(&["example1"]));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn classify_out_of_scope() {
    // Example 1 is not vertex-uniform
    let out = homhom(&["classify", "-"], &example(&["example1"]));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn classify_chain_graphs() {
    let k3 = example(&["uniform", "--n", "3"]);
    let out = homhom(&["classify", "-"], &k3);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["shape"], "Chain");
    let p3 = example(&["plain", "--graph6", "BW"]);
    assert_eq!(homhom(&["classify", "-"], &p3).status.code(), Some(1));
}

#[test]
fn pump_on_a_path() {
    let p3 = example(&["plain", "--graph6", "BW"]);
    let out = homhom(&["pump", "-"], &p3);
    assert!(out.status.success());
    assert!(json(&out)["config"].is_object());
    let k3 = example(&["uniform", "--n", "3"]);
    assert_eq!(json(&homhom(&["pump", "-"], &k3))["config"], Value::Null);
}

#[test]
fn profile_of_fig6() {
    let out = homhom(&["profile", "-"], &example(&["fig6", "--n", "2"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 9);
}

#[test]
fn gardiner_example_is_ultrahomogeneous() {
    let c5 = example(&["gardiner", "--family", "c5"]);
    assert_eq!(homhom(&["decide", "-", "II"], &c5).status.code(), Some(0));
    let out = homhom(&["example", "gardiner"], "");
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn census_summary() {
    let out = homhom(
        &[
            "census",
            "--poset",
            "chain2",
            "--n",
            "3",
            "--mode",
            "plain",
            "--summary",
            "--jobs",
            "2",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["classes"], 4);
    assert_eq!(v["counts"]["HH"]["member"], 2);
    assert!(v["profiles"].as_array().unwrap().is_empty());
}

#[test]
fn search_finds_example1_shape() {
    let out = homhom(&["search", "--poset", "m2", "--n", "4"], "");
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count"], 7);
}

#[test]
fn cap_is_enforced() {
    let out = homhom(
        &[
            "search",
            "--poset",
            "chain2",
            "--n",
            "5",
            "--directed",
            "--loops",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn classify_unequal_chain_components() {
    let p = Arc::new(Poset::chain(3));
    let (m, top) = (p.color("m").unwrap(), p.top());
    let a = make_uniform(2, m, top, p.clone()).unwrap();
    let b = make_uniform(3, m, top, p).unwrap();
    let g = disjoint_union(&[&a, &b]).unwrap();
    let out = homhom(&["classify", "-"], &structure_to_json(&g));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["member"], false);
}

#[test]
fn classify_c5_red_k5() {
    let p = Arc::new(Poset::m2());
    let (b, r) = (p.color("b").unwrap(), p.color("r").unwrap());
    let edges: Vec<(usize, usize, Color)> = (0..5)
        .flat_map(|i| {
            ((i + 1)..5).map(move |j| (i, j, if j - i == 1 || j - i == 4 { r } else { b }))
        })
        .collect();
    let g = ColoredStructure::undirected(p, vec![Color(0); 5], &edges).unwrap();
    let out = homhom(&["classify", "-"], &structure_to_json(&g));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["branch"], "Strict");
}
