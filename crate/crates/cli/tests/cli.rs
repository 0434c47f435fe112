use std::fs;
use std::process::{Command, Output};

fn polyprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyprime"))
        .args(args)
        .env_remove("POLYPRIME_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn certify_frame_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("frame3.grid");
    fs::write(&path, "###\n#.#\n###\n").unwrap();
    let o = polyprime(&["certify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Prime (L-configuration; I_P = J_P verified)\n");
}

#[test]
fn ring22_has_no_zigzag_walk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring22.grid");
    fs::write(&path, polyprime::format::to_grid(&polyprime::shapes::ring22())).unwrap();
    let o = polyprime(&["zigzag", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn diamond_walk_in_json() {
    let o = polyprime(&["zigzag", "diamond16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["zigzag"]["intervals"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_rank_twelve_is_byte_stable() {
    let a = polyprime(&["verify", "--max-rank", "12", "--jobs", "2"]);
    let b = polyprime(&["verify", "--max-rank", "12", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let summary: serde_json::Value = serde_json::from_str(lines[5]).unwrap();
    assert_eq!(summary["summary"]["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(summary["summary"]["per_rank"]["8"], 1);
}

#[test]
fn verify_uses_cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_polyprime"))
            .args(["verify", "--max-rank", "10"])
            .env("POLYPRIME_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    let summary = |o: &Output| -> serde_json::Value {
        serde_json::from_str(stdout(o).lines().last().unwrap()).unwrap()
    };
    assert_eq!(summary(&first)["summary"]["cache_hits"], 0);
    assert_eq!(summary(&second)["summary"]["cache_hits"], 2);
}

#[test]
fn parse_errors_report_position_and_exit_four() {
    let o = polyprime(&["classify", "##/#x"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 2"));
    let o = polyprime(&["classify", "frame3", "--no-such-flag"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn exhausted_budget_exits_three() {
    let o = polyprime(&["certify", "frame3", "--budget-pairs", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("containment only"));
}

#[test]
fn classify_reports_structure() {
    let o = polyprime(&["classify", "frame3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holes"], 1);
    assert_eq!(v["simple"], false);
    assert_eq!(v["l_configurations"].as_array().unwrap().len(), 4);
    assert_eq!(v["closed_path"].as_array().unwrap().len(), 8);
}

#[test]
fn json_input_round_trips_through_enumerate() {
    let o = polyprime(&["enumerate", "--max-rank", "12", "--format", "json"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let shape = serde_json::json!({ "cells": v["cells"] }).to_string();
        let c = polyprime(&["classify", &shape, "--json"]);
        let facts: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
        assert_eq!(facts["holes"], 1);
        assert_eq!(facts["rank"], v["rank"]);
    }
}

#[test]
fn ideal_export_lists_minors_and_toric_basis() {
    let o = polyprime(&["ideal", "frame3", "--map", "--toric"]);
    let text = stdout(&o);
    assert!(text.starts_with("variables: "));
    let minors = text.lines().skip(1).take_while(|l| *l != "map:").count();
    assert_eq!(minors, 20);
    assert!(text.contains("\ntoric:\n"));
    assert!(text.lines().any(|l| l.contains("-> ") && l.ends_with("*w")));
}

#[test]
fn family_examples_and_specs() {
    let o = polyprime(&["family", "ladder-rectangle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Prime (family marking"));

    let dir = tempfile::tempdir().unwrap();
    let mut spec = serde_json::to_value(polyprime::shapes::l_rectangle_small()).unwrap();
    spec["kind"] = "good_l_rectangle".into();
    let path = dir.path().join("spec.json");
    fs::write(&path, spec.to_string()).unwrap();
    let o = polyprime(&["family", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["verdict"], "prime");

    let o = polyprime(&["family", path.to_str().unwrap().replace("spec", "missing").as_str()]);
    assert_eq!(o.status.code(), Some(4));
    spec["kind"] = "ladder_rectangle".into();
    fs::write(&path, spec.to_string()).unwrap();
    let o = polyprime(&["family", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("condition 3"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let o = polyprime(&["classify", "ring22", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&polyprime(&["classify", "ring22"])));
}
