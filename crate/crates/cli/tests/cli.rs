use std::process::{Command, Output};

use semisimplicity::criteria::decide;
use semisimplicity::exactalg::{QParam, RootSpec};
use semisimplicity::params::{DeltaSpec, ParamSpec, RParam};
use semisimplicity_cli::render::{verdict_from_json, verdict_to_json};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semisimplicity")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn brauer_at_two() {
    let v = json(&["decide", "brauer", "--char", "0", "--delta", "2", "--format", "json"]);
    assert_eq!(v["m"], 3);
    assert_eq!(v["unbounded"], false);
}

#[test]
fn bmw_at_a_tenth_root() {
    let v = json(&["decide", "bmw", "--e", "5", "--f", "10", "--eps", "-1", "--N", "-2", "--format", "json"]);
    assert_eq!(v["m"], 4);
    assert_eq!(v["witness"]["box"].as_array().unwrap().len(), 2);
}

#[test]
fn generic_qbrauer_is_always_semisimple() {
    assert!(stdout(&["decide", "qbrauer", "--not-root", "--r-generic"]).contains("semisimple for all n"));
    let v = json(&["decide", "qbrauer", "--not-root", "--r-generic", "--format", "json"]);
    assert!(v["m"].is_null());
    assert_eq!(v["unbounded"], true);
}

#[test]
fn brauer_weights_at_level_two() {
    let text = stdout(&["weights", "brauer", "--n", "2", "--symbolic"]);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("(δ+2)(δ−1)/2"));
    assert!(lines[1].contains("δ(δ−1)/2"));
    assert!(lines[2].starts_with('∅'));
}

#[test]
fn level_one_has_one_weight() {
    let rows = json(&["weights", "brauer", "--n", "1", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["factored"], "δ");
}

#[test]
fn qbrauer_weights() {
    let rows = json(&["weights", "qbrauer", "--n", "2", "--N", "3", "--format", "json"]);
    let labels: Vec<_> = rows.as_array().unwrap().iter().map(|r| r["label"].as_str().unwrap().to_owned()).collect();
    assert_eq!(labels, ["(2)", "(1,1)", "∅"]);
}

#[test]
fn weights_csv() {
    let text = stdout(&["weights", "brauer", "--n", "3", "--delta", "1", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap().get(0), Some("partition"));
    assert_eq!(reader.records().count(), 4);
}

#[test]
fn gram_rank_and_level() {
    assert!(stdout(&["gram", "--char", "0", "--delta", "1", "--n", "2"]).contains("rank 1, corank 2"));
    let v = json(&["gram", "--char", "7", "--delta", "2", "--n-max", "4", "--format", "json"]);
    assert_eq!(v["first_degenerate_level"], 3);
}

#[test]
fn verification_suites_pass() {
    assert!(stdout(&["verify", "--suite", "counting", "--max-n", "6"]).contains("checks passed"));
    let v = json(&["verify", "--suite", "all", "--max-n", "3", "--format", "json"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn parameter_errors_exit_two() {
    for args in [
        &["decide", "brauer", "--delta", "0"][..],
        &["decide", "qbrauer", "--e", "3", "--N", "6"],
        &["decide", "brauer", "--e", "3"],
        &["gram", "--delta", "2", "--n", "9"],
        &["decide", "unknown"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verdicts_round_trip_through_json() {
    let specs = [
        ParamSpec::brauer(0, DeltaSpec::Integer(-5)).unwrap(),
        ParamSpec::brauer(7, DeltaSpec::Integer(3)).unwrap(),
        ParamSpec::qbrauer(0, QParam::Root(RootSpec::new(5, 5).unwrap()), RParam::SignedPower { eps: -1, n: 3 }, None)
            .unwrap(),
        ParamSpec::bmw(0, QParam::NotRootOfUnity, RParam::Generic, None).unwrap(),
    ];
    for spec in specs {
        let v = decide(&spec).unwrap();
        assert_eq!(verdict_from_json(&verdict_to_json(&v)).unwrap(), v);
    }
    let text = stdout(&["decide", "brauer", "--delta", "-3", "--format", "json"]);
    let v = verdict_from_json(&text).unwrap();
    assert_eq!(verdict_to_json(&v).trim(), text.trim());
}
