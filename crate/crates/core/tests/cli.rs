use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lucas-pantograph"))
        .args(args)
        .output()
        .expect("run the binary")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn values(rows: &Value) -> Vec<i64> {
    rows.as_array().unwrap().iter().map(|r| r["value"].as_i64().unwrap()).collect()
}

#[test]
fn seq_examples() {
    let fib = json(&["seq", "--s", "1", "--t", "1", "--n", "6", "--exact", "--format", "json"]);
    assert_eq!(values(&fib), [0, 1, 1, 2, 3, 5, 8]);
    let mersenne = json(&["seq", "--s", "3", "--t", "-2", "--n", "6", "--exact", "--format", "json"]);
    assert_eq!(values(&mersenne), [0, 1, 3, 7, 15, 31, 63]);
    let lucas = json(&["seq", "--s", "1", "--t", "1", "--n", "5", "--companion", "--exact", "--format", "json"]);
    assert_eq!(values(&lucas), [2, 1, 3, 4, 7, 11]);
    let floats = json(&["seq", "--s", "1", "--t", "1", "--n", "10", "--format", "json"]);
    assert_eq!(floats[10]["value"].as_f64(), Some(55.0));
    assert_eq!(code(&["seq", "--s", "0", "--t", "1", "--n", "4"]), 3);
    assert_eq!(code(&["seq", "--s", "one", "--t", "1", "--n", "4"]), 2);
    assert_eq!(code(&["seq", "--s", "1", "--t", "1"]), 2);
}

#[test]
fn eval_examples() {
    let cos = json(&["eval", "--fn", "cos", "--s", "1", "--t", "1", "--u", "1", "--x", "0", "--format", "json"]);
    assert_eq!(cos["value"].as_f64(), Some(1.0));
    let exp = json(&["eval", "--fn", "exp", "--s", "1", "--t", "1", "--u", "1", "--x", "1", "--format", "json"]);
    // 50 terms of sum 1/{n}! over the Fibonacci factorials
    let (mut fact, mut a, mut b, mut sum) = (1.0f64, 0.0f64, 1.0f64, 1.0f64);
    for _ in 1..50 {
        (a, b) = (b, a + b);
        fact *= a;
        sum += 1.0 / fact;
    }
    let got = exp["value"].as_f64().unwrap();
    assert!((got - sum).abs() <= 1e-12 * sum, "{got} vs {sum}");
    assert!(exp["termsUsed"].as_u64().unwrap() > 0);
    assert_eq!(code(&["eval", "--fn", "cot", "--s", "1", "--t", "1", "--u", "1", "--x", "0"]), 3);
    assert_eq!(code(&["eval", "--fn", "nope", "--s", "1", "--t", "1", "--u", "1", "--x", "0"]), 2);
    assert_eq!(code(&["eval", "--fn", "sin", "--s", "1", "--t", "1", "--u", "-1", "--x", "-0.25"]), 0);
}

#[test]
fn table_examples() {
    let base = ["table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1", "--from", "0", "--to", "1", "--step", "0.1"];
    let rows = json(&[&base[..], &["--format", "json"]].concat());
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0]["value"].as_f64(), Some(0.0));
    let csv_out = run(&[&base[..], &["--format", "csv"]].concat());
    let text = String::from_utf8(csv_out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,value,diverged"));
    assert_eq!(lines.count(), 11);

    let poles = json(&["table", "--fn", "csc", "--s", "1", "--t", "1", "--u", "1", "--from", "0", "--to", "0.2", "--step", "0.1", "--format", "json"]);
    assert!(poles[0]["value"].is_null());
    assert_eq!(poles[0]["diverged"], Value::Bool(true));
    assert_eq!(poles[1]["diverged"], Value::Bool(false));
    assert_eq!(code(&["table", "--fn", "sin", "--s", "1", "--t", "1", "--u", "1", "--from", "0", "--to", "1", "--step", "0"]), 2);
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--suite", "pascal-1", "--trials", "1", "--seed", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &report["identities"][0];
    assert_eq!(entry["status"], "pass");
    assert!(entry["sample"]["phi"].is_string());
    assert_eq!(code(&["verify", "--suite", "nosuch"]), 2);
    assert_eq!(code(&["verify", "--suite", "lucas,calculus", "--trials", "3", "--format", "csv"]), 0);
}

#[test]
fn piu_examples() {
    let root = json(&["piu", "--s", "1", "--t", "1", "--u", "1", "--format", "json"]);
    let value = root["piU"].as_f64().unwrap();
    assert!(value > 1.5 && value < 1.6);
    assert!(root["residual"].as_f64().unwrap() < 1e-10);
    assert_eq!(code(&["piu", "--s", "1", "--t", "1", "--u", "1", "--xmax", "1"]), 4);
}

#[test]
fn integrate_examples() {
    let cube = json(&["integrate", "--poly", "0,0,0,1", "--s", "1", "--t", "1", "--a", "0", "--b", "1", "--format", "json"]);
    assert!((cube["value"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-10);
    let empty = json(&["integrate", "--poly", "1,2", "--s", "1", "--t", "1", "--a", "0.5", "--b", "0.5", "--format", "json"]);
    assert_eq!(empty["value"].as_f64(), Some(0.0));
    let negative = json(&["integrate", "--poly", "-1,2", "--s", "1", "--t", "1", "--a", "0", "--b", "1", "--format", "json"]);
    // {2} = 1 for s = 1, so the linear term integrates to 2
    assert!((negative["value"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert_eq!(code(&["integrate", "--poly", "0,1", "--s", "1", "--t", "-1", "--a", "0", "--b", "1"]), 3);
    assert_eq!(code(&["integrate", "--poly", "0,x", "--s", "1", "--t", "1", "--a", "0", "--b", "1"]), 2);
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}
