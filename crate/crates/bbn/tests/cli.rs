use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bbn")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn invariant_json() {
    let (code, out) = run(&["invariant", "--strands", "2", "--braid", "x1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["invariant"], "1");
    assert_eq!(v["exponent_sum"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["invariant", "--strands", "2", "--braid", "x3"]).0, 2);
    assert_eq!(run(&["trace", "--strands", "2", "--element", "z1"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "ybe", "--N", "4"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn checks_exit_with_zero() {
    assert_eq!(run(&["verify", "--suite", "def", "--n", "2"]).0, 0);
    assert_eq!(run(&["bratteli", "--n", "3"]).0, 0);
    assert_eq!(run(&["dimension", "--n", "2", "--points", "1"]).0, 0);
    let (code, out) = run(&["diagram", "--op", "trace", "--strands", "1", "--diagram", "[(t1,b1,1)]"]);
    assert_eq!(code, 0);
    assert!(out.contains("x^-1*A"));
}

#[test]
fn numeric_trace() {
    let (code, out) = run(&["trace", "--strands", "2", "--element", "e1", "--mode", "numeric", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"trace\""));
}
