#![allow(dead_code)]

use std::process::{Command, Output};

pub fn jetline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetline"))
        .args(args)
        .output()
        .expect("the jetline binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 output")
}

/// Runs with `--json`, asserts success and returns the parsed document.
pub fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = jetline(&all);
    assert!(o.status.success(), "{args:?} failed: {}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}
