//! The command-line binary: documented examples, formats, exit codes and configuration.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lusztig-fock"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
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
fn core_examples() {
    let v = json(&["core", "--e", "2", "3,1"]);
    assert_eq!(v["core"], serde_json::json!([]));
    assert_eq!(v["quotient"], serde_json::json!([[2], []]));
    let v = json(&["core", "--e", "2", "2,1"]);
    assert_eq!(v["core"], serde_json::json!([2, 1]));
    assert_eq!(v["quotient"], serde_json::json!([[], []]));
    let v = json(&["core", "--e", "3", ""]);
    assert_eq!(v["core"], serde_json::json!([]));
    assert_eq!(v["quotient"], serde_json::json!([[], [], []]));
    assert_eq!(v["charge"], serde_json::json!([0, 0, 0]));
    assert_eq!(stdout(&["core", "--e", "2", "3,1", "--format", "plain"]).lines().next(), Some("core []"));
}

#[test]
fn decomp_examples() {
    let v = json(&["decomp", "--n", "1", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "labels": ["1"], "entries": [[1]] }));
    let latex = stdout(&["decomp", "--n", "4", "--e", "4", "--format", "latex"]);
    assert_eq!(
        latex,
        "\\begin{pmatrix}4||&1&0&0&0\\cr\n  31||&1&1&0&0\\cr\n  21^2||&0&1&1&0\\cr\n  1^4||&0&0&1&1\\cr\n\\end{pmatrix}\n"
    );
    let latex = stdout(&["decomp", "--n", "6", "--e", "2", "--inverse", "--format", "latex"]);
    assert!(latex.contains("3^2||&-1&1&-1&0&1&0&0&0&0&0\\cr"));
    assert!(latex.contains("1^6||&0&0&0&0&0&0&-1&1&-1&1\\cr"));
    let csv = stdout(&["decomp", "--n", "2", "--e", "2", "--format", "csv"]);
    assert_eq!(csv, ",2,\"1,1\"\n2,1,0\n\"1,1\",1,1\n");
    let all = json(&["decomp", "--n", "4", "--e", "4", "--all"]);
    assert_eq!(all["labels"].as_array().unwrap().len(), 5);
    let block = json(&["decomp", "--n", "4", "--e", "4", "--core", "2,2"]);
    assert_eq!(block, serde_json::json!({ "labels": ["2,2"], "entries": [[1]] }));
    let generic = json(&["decomp", "--n", "2", "--e", "2", "--generic"]);
    assert_eq!(generic["entries"], serde_json::json!([["1", "0"], ["v", "1"]]));
}

#[test]
fn apply_examples() {
    let v = json(&["apply", "S", "--mu", "3", "--to", "", "--e", "2", "--at-v", "1"]);
    assert_eq!(v, serde_json::json!({ "3,3": 1, "4,2": -1, "5,1": 1, "6": -1 }));
    let v = json(&["apply", "V", "--k", "1", "--to", "", "--e", "2", "--at-v", "1"]);
    assert_eq!(v, serde_json::json!({ "2": -1, "1,1": 1 }));
    let v = json(&["apply", "L", "--mu", "", "--to", "2,1", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "2,1": 1 }));
    let v = json(&["apply", "V", "--k", "1", "--to", "", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "2": "-v^-1", "1,1": "1" }));
    let v = json(&["apply", "b", "--r", "1", "--to", "", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "2": "-v^-1", "1,1": "1" }));
    let v = json(&["apply", "f", "--r", "1", "--to", "1", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "2": "v", "1,1": "1" }));
    let v = json(&["apply", "b", "--r", "1", "--adjoint", "--to", "2", "--e", "2"]);
    assert_eq!(v, serde_json::json!({ "": "-v^-1" }));
}

#[test]
fn apply_reads_stdin() {
    let mut child = bin()
        .args(["apply", "S", "--mu", "1", "--stdin", "--e", "2", "--at-v", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"e":2,"d":0,"entries":{"":"1"}}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!({ "2": -1, "1,1": 1 }));
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "lusztig-s", "--e", "2", "--nmax", "6"]);
    assert!(out.trim_end().ends_with("lusztig-s: PASS (217 cases)"), "{out}");
    let out = stdout(&["verify", "steinberg", "--e", "2", "--nmax", "6"]);
    for row in ["row 3^2 ", "row 21^4 ", "row 1^6 ", "row 2^21^2 ", "row 41^2 "] {
        assert!(out.lines().any(|l| l.starts_with("PASS steinberg") && l.contains(row)), "{row}");
    }
    assert!(out.contains("levi=GL(4,q) x GL(1,q^2)"));
    let out = stdout(&["verify", "blocks", "--e", "5", "--nmax", "4"]);
    assert!(out.lines().filter(|l| l.starts_with("PASS blocks")).all(|l| l.contains("weight=0 size=1")));
    assert!(out.trim_end().ends_with("PASS (12 cases)"));
    let out = stdout(&["verify", "all", "--e", "3", "--nmax", "5"]);
    assert!(out.trim_end().lines().last().unwrap().starts_with("PASS ("));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["core", "--e", "2", "3,x"]).status.code(), Some(2));
    assert_eq!(run(&["core", "--e", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["apply", "Q", "--to", ""]).status.code(), Some(2));
    assert_eq!(run(&["apply", "S", "--to", ""]).status.code(), Some(2));
    assert_eq!(run(&["decomp", "--n", "9", "--e", "2"]).status.code(), Some(3));
    assert_eq!(run(&["blocks", "--n", "11"]).status.code(), Some(3));
    let out = run(&["decomp", "--n", "9", "--e", "2"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn config_file_overrides() {
    let dir = std::env::temp_dir().join(format!("lusztig-fock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    std::fs::write(&path, "e = 3\nformat = \"plain\"\n[bounds]\ncanonical = 9\n[convention]\nquotient_order = \"reversed\"\n")
        .unwrap();
    let cfg = path.to_str().unwrap();
    let plain = stdout(&["core", "--e", "3", "3", "--format", "plain"]);
    assert!(plain.contains("quotient [[],[],[1]]"), "{plain}");
    let out = stdout(&["--config", cfg, "core", "3"]);
    assert!(out.contains("quotient [[1],[],[]]"), "{out}");
    assert_eq!(run(&["--config", cfg, "decomp", "--n", "9"]).status.code(), Some(0));
    let v = json(&["--config", cfg, "--format", "json", "core", "2"]);
    assert_eq!(v["e"], 3);
    std::fs::write(&path, "[convention]\nribbon_statistic = \"leg\"\nf_side = \"below\"\n").unwrap();
    assert_eq!(run(&["--config", cfg, "core", "2"]).status.code(), Some(2));
    std::fs::write(&path, "[convention]\nribbon_statistic = \"leg\"\n").unwrap();
    let v = json(&["--config", cfg, "apply", "V", "--k", "1", "--to", "", "--at-v", "1"]);
    assert_eq!(v, serde_json::json!({ "2": 1, "1,1": -1 }));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["decomp", "--n", "7", "--e", "2", "--all", "--generic"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "steinberg", "--e", "3", "--nmax", "6"];
    assert_eq!(stdout(&args), stdout(&args));
}
