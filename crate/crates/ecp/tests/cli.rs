//! End-to-end runs of the `ecp` binary: real processes, real stdin, real
//! exit codes.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ecp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ecp_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ecp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn report(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not a JSON report ({e}): {:?} / stderr {:?}",
            String::from_utf8_lossy(&output.stdout),
            String::from_utf8_lossy(&output.stderr)
        )
    })
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ecp-e2e-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn cp_from_stdin() {
    let out = ecp_with_stdin(&["cp", "--stdin", "--format", "graph6"], "C~");
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["payload"]["cp"], Value::from(1));
    assert_eq!(r["command"][1], Value::from("cp"));
}

#[test]
fn stdin_without_format_is_rejected_before_reading() {
    let out = ecp_with_stdin(&["cp", "--stdin"], "C~");
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn paw_line_graph_cp_is_three() {
    let f = temp_file("paw.el", "n=4\n0 1\n0 2\n1 2\n2 3\n");
    let out = ecp(&[
        "cp", "--input", f.to_str().unwrap(), "--format", "edgelist", "--line-graph",
    ]);
    assert!(out.status.success());
    assert_eq!(report(&out)["payload"], serde_json::json!({ "cp": 3 }));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cp = 3"));
}

#[test]
fn omega_family_of_k4() {
    let f = temp_file("k4.g6", "C~");
    let out = ecp(&["omega", "--kind", "f", "--input", f.to_str().unwrap()]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["payload"]["omega"], Value::from(4));
}

#[test]
fn nonexistent_plane_order_exits_one_with_message() {
    let out = ecp(&["plane", "--order", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("no projective plane of order 6")
    );
}

#[test]
fn report_envelope_has_the_documented_fields() {
    let out = ecp(&["plane", "--order", "2"]);
    let r = report(&out);
    let obj = r.as_object().unwrap();
    for key in ["command", "input_digest", "payload", "elapsed_ms", "budget"] {
        assert!(obj.contains_key(key), "missing {key} in {obj:?}");
    }
    assert_eq!(r["input_digest"], Value::Null);
    assert_eq!(r["budget"]["node_limit"], Value::from(10_000_000));
}

#[test]
fn payload_is_deterministic_across_runs() {
    let f = temp_file("det.g6", "D~{");
    let args =
        ["omega", "--kind", "u", "--enumerate", "--input", f.to_str().unwrap()];
    let a = report(&ecp(&args))["payload"].to_string();
    let b = report(&ecp(&args))["payload"].to_string();
    assert_eq!(a, b);
}

#[test]
fn verify_suite_round_trip_through_the_binary() {
    let out = ecp(&["verify", "--suite", "bijection", "--max-n", "3"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["payload"]["suite"], Value::from("bijection"));
    assert!(r["payload"]["cases"].as_array().unwrap().len() >= 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("suite bijection:"));
}

#[test]
fn verify_kn_omega_reports_the_failing_uniqueness_cases() {
    let out = ecp(&["verify", "--suite", "kn-omega", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let cases = r["payload"]["cases"].as_array().unwrap();
    assert!(cases.iter().any(|c| c["pass"] == Value::from(false)));
    assert!(!r["payload"]["discrepancies"].as_array().unwrap().is_empty());
}

#[test]
fn convert_pipes_into_convert() {
    let partition =
        r#"{"host": {"n": 4, "pairs": [[0,1],[0,2],[1,2],[2,3]]}, "cliques": [[0,1,2],[2,3]]}"#;
    let to_rep = ecp_with_stdin(&["convert", "--from", "partition", "--to", "rep", "--stdin"], partition);
    assert!(to_rep.status.success(), "stderr: {}", String::from_utf8_lossy(&to_rep.stderr));
    let rep = report(&to_rep)["payload"]["rep"].to_string();
    let back = ecp_with_stdin(&["convert", "--from", "rep", "--to", "partition", "--stdin"], &rep);
    assert!(back.status.success());
    let p = report(&back)["payload"]["partition"].clone();
    assert_eq!(p["cliques"], serde_json::json!([[0, 1, 2], [2, 3]]));
}

#[test]
fn help_lists_every_subcommand() {
    let out = ecp(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in [
        "cp", "enum-partitions", "omega", "reps", "line-graph", "plane", "spaces",
        "convert", "verify",
    ] {
        assert!(text.contains(sub), "help misses {sub}");
    }
}
