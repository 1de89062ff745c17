use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn srsq(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_srsq"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("SRSQ_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = srsq(args, stdin, &[]);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn rp2_audit_pipeline() {
    let rp2 = ok(&["generate", "rp2"], "");
    let report = json(&ok(&["check", "audit", "--fields", "Q,F2"], &rp2));
    let cm: Vec<bool> = report["cohen_macaulay"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["holds"].as_bool().unwrap())
        .collect();
    assert_eq!(cm, vec![true, false]);
    assert!(report["gorenstein"].as_array().unwrap().iter().all(|g| g["holds"] == false));
    assert_eq!(report["link_diameter"]["holds"], true);
    assert_eq!(report["square_equals_symbolic"], false);
    assert_eq!(report["condition3"]["holds"], false);
    assert!(report["implications"].as_array().unwrap().iter().all(|c| c["violated"] == false));
}

#[test]
fn stellar_square_is_cohen_macaulay() {
    let c = ok(&["generate", "cross-stellar", "--d", "3"], "");
    assert_eq!(json(&c)["n"], 7);
    let verdicts = json(&ok(&["check", "cm-square"], &c));
    for v in verdicts.as_array().unwrap() {
        assert_eq!(v["method"], "direct");
        assert_eq!(v["report"]["is_cm"], true);
    }
}

#[test]
fn pentagon_symbolic_square_equals_square() {
    let c = ok(&["generate", "pentagon"], "");
    let i = ok(&["ideal", "sr"], &c);
    assert_eq!(
        json(&i)["gens"],
        json("[[1,0,1,0,0],[1,0,0,1,0],[0,1,0,1,0],[0,1,0,0,1],[0,0,1,0,1]]")
    );
    let v = json(&ok(&["ideal", "equals-sym2"], &i));
    assert_eq!(v["equal"], true);
    assert_eq!(v["direct_comparison"], true);
}

#[test]
fn triangle_ideal_operations() {
    let i = r#"{"n":3,"gens":[[1,1,0],[0,1,1],[1,0,1]]}"#;
    let sym = json(&ok(&["ideal", "symbolic", "--l", "2"], i));
    assert_eq!(sym["gens"].as_array().unwrap().len(), 4);
    let v = json(&ok(&["ideal", "equals-sym2"], i));
    assert_eq!(v["equal"], false);
    assert_eq!(v["certificate"]["kind"], "failure");
    assert_eq!(v["certificate"]["triangle"]["vertices"], json("[1,2,3]"));
    let tris = json(&ok(&["ideal", "triangles"], i));
    assert_eq!(tris.as_array().unwrap().len(), 1);
    let c = json(&ok(&["ideal", "complex"], i));
    assert_eq!(c["facets"], json("[[1],[2],[3]]"));
}

#[test]
fn complex_transforms() {
    let c = ok(&["generate", "cycle:5"], "");
    let link = json(&ok(&["complex", "link", "--face", "1"], &c));
    assert_eq!(link["labels"], json("[2,5]"));
    let f = json(&ok(&["complex", "fvector"], &c));
    assert_eq!(f["counts"], json("[5,5]"));
    let square = ok(&["generate", "cross:2"], "");
    let sub = json(&ok(&["complex", "stellar", "--face", "1,2"], &square));
    assert_eq!(sub["n"], 5);
    assert_eq!(sub["facets"].as_array().unwrap().len(), 5);
}

#[test]
fn exit_codes() {
    let rp2 = ok(&["generate", "rp2"], "");
    let out = srsq(&["check", "cm-square"], &rp2, &[("SRSQ_BUDGET", "5")]);
    assert_eq!(out.status.code(), Some(3));
    let out = srsq(&["check", "cm-square", "--budget", "5"], &rp2, &[]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(srsq(&["check", "nonsense"], &rp2, &[]).status.code(), Some(2));
    assert_eq!(srsq(&["check", "cm"], "{not json", &[]).status.code(), Some(2));
    assert_eq!(srsq(&["generate", "dodecahedron"], "", &[]).status.code(), Some(2));
    assert_eq!(srsq(&["check", "cm", "--fields", "F4"], &rp2, &[]).status.code(), Some(2));
}

#[test]
fn explore_is_reproducible() {
    let args = ["explore", "--seed", "3", "--count", "8", "--n-max", "6"];
    let a = ok(&args, "");
    let b = ok(&args, "");
    assert_eq!(a, b);
    let summary = json(&a);
    assert_eq!(summary["audited"], 8);
    assert_eq!(summary["violations"], json("[]"));
}

#[test]
fn reproduce_paper_passes() {
    let a = ok(&["reproduce-paper", "--format", "json"], "");
    let report = json(&a);
    assert_eq!(report["pass"], true);
    assert_eq!(report["criteria"].as_array().unwrap().len(), 10);
    let md = ok(&["reproduce-paper", "--format", "md"], "");
    assert!(md.contains("| 10 |"));
    assert!(!md.contains("FAIL"));
}
