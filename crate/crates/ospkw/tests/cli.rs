use std::process::{Command, Output};

use serde_json::Value;

fn ospkw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ospkw")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_error(args: &[&str], code: &str) {
    let out = ospkw(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    let v = json_of(&out);
    assert_eq!(v["error"]["code"], code, "{args:?}");
    assert!(!v["error"]["message"].as_str().unwrap().is_empty());
}

#[test]
fn bottom_trace() {
    let out = ospkw(&["bottom", "--algebra", "B:3:3", "--partition", "6,6,5,2,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["before"], "(11/2,9/2,5/2 | 11/2,5/2,1/2)");
    assert_eq!(steps[0]["after"], "(11/2,9/2,-3/2 | 11/2,3/2,1/2)");
    assert_eq!(steps[1]["after"], "(9/2,-3/2,-5/2 | 5/2,3/2,1/2)");
    assert_eq!(v["bottom"], "(5)");
    assert_eq!(v["bottom_weight"], "(5,0,0 | 0,0,0)");
}

#[test]
fn character_of_bottom_module() {
    let out = ospkw(&["character", "--algebra", "B:3:3", "--partition", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["k"], 2);
    assert_eq!(v["j"], 8);
    assert_eq!(v["T"], serde_json::json!(["e2-d2", "e3-d3"]));
    let dim: u64 = v["dim"].as_str().unwrap().parse().unwrap();
    assert!(dim >= 1);
    let terms = v["character"]["terms"].as_array().unwrap();
    let total: u64 = terms.iter().map(|t| t["coef"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, dim);
    assert!(terms.iter().any(|t| t["exp"] == v["hw"] && t["coef"] == "1"));
}

#[test]
fn verify_small_algebra() {
    let out = ospkw(&["verify", "--algebra", "B:1:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["passed"], true);
    let checks = v["results"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "trivial KW = 1" && c["pass"] == true));
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn output_is_deterministic() {
    let base = ospkw(&["character", "--algebra", "D:2:2", "--partition", "2,1", "--threads", "1"]);
    assert_eq!(base.status.code(), Some(0));
    for extra in [&["--threads", "4"][..], &["--strategy", "naive"][..], &["--threads", "2", "--strategy", "naive"][..]] {
        let mut args = vec!["character", "--algebra", "D:2:2", "--partition", "2,1"];
        args.extend_from_slice(extra);
        assert_eq!(ospkw(&args).stdout, base.stdout, "{extra:?}");
    }
}

#[test]
fn minus_twin() {
    let plus = json_of(&ospkw(&["character", "--algebra", "D:2:1", "--partition", "2,2,2"]));
    let minus = json_of(&ospkw(&["character", "--algebra", "D:2:1", "--partition", "2,2,2", "--minus"]));
    assert_eq!(plus["dim"], minus["dim"]);
    assert_eq!(minus["hw"], "(2 | 2,-2)");
    assert_ne!(plus["character"], minus["character"]);
}

#[test]
fn block_family() {
    let out = ospkw(&["block-family", "--algebra", "D:3:2", "--partition", "3,3,3,2,2,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let got: Vec<(i64, String)> = v["family"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["x"].as_i64().unwrap(), e["partition"].as_str().unwrap().to_string()))
        .collect();
    let want = [(0, "(3,2,2,2,2,2,1)"), (1, "(3,3,3,2,2,2,1)"), (3, "(4,4,3,3,3,2,1)"), (4, "(5,4,3,3,3,3,1)")];
    assert_eq!(got, want.map(|(x, p)| (x, p.to_string())));
    assert_eq!(v["family"][0]["shifted"], "(2,0 | 7,5,0)");
}

#[test]
fn classify_text() {
    let out = ospkw(&["classify", "--algebra", "D:3:2", "--partition", "3,3,3,2,2,2,1", "--output", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("tame: true"));
    assert!(s.contains("T: [d2+e3]"));
}

#[test]
fn character_text() {
    let out = ospkw(&["character", "--algebra", "B:1:1", "--output", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.lines().any(|l| l == "character: 1"), "{s}");
    assert!(s.lines().any(|l| l == "j: 2"), "{s}");
}

#[test]
fn user_errors() {
    assert_error(&["classify", "--algebra", "B:1:1", "--partition", "2,2"], "HookViolation");
    assert_error(&["classify", "--algebra", "B:1:1", "--partition", "2,3"], "InvalidPartition");
    assert_error(&["classify", "--algebra", "X:1:1"], "InvalidAlgebra");
    assert_error(&["classify", "--algebra", "D:1:1"], "InvalidAlgebra");
    assert_error(&["classify", "--partition", "1"], "MissingArgument");
    assert_error(&["character", "--algebra", "D:3:3", "--partition", "1,1"], "NotTame");
    assert_error(&["character", "--algebra", "B:2:2", "--partition", "1", "--minus"], "FamilyMismatch");
    assert_error(&["block-family", "--algebra", "B:2:2", "--partition", "1"], "FamilyMismatch");
    assert_error(&["block-family", "--algebra", "D:2:2"], "WrongRegime");
    assert_error(&["verify", "--algebra", "B:3:3"], "RankTooLarge");
}

#[test]
fn text_errors_go_to_stderr() {
    let out = ospkw(&["character", "--algebra", "D:3:3", "--partition", "1,1", "--output", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error[NotTame]"));
}

#[test]
fn usage_errors() {
    assert_eq!(ospkw(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ospkw(&["classify", "--threads", "0"]).status.code(), Some(1));
    assert_eq!(ospkw(&["--help"]).status.code(), Some(0));
}
