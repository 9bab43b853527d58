use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn json_report_on_stdout() {
    let out = verify(&["dn", "--n", "4", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["claims"].as_array().unwrap().iter().any(|c| c["id"] == "dn.minorb.dim"));
    assert!(v["timings"]["D4"].is_number());
}

#[test]
fn text_report_to_file() {
    let path = std::env::temp_dir().join(format!("lieverify-cli-{}.txt", std::process::id()));
    let out = verify(&["e7", "--format", "text", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS e7.orbvar.dim")));
    assert!(text.contains("fail 0"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(verify(&["dn", "--n", "3"]).status.code(), Some(2));
    assert_eq!(verify(&["dn", "--n", "6..5"]).status.code(), Some(2));
    assert_eq!(verify(&["g2"]).status.code(), Some(2));
    assert_eq!(verify(&[]).status.code(), Some(2));
    assert_eq!(verify(&["e6", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    assert_eq!(verify(&["--help"]).status.code(), Some(0));
}

#[test]
fn unwritable_output_exits_2() {
    let out = verify(&["e7", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeds_are_reproducible() {
    let claims = |seed: &str| {
        let out = verify(&["dn", "--n", "5", "--samples", "20", "--seed", seed]);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["claims"].clone()
    };
    assert_eq!(claims("3"), claims("3"));
}
