use std::process::{Command, Output};

fn absorb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absorb")).args(args).output().expect("run absorb")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn classify_z8() {
    let out = absorb(&["classify", "--ring", "Z8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    let c2a: Vec<bool> = v["submodules"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["classical_2_absorbing"]["holds"].as_bool().unwrap())
        .collect();
    assert_eq!(c2a, [false, true, true]);
    assert_eq!(v["minimal_c2a"], serde_json::json!(["(4)"]));
    let w = &v["submodules"][0]["classical_2_absorbing"]["witness"];
    assert_eq!(w["scalars"], serde_json::json!([[2], [2], [2]]));
}

#[test]
fn classify_text_and_module_spec() {
    let out = absorb(&["classify", "--ring", "Z4", "--module", "2,4", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Z2+Z4 over Z4"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains("c2a=")).count(), 7);
}

#[test]
fn export_dot_to_file() {
    let path = std::env::temp_dir().join(format!("absorb_cli_{}.dot", std::process::id()));
    let out = absorb(&["export", "--ring", "Z12", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 6);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "--ring", "Q3"][..],
        &["classify", "--ring", "Z6", "--module", "4"],
        &["verify", "--suite", "T-NOPE"],
        &["search", "--left", "c2a", "--right", "bogus"],
        &["classify"],
        &["frobnicate"],
    ] {
        let out = absorb(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn search_exit_codes() {
    let out = absorb(&["search", "--left", "c2a", "--right", "classical-prime", "--max-module", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "witness");
    assert_eq!(v["instance"]["module"], "Z4");
    assert_eq!(v["submodule"], "(0)");

    let out = absorb(&["search", "--left", "prime", "--right", "c2a", "--max-module", "8"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["outcome"], "exhausted");
}

#[test]
fn verify_small_bounds() {
    let args = ["verify", "--suite", "T-MAIN,T-SEP", "--max-module", "8", "--max-modulus", "8"];
    let a = absorb(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let v = stdout_json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["bounds"]["max_module"], 8);
    assert_eq!(v["suites"][0]["suite"], "T-MAIN");
    assert!(String::from_utf8_lossy(&a.stderr).contains("PASS"));
    let b = absorb(&args);
    assert_eq!(a.stdout, b.stdout);
}
