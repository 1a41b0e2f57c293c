use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uce-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const BROKEN: &str = r#"{"ring": {"kind": "rationals"}, "dim": 1, "parity": [0],
  "left": [[0, 0, 0, 2]], "right": [[0, 0, 0, 1]], "name": "broken"}"#;

#[test]
fn verify_two_two_rationals() {
    let o = run(&["verify", "--m", "2", "--n", "2", "--builtin", "rationals"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn json_is_deterministic() {
    let args = ["--format", "json", "verify", "--m", "2", "--n", "1", "--builtin", "rationals"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn hl2_three_two() {
    let o = run(&["--format", "json", "hl2", "--m", "3", "--n", "2", "--builtin", "rationals"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chain_path"], v["tensor_path"]);
    assert_eq!(v["sl_dim"], 24);
}

#[test]
fn hl2_single_method() {
    let o = run(&["hl2", "--m", "3", "--n", "0", "--builtin", "f3", "--method", "tensor"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("HL2(sl(3,0,"));
}

#[test]
fn hhs1_integers() {
    let o = run(&["hhs1", "--builtin", "integers"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("HHS1("));
}

#[test]
fn catalog_lists_builtins() {
    let o = run(&["--format", "json", "catalog"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for want in ["rationals", "integers", "f2", "f3", "bar_duplex_q"] {
        assert!(names.contains(&want), "{want}");
    }
}

#[test]
fn check_names_the_broken_axiom() {
    let f = file(BROKEN);
    let o = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation:"));

    let o = run(&["--format", "json", "check", f.path().to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["violations"][0]["axiom"].as_str().is_some_and(|s| !s.is_empty()));
}

#[test]
fn check_builtin_ok() {
    assert_eq!(code(&run(&["check", "--builtin", "bar_duplex_q"])), 0);
}

#[test]
fn invalid_dialgebra_exits_one() {
    let f = file(BROKEN);
    let o = run(&["hl2", "--m", "2", "--n", "1", "--dialgebra", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn parse_errors_exit_two() {
    let f = file("{not json");
    assert_eq!(code(&run(&["check", f.path().to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["hhs1", "--builtin", "no_such_thing"])), 2);
    assert_eq!(code(&run(&["hl2", "--builtin", "rationals"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn guard_exceeded_exits_three() {
    let o = run(&["--guard", "100", "hl2", "--m", "2", "--n", "2", "--builtin", "rationals"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn unclassified_case_exits_four() {
    let o = run(&["verify", "--m", "1", "--n", "2", "--builtin", "rationals"]);
    assert_eq!(code(&o), 4);
}
