use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfectsolve")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn alpha_of_eight_cycle() {
    let o = run(&["alpha", fixture("c8.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("alpha 4"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("set ")), "{text}");
}

#[test]
fn alpha_json_is_zero_based() {
    let o = run(&["alpha", fixture("c8.tri").to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["alpha"], 4);
    let set: Vec<u64> = v["stable_set"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(set.len(), 4);
    assert!(set.iter().all(|&x| x < 8));
}

#[test]
fn switchable_pairs_and_weights_are_read() {
    let o = run(&["alpha", fixture("switchable.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha 7"));
}

#[test]
fn basic_recognizes_bipartite() {
    let o = run(&["basic", fixture("c8.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bipartite"));
}

#[test]
fn petersen_yields_certificate() {
    let o = run(&["color", fixture("petersen.dimacs").to_str().unwrap(), "--emit-certificate"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "not-in-class");
}

#[test]
fn generated_check_has_no_mismatches() {
    let o = run(&["check", "--count", "20", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 mismatches"));
}

#[test]
fn gen_output_parses_back() {
    let o = run(&["gen", "--n", "14", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let mut f = tempfile::Builder::new().suffix(".tri").tempfile().unwrap();
    f.write_all(&o.stdout).unwrap();
    let o = run(&["oracle", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_one() {
    let o = run(&["alpha", fixture("bad_input.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let mut f = tempfile::Builder::new().suffix(".tri").tempfile().unwrap();
    f.write_all(b"p tri two\n").unwrap();
    assert_eq!(run(&["alpha", f.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn missing_file_exits_one() {
    assert_eq!(run(&["alpha", "/nonexistent/x.tri"]).status.code(), Some(1));
}
