use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn nullkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn problem(dir: &TempDir, name: &str, text: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gb_of_unit_ideal() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "unit.txt", "ring: x\nJ: x, 1 - x\n");
    let out = nullkit(&["gb", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn gb_lex_order() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "twisted.txt", "ring: x, y\nJ: x - y^2, y^3 - 1\n");
    let out = nullkit(&["gb", &f, "--order", "lex", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.to_string().contains("y^3 - 1"));
}

#[test]
fn syntax_error_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "bad.txt", "ring: x, y\nJ: x^2 + * y\n");
    let out = nullkit(&["gb", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 10: unexpected `*`"));
}

#[test]
fn certificate_found() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "q.txt", "ring: x\nJ: x^2, (1 - x)^2\n");
    let out = nullkit(&["cert", &f, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["minimal_degree"], 3);
}

#[test]
fn certificate_not_found_under_cap_exits_4() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "q.txt", "ring: x\nJ: x^2, (1 - x)^2\n");
    assert_eq!(nullkit(&["cert", &f, "--cap", "2"]).status.code(), Some(4));
}

#[test]
fn certificate_with_common_zero_exits_5() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "z.txt", "ring: x, y\nJ: x, y\n");
    assert_eq!(nullkit(&["cert", &f]).status.code(), Some(5));
}

#[test]
fn matrix_budget_exits_3() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "c.txt", "ring: x, y\nJ: x^3, x*y^2 - 1\n");
    assert_eq!(
        nullkit(&["cert", &f, "--budget-matrix", "5"]).status.code(),
        Some(3)
    );
}

#[test]
fn distinguished_needs_monomial_input() {
    let dir = TempDir::new().unwrap();
    let good = problem(&dir, "m.txt", "ring: x, y\nJ: x^2, y^3\n");
    let out = nullkit(&["distinguished", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains('6'));
    let bad = problem(&dir, "p.txt", "ring: x, y\nJ: x + y\n");
    assert_eq!(nullkit(&["distinguished", &bad]).status.code(), Some(6));
}

#[test]
fn multiplier_generators() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "m.txt", "ring: x, y\nJ: x^2, y^2\n");
    // u lies in I_l iff u_1 + u_2 + 2 > 2 l
    for (level, want) in [
        ("1", vec!["x", "y"]),
        ("2", vec!["x^2*y", "x*y^2", "x^3", "y^3"]),
    ] {
        let out = nullkit(&["multiplier", &f, "--level", level]);
        assert_eq!(out.status.code(), Some(0));
        let mut got: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
        let mut want: Vec<String> = want.into_iter().map(String::from).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn verify_suite_is_deterministic() {
    let a = nullkit(&[
        "verify",
        "briancon-skoda",
        "--format",
        "json",
        "--seed",
        "7",
    ]);
    let b = nullkit(&[
        "verify",
        "briancon-skoda",
        "--format",
        "json",
        "--seed",
        "7",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "nullkit-report/1");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_files_round_trip_through_gen() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("corpus");
    let out_dir = out_dir.to_string_lossy();
    let g = nullkit(&["gen", "--count", "5", "--seed", "3", "--out-dir", &out_dir]);
    assert_eq!(g.status.code(), Some(0));
    let pattern = format!("{out_dir}/*.txt");
    let v = nullkit(&[
        "verify",
        "skoda-random",
        "--files",
        &pattern,
        "--format",
        "json",
    ]);
    assert_eq!(v.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(report["instances"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_rejects_unparseable_files() {
    let dir = TempDir::new().unwrap();
    let f = problem(&dir, "bad.txt", "J: x\n");
    assert_eq!(
        nullkit(&["verify", "skoda-random", "--files", &f])
            .status
            .code(),
        Some(2)
    );
}
