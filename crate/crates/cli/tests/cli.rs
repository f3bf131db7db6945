use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn symqres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symqres"))
        .args(args)
        .output()
        .expect("spawn symqres")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn prove_then_check_breaker() {
    let dir = TempDir::new().unwrap();
    let (f, t) = (path(&dir, "f.qdimacs"), path(&dir, "p.trace"));
    let o = symqres(&[
        "prove", "--family", "kbkf", "--n", "3", "--strategy", "breaker", "--out", &t,
        "--formula-out", &f,
    ]);
    assert!(o.status.success(), "{o:?}");
    let o = symqres(&["check", &f, &t]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ACCEPT\nrule steps 12\n");
}

#[test]
fn prove_then_check_symrule_and_desym() {
    let dir = TempDir::new().unwrap();
    let (f, t, s) = (path(&dir, "f.qdimacs"), path(&dir, "p.trace"), path(&dir, "s.sym"));
    let o = symqres(&[
        "prove", "--family", "quparity", "--n", "4", "--strategy", "symrule", "--out", &t,
        "--formula-out", &f, "--syms-out", &s,
    ]);
    assert!(o.status.success(), "{o:?}");
    let o = symqres(&["check", &f, &t, "--syms", &s, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "ACCEPT");
    assert_eq!(v["counts"]["rule_steps"], 14);

    let plain = path(&dir, "plain.trace");
    let o = symqres(&["desym", &f, &t, "--syms", &s, "--out", &plain]);
    assert!(o.status.success(), "{o:?}");
    let o = symqres(&["check", &f, &plain, "--no-sym"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = symqres(&["sym", "verify", &f, &s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with(" SYMMETRY")));
}

#[test]
fn eval_kbkf_is_false() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "k.qdimacs");
    assert!(symqres(&["gen", "--family", "kbkf", "--n", "3", "--out", &f]).status.success());
    let o = symqres(&["eval", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "FALSE\n");

    let o = symqres(&["eval", &f, "--max-vars", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn no_sym_rejects_at_first_symmetry_step() {
    let dir = TempDir::new().unwrap();
    let (f, t, s) = (path(&dir, "f.qdimacs"), path(&dir, "p.trace"), path(&dir, "s.sym"));
    let o = symqres(&[
        "prove", "--family", "kbkf", "--n", "2", "--strategy", "symrule", "--out", &t,
        "--formula-out", &f, "--syms-out", &s,
    ]);
    assert!(o.status.success());
    let trace = fs::read_to_string(&t).unwrap();
    let first_y = trace
        .lines()
        .find(|l| l.split_whitespace().nth(1) == Some("y"))
        .and_then(|l| l.split_whitespace().next())
        .unwrap()
        .to_string();
    let o = symqres(&["check", &f, &t, "--syms", &s, "--no-sym"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("REJECT\n"), "{out}");
    assert!(out.contains(&format!("failing step {first_y}:")), "{out}");
}

#[test]
fn gen_is_deterministic_and_writes_sidecar() {
    let dir = TempDir::new().unwrap();
    let (a, b, s) = (path(&dir, "a"), path(&dir, "b"), path(&dir, "s"));
    for out in [&a, &b] {
        let o = symqres(&[
            "gen", "--family", "quparity", "--n", "3", "--with-breaker", "--out", out, "--syms", &s,
        ]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(Path::new(&s).exists());
    let o = symqres(&["eval", &a]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stats_counts_kinds() {
    let dir = TempDir::new().unwrap();
    let t = path(&dir, "p.trace");
    let o = symqres(&["prove", "--family", "kbkf", "--n", "2", "--strategy", "symrule", "--out", &t]);
    assert!(o.status.success());
    let o = symqres(&["stats", &t, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rule_steps"], 10);
    assert_eq!(v["symmetries"], 2);
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(symqres(&["gen", "--family", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(symqres(&["frobnicate"]).status.code(), Some(2));
    let o = symqres(&["eval", "/nonexistent/file.qdimacs"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
    let o = symqres(&["prove", "--family", "kbkf-hard", "--n", "2", "--strategy", "breaker"]);
    assert_eq!(o.status.code(), Some(2));
}
