//! Generated artifacts against hand-written files, and byte-exact round trips.

use std::fs;
use std::path::PathBuf;

use symqres::{
    check_proof, family_symmetries, gen_family, parse_qdimacs, parse_symmetries, parse_trace,
    prove_kbkf_breaker, prove_kbkf_sym, prove_quparity_breaker, prove_quparity_sym,
    serialize_qdimacs, serialize_symmetries, serialize_trace, Family,
};

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn golden_files() -> Vec<String> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden"].iter().collect();
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}

#[test]
fn formulas_match_golden() {
    assert_eq!(serialize_qdimacs(&gen_family(Family::Kbkf, 2).unwrap()), golden("kbkf_2.qdimacs"));
    assert_eq!(
        serialize_qdimacs(&gen_family(Family::Quparity, 2).unwrap()),
        golden("quparity_2.qdimacs")
    );
    assert_eq!(
        serialize_qdimacs(&gen_family(Family::KbkfHard, 1).unwrap()),
        golden("kbkf_hard_1.qdimacs")
    );
}

#[test]
fn kbkf_1_file_has_expected_shape() {
    let q = parse_qdimacs(&serialize_qdimacs(&gen_family(Family::Kbkf, 1).unwrap())).unwrap();
    assert_eq!(q.num_vars(), 4);
    assert_eq!(q.matrix().len(), 5);
}

#[test]
fn symmetries_match_golden() {
    assert_eq!(
        serialize_symmetries(&family_symmetries(Family::Kbkf, 2).unwrap()),
        golden("kbkf_2.sym")
    );
    assert_eq!(
        serialize_symmetries(&family_symmetries(Family::Quparity, 2).unwrap()),
        golden("quparity_2.sym")
    );
}

#[test]
fn traces_match_golden() {
    assert_eq!(serialize_trace(&prove_kbkf_breaker(1).unwrap().proof), golden("kbkf_breaker_1.trace"));
    assert_eq!(
        serialize_trace(&prove_quparity_breaker(2).unwrap().proof),
        golden("quparity_breaker_2.trace")
    );
    assert_eq!(serialize_trace(&prove_kbkf_sym(1).unwrap().proof), golden("kbkf_sym_1.trace"));
    assert_eq!(serialize_trace(&prove_quparity_sym(2).unwrap().proof), golden("quparity_sym_2.trace"));
}

#[test]
fn golden_traces_check() {
    let sp = prove_kbkf_breaker(1).unwrap();
    let pf = parse_trace(&golden("kbkf_breaker_1.trace")).unwrap();
    assert!(check_proof(&sp.formula, &[], &pf, false).accepted());
    let sp = prove_kbkf_sym(1).unwrap();
    let pf = parse_trace(&golden("kbkf_sym_1.trace")).unwrap();
    assert!(check_proof(&sp.formula, &sp.symmetries, &pf, true).accepted());
    let sp = prove_quparity_sym(2).unwrap();
    let syms = parse_symmetries(&golden("quparity_2.sym")).unwrap();
    let pf = parse_trace(&golden("quparity_sym_2.trace")).unwrap();
    assert!(check_proof(&sp.formula, &syms, &pf, true).accepted());
}

#[test]
fn every_golden_file_round_trips() {
    let names = golden_files();
    assert!(names.len() >= 9);
    for name in names {
        let text = golden(&name);
        let again = match name.rsplit('.').next().unwrap() {
            "qdimacs" => serialize_qdimacs(&parse_qdimacs(&text).unwrap()),
            "sym" => serialize_symmetries(&parse_symmetries(&text).unwrap()),
            "trace" => serialize_trace(&parse_trace(&text).unwrap()),
            other => panic!("unexpected golden file type {other}"),
        };
        assert_eq!(again, text, "{name}");
    }
}
