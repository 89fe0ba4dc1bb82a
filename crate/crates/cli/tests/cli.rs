use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn wogtoric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wogtoric")).args(args).output().expect("binary runs")
}

fn run_on(verb: &str, file: &str, extra: &[&str]) -> Output {
    let path = fixture(file);
    let mut args = vec![verb, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    wogtoric(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn two_triangles_are_strongly_robust() {
    let o = run_on("check-robust", "two-triangles.wog", &[]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("strongly robust   yes"), "{text}");
    assert!(text.contains("e1*e3*e5 - e2*e4*e6"), "{text}");
}

#[test]
fn trivial_kernel_has_no_moves() {
    let o = run_on("graver", "empty-kernel.wog", &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("graver basis: 0"));

    let o = run_on("graver", "empty-kernel.wog", &["--format", "machine"]);
    let json: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["size"], 0);
    assert_eq!(json["moves"], Value::Array(vec![]));
}

#[test]
fn machine_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for out in [&first, &second] {
        let o = run_on("analyze", "square.wog", &["--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap());
    let json: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(json["report_version"], 1);
    assert_eq!(json["strongly_robust"], true);
    assert_eq!(json["graver"][0]["binomial"], "e1*e3 - e2*e4");
    assert_eq!(json["graver"][0]["vector"], serde_json::json!([1, -1, 1, -1]));
    assert_eq!(json["hypothesis_results"]["main_theorem_hypothesis"], true);
}

#[test]
fn machine_format_on_stdout() {
    let o = run_on("check-robust", "twisted-cubic.matrix", &["--format", "machine"]);
    assert_eq!(code(&o), 0);
    let json: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["graver_size"], 5);
    assert_eq!(json["indispensable_size"], 3);
    assert_eq!(json["strongly_robust"], false);
}

#[test]
fn circuits_and_indispensable() {
    let o = run_on("circuits", "twisted-cubic.matrix", &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("circuits: 4"));

    let o = run_on("indispensable", "twisted-cubic.matrix", &[]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("indispensable binomials: 3"), "{text}");
    assert!(text.contains("e1*e4 - e2*e3"), "{text}");
}

#[test]
fn monomial_input() {
    let o = run_on("check-hypotheses", "pair.monomials", &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("monomial hypothesis  true"));

    let o = run_on("analyze", "pair.monomials", &["--format", "machine"]);
    assert_eq!(code(&o), 0);
    let json: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["monomial_hypothesis"]["holds"], true);
    assert_eq!(json["graver_size"], 0);
}

#[test]
fn graph_hypotheses() {
    let o = run_on("check-hypotheses", "two-triangles.wog", &[]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("cycles share a single vertex         true"), "{text}");
    assert!(text.contains("every edge meets a degree-2 vertex   true"), "{text}");

    let o = run_on("check-hypotheses", "twisted-cubic.matrix", &[]);
    assert_eq!(code(&o), 3);
}

#[test]
fn capped_run_is_inconclusive() {
    let o = run_on("check-robust", "twisted-cubic.matrix", &["--cap-fiber", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn input_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    let loop_edge = write("loop.wog", "wog 2\nweights 1 1\nedge 1 1\n");
    let zero_weight = write("zero.wog", "wog 2\nweights 0 1\nedge 1 2\n");
    let unknown = write("unknown.txt", "graph 3\n");
    let ragged = write("ragged.matrix", "matrix 2 2\n1 2\n3\n");
    for path in [&loop_edge, &zero_weight, &unknown, &ragged] {
        let o = wogtoric(&["graver", path.to_str().unwrap()]);
        assert_eq!(code(&o), 3, "{}", path.display());
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(code(&wogtoric(&["graver", "/nonexistent/input.wog"])), 3);
    assert_eq!(code(&wogtoric(&["graver"])), 3);
    assert_eq!(code(&wogtoric(&["frobnicate", "x"])), 3);
    assert_eq!(code(&run_on("graver", "square.wog", &["--cap-fiber", "0"])), 3);
    assert_eq!(code(&wogtoric(&["search-counterexample", "tree"])), 3);
    assert_eq!(code(&wogtoric(&["--help"])), 0);
}

#[test]
fn oracle_verify_random() {
    let o = wogtoric(&["oracle-verify", "random", "--seed", "7", "--count", "100"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("100/100 matrices agree"));
}

#[test]
fn oracle_verify_file() {
    let o = run_on("oracle-verify", "twisted-cubic.matrix", &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("agree with the oracles"));
}

#[test]
fn search_finds_counterexample_and_writes_instance() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("found.wog");
    let report = dir.path().join("found.json");
    let again = dir.path().join("again.json");
    for out in [&report, &again] {
        let o = wogtoric(&[
            "search-counterexample",
            "cycle-with-chord-path",
            "--seed",
            "7",
            "--instance",
            instance.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&report).unwrap(), std::fs::read(&again).unwrap());
    let json: Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(json["report"]["strongly_robust"], false);
    assert!(!json["report"]["dispensable_witnesses"].as_array().unwrap().is_empty());

    let o = wogtoric(&["check-robust", instance.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("strongly robust   no"));
    assert_eq!(std::fs::read_to_string(&instance).unwrap(), json["instance"].as_str().unwrap());
}

#[test]
fn search_not_found_exits_with_four() {
    let o = wogtoric(&["search-counterexample", "single-cycle", "--max-edges", "6"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("no counterexample"));

    let o = wogtoric(&["search-counterexample", "bouquet", "--seed", "3", "--trials", "2"]);
    assert_eq!(code(&o), 4);
}
