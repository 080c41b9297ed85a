//! Process-level tests of the `minmod` binary: exit codes, the JSON
//! report schema, text and trace output, verification, generation, and
//! the bench table.  Every test spawns the real executable.

use std::path::Path;
use std::process::{Command, Output};

use minmod::cli_io::{emit_dimacs, emit_program, parse_dimacs};
use minmod::{gen_e, gen_f, GenMode, Instance};

/// Run the binary with the given arguments in `dir`.
fn minmod(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minmod"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Write the F(2,3) theory in DIMACS form and return its path.
fn write_f23(dir: &Path) -> std::path::PathBuf {
    let Instance::Cnf { theory, symbols } = gen_f(2, 3, GenMode::Cnf).unwrap() else {
        unreachable!()
    };
    let path = dir.join("f23.cnf");
    std::fs::write(&path, emit_dimacs(&theory, &symbols)).unwrap();
    path
}

#[test]
fn solve_minimal_reports_json_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_f23(dir.path());
    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
    assert_eq!(v["mode"], "minimal");
    assert_eq!(v["count"], 27);
    assert_eq!(v["models"].as_array().unwrap().len(), 27);
    assert_eq!(v["stats"]["leaves"], 27);
    assert!(v["wall_ms"].is_u64());
    // Every model of F(2,3) picks two of the three atoms per component.
    for m in v["models"].as_array().unwrap() {
        assert_eq!(m.as_array().unwrap().len(), 6);
    }
}

#[test]
fn solve_with_zero_models_exits_ten() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd.lp");
    std::fs::write(&path, "a :- not a.\n").unwrap();
    let out = minmod(dir.path(), &["solve", "--mode", "stable", "--input", path.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 10);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 0);
    assert_eq!(v["models"].as_array().unwrap().len(), 0);
}

#[test]
fn solve_answer_sets_of_a_disjunctive_fact() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pick.lp");
    std::fs::write(&path, "a | b.\n").unwrap();
    let out = minmod(dir.path(), &["solve", "--mode", "answer", "--input", path.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["models"], serde_json::json!([["a"], ["b"]]));
}

#[test]
fn mode_and_format_must_pair() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write_f23(dir.path());
    let lp = dir.path().join("p.lp");
    std::fs::write(&lp, "a.\n").unwrap();

    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", lp.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("expects --format dimacs"));

    let out = minmod(dir.path(), &["solve", "--mode", "stable", "--input", cnf.to_str().unwrap(), "--format", "dimacs"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("expects --format asp"));
}

#[test]
fn stable_mode_rejects_disjunctive_heads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dis.lp");
    std::fs::write(&path, "a | b.\n").unwrap();
    let out = minmod(dir.path(), &["solve", "--mode", "stable", "--input", path.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("use --mode answer"));
}

#[test]
fn unreadable_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", "no-such-file.cnf", "--format", "dimacs"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cnf");
    std::fs::write(&path, "p cnf 2\n1 2 0\n").unwrap();
    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn usage_errors_and_help() {
    let dir = tempfile::tempdir().unwrap();
    let out = minmod(dir.path(), &[]);
    assert_eq!(code(&out), 2);

    let out = minmod(dir.path(), &["solve", "--mode", "sideways"]);
    assert_eq!(code(&out), 2);

    let out = minmod(dir.path(), &["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("solve"));
    assert!(stdout(&out).contains("bench"));
}

#[test]
fn text_output_lists_models_then_count() {
    let dir = tempfile::tempdir().unwrap();
    let Instance::Cnf { theory, symbols } = gen_e(2, 3, GenMode::Cnf).unwrap() else {
        unreachable!()
    };
    let path = dir.path().join("e23.cnf");
    std::fs::write(&path, emit_dimacs(&theory, &symbols)).unwrap();

    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 2, "the pairing check applies before parsing");

    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs", "--output", "text"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a b\na c\nb c\nmodels: 3\n");

    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs", "--output", "text", "--stats"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("a b\na c\nb c\nmodels: 3\nleaves: "));
    for key in ["nodes: ", "max depth: ", "candidates: ", "input: "] {
        assert!(text.contains(key), "missing {key:?} in {text:?}");
    }
}

#[test]
fn trace_lines_go_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_f23(dir.path());
    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs", "--trace"]);
    assert_eq!(code(&out), 0);
    let err = stderr(&out);
    assert!(err.lines().count() >= 3, "expected one line per branch node");
    for line in err.lines() {
        assert!(line.starts_with("depth="), "line {line:?}");
        assert!(line.contains("case=") && line.contains("branch="));
    }
    // Tracing must not disturb the report on stdout.
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 27);
}

#[test]
fn first_flag_stops_after_one_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_f23(dir.path());
    let out = minmod(dir.path(), &["solve", "--mode", "minimal", "--input", path.to_str().unwrap(), "--format", "dimacs", "--first"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn verify_confirms_the_engine_against_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let Instance::Program { program, symbols } = gen_f(2, 2, GenMode::Normal).unwrap() else {
        unreachable!()
    };
    let path = dir.path().join("f22.lp");
    std::fs::write(&path, emit_program(&program, &symbols)).unwrap();

    let out = minmod(dir.path(), &["verify", "--mode", "stable", "--input", path.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "ok: 9 models verified\n");
}

#[test]
fn verify_respects_the_oracle_cap() {
    let dir = tempfile::tempdir().unwrap();
    let Instance::Program { program, symbols } = gen_f(2, 2, GenMode::Normal).unwrap() else {
        unreachable!()
    };
    let path = dir.path().join("f22.lp");
    std::fs::write(&path, emit_program(&program, &symbols)).unwrap();

    // Six occurring atoms against a cap of three.
    let out = minmod(dir.path(), &["verify", "--mode", "stable", "--input", path.to_str().unwrap(), "--format", "asp", "--max-atoms", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("above the oracle cap"));

    let out = minmod(dir.path(), &["verify", "--mode", "stable", "--input", path.to_str().unwrap(), "--format", "asp", "--max-atoms", "99"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("at most 26"));
}

#[test]
fn gen_rejects_impossible_families() {
    let dir = tempfile::tempdir().unwrap();
    let out = minmod(dir.path(), &["gen", "--family", "e", "--t", "4", "--atoms", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("at least t=4 atoms"));

    let out = minmod(dir.path(), &["gen", "--family", "f", "--t", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("exactly one of --k or --n"));
}

#[test]
fn gen_output_solves_round_trip() {
    let dir = tempfile::tempdir().unwrap();

    // A disjunctive program written to a file and solved back.
    let lp = dir.path().join("e35.lp");
    let out = minmod(dir.path(), &["gen", "--family", "e", "--t", "3", "--atoms", "5", "--mode", "disjunctive", "--out", lp.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = minmod(dir.path(), &["solve", "--mode", "answer", "--input", lp.to_str().unwrap(), "--format", "asp"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 10, "E(3,5) has C(5,2) answer sets");

    // CNF on stdout parses as DIMACS with the same atom names.
    let out = minmod(dir.path(), &["gen", "--family", "random", "--t", "3", "--n", "6", "--m", "12", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let parsed = parse_dimacs(&stdout(&out)).expect("generated DIMACS parses");
    assert_eq!(parsed.theory.n(), 6);
    assert_eq!(parsed.symbols.name(0), "a1");
    assert!(parsed.warnings.is_empty());
}

#[test]
fn bench_tabulates_the_f_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = minmod(dir.path(), &["bench", "--family", "f", "--t", "2", "--from", "1", "--to", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,param,n,models,leaves,bound,wall_ms"));
    for (k, line) in lines.enumerate() {
        let k = k as u32 + 1;
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], "F");
        assert_eq!(fields[1], k.to_string());
        assert_eq!(fields[2], (3 * k).to_string());
        let expect = 3u64.pow(k).to_string();
        assert_eq!(fields[3], expect, "models in {line:?}");
        assert_eq!(fields[4], expect, "leaves in {line:?}");
        assert_eq!(fields[5], format!("{expect}.0"), "bound in {line:?}");
    }

    let out = minmod(dir.path(), &["bench", "--family", "f", "--t", "2", "--from", "3", "--to", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--from must not exceed --to"));
}
