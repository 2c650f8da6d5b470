//! Binary-level behavior: exit codes, stdin handling, JSON round-trips,
//! cap plumbing, and corpus semantics.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use goedel_bs::{check_certificate, parse, Interpretation, Mode};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_goedel-bs"))
}

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("goedel_bs_{}_{name}", std::process::id()));
    fs::write(&path, contents).unwrap();
    path
}

const LEM: &str = "forall x. P(x) | ~P(x)";

#[test]
fn prove_exit_codes_follow_the_verdict() {
    let (code, out, _) = run(&["prove", "--logic", "ginf"], LEM);
    assert_eq!(code, 1);
    assert!(out.contains("verdict: not_valid"));

    let (code, out, _) = run(&["prove", "--logic", "gm:2"], LEM);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: valid"));
}

#[test]
fn sat_exit_codes_follow_the_verdict() {
    let (code, _, _) = run(&["sat"], "exists x. P(x)");
    assert_eq!(code, 0);
    let (code, _, _) = run(&["sat"], "exists x. forall y. P(x) & ~P(y)");
    assert_eq!(code, 1);
}

#[test]
fn shape_errors_exit_two_with_stage_tag() {
    let (code, _, err) = run(&["prove"], "exists y. forall x. P(y) -> P(x)");
    assert_eq!(code, 2);
    assert!(err.contains("error[shape]"), "stderr: {err}");

    let (code, _, err) = run(&["prove"], "P(");
    assert_eq!(code, 2);
    assert!(err.contains("error[parse]"), "stderr: {err}");
}

#[test]
fn json_certificate_round_trips_through_checker_and_glue() {
    let (code, out, _) = run(&["prove", "--format", "json"], LEM);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "not_valid");
    assert_eq!(v["mode"], "validity");
    assert!(v["meta"]["caps"]["max_prop_atoms"].is_u64());
    assert!(v["meta"]["grid"].is_array());

    let cert_json = v["certificate"].to_string();
    let cert: Interpretation = serde_json::from_str(&cert_json).unwrap();
    let sentence = parse(LEM).unwrap().formula;
    assert_eq!(check_certificate(&cert, &sentence, Mode::Validity), Ok(true));

    let (code, out, _) = run(&["glue", "--omega", "1/2", "--formula", LEM], &cert_json);
    assert_eq!(code, 0, "glue rejected a certificate printed by prove: {out}");
    assert!(out.contains("ok"));
}

#[test]
fn glue_rejects_omega_of_one() {
    let cert = r#"{"domain":["d0"],"constants":{},"atoms":[{"pred":"P","args":["d0"],"value":"3/10"}]}"#;
    let (code, _, err) = run(&["glue", "--omega", "1/1"], cert);
    assert_eq!(code, 2);
    assert!(err.contains("error[decide]"), "stderr: {err}");
}

#[test]
fn glue_leaves_values_at_or_below_omega_unchanged() {
    let cert = r#"{"domain":["d0"],"constants":{"c":"d0"},"atoms":[{"pred":"P","args":["d0"],"value":"3/10"}]}"#;
    let (code, out, _) = run(&["glue", "--omega", "1/2", "--formula", "P(c)"], cert);
    assert_eq!(code, 0);
    assert!(out.contains("P(c): 3/10 -> 3/10 ok"), "out: {out}");
}

#[test]
fn cap_env_var_is_honored_and_flag_wins() {
    let mut child = bin()
        .args(["prove"])
        .env("GOEDEL_BS_CAP", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(LEM.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code().unwrap(), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("error[cap]"));

    let mut child = bin()
        .args(["prove", "--cap", "1000000"])
        .env("GOEDEL_BS_CAP", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(LEM.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code().unwrap(), 1);
}

#[test]
fn dump_flags_extend_text_output() {
    let (code, out, _) = run(&["prove", "--dump-skolem", "--dump-ground"], LEM);
    assert_eq!(code, 1);
    assert!(out.contains("skolemization:"));
    assert!(out.contains("=> constant _skV0"));
    assert!(out.contains("ground expansion:"));
    assert!(out.contains("combined:"));
}

#[test]
fn grid_size_override_is_reported() {
    let (code, out, _) = run(&["prove", "--grid-size", "5"], LEM);
    assert_eq!(code, 1);
    assert!(out.contains("grid override: 5 points"), "out: {out}");
}

#[test]
fn file_argument_matches_stdin() {
    let path = temp_file("input.gs", LEM);
    let by_file = bin().args(["prove", path.to_str().unwrap()]).output().unwrap();
    let (stdin_code, stdin_out, _) = run(&["prove"], LEM);
    assert_eq!(by_file.status.code().unwrap(), stdin_code);
    assert_eq!(String::from_utf8(by_file.stdout).unwrap(), stdin_out);
    fs::remove_file(path).ok();
}

#[test]
fn corpus_empty_input_exits_zero() {
    let (code, out, _) = run(&["corpus"], "");
    assert_eq!(code, 0);
    assert!(out.contains("summary: 0 entries"));
}

#[test]
fn corpus_wrong_expectation_exits_one_with_diff_line() {
    let corpus = "lem_wrong\tvalidity\tginf\tvalid\tforall x. P(x) | ~P(x)\n";
    let (code, out, _) = run(&["corpus"], corpus);
    assert_eq!(code, 1);
    assert!(
        out.contains("mismatch lem_wrong: expected valid, got not_valid"),
        "out: {out}"
    );
}

#[test]
fn corpus_expected_error_stage_counts_as_met() {
    let corpus = "rejected\tvalidity\tginf\terror:shape\texists x. forall y. P(x)\n";
    let (code, _, _) = run(&["corpus"], corpus);
    assert_eq!(code, 0);
}

#[test]
fn corpus_unexpected_entry_error_exits_two() {
    let corpus = "boom\tvalidity\tginf\tvalid\tP(\n";
    let (code, out, _) = run(&["corpus"], corpus);
    assert_eq!(code, 2);
    assert!(out.contains("error boom:"), "out: {out}");
}

#[test]
fn corpus_malformed_line_is_a_file_error() {
    let (code, _, err) = run(&["corpus"], "only\tthree\tfields\n");
    assert_eq!(code, 2);
    assert!(err.contains("error[parse]"), "stderr: {err}");

    let dup = "a\tvalidity\tginf\t-\tA\na\tvalidity\tginf\t-\tA\n";
    let (code, _, err) = run(&["corpus"], dup);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate corpus name"), "stderr: {err}");
}

#[test]
fn laws_runs_are_deterministic() {
    let a = bin().args(["laws"]).output().unwrap();
    let b = bin().args(["laws"]).output().unwrap();
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code().unwrap(), 0);
}
