use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use dfa_spectra::{samples, serialize_dfa, Dfa};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dfa-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_dfa(name: &str, d: &Dfa) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, serialize_dfa(d)).unwrap();
    path
}

fn write_text(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn count_fibonacci() {
    let o = run(&["count", "--regex", "(a+ba)*", "-n", "10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "89\n");
}

#[test]
fn closed_form_requires_rank_one() {
    let o = run(&["count", "--regex", "(a+ba)*", "--closed-form", "-n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o), "error: NotRankOne: language rank is 2\n");
    assert!(o.stdout.is_empty());

    let o = run(&["count", "--regex", "(a+b)*", "--closed-form", "-n", "70"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), (1u128 << 70).to_string());
}

#[test]
fn equitable_partition_of_three_state_example() {
    let path = write_dfa("b1.dfa", &samples::even_cd_three_state());
    let p = path.to_str().unwrap();
    let o = run(&["equitable", p, "--partition", "0,1|2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "true\n");
    let o = run(&["equitable", p, "--partition", "0 | 1, 2"]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn quotient_reports_non_congruence() {
    let path = write_dfa("b1-quotient.dfa", &samples::even_cd_three_state());
    let p = path.to_str().unwrap();
    let o = run(&["quotient", p, "--partition", "0,2|1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: NotACongruence: "), "{}", stderr(&o));

    let o = run(&["quotient", p, "--partition", "0,1|2"]);
    assert!(o.status.success());
    let q = dfa_spectra::parse_dfa(&stdout(&o)).unwrap();
    assert!(dfa_spectra::equivalent(&q, &samples::even_cd_three_state()));
}

#[test]
fn json_wrapping() {
    let o = run(&["--format", "json", "count", "--regex", "(a+ba)*", "-n", "10"]);
    assert!(o.status.success());
    assert_eq!(json(&o), serde_json::json!({"ok": true, "result": 89}));

    let o = run(&["count", "--format", "json", "--regex", "(a+ba)*", "--closed-form", "-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["ok"], false);
    assert_eq!(v["error"]["code"], "NotRankOne");
    assert_eq!(v["error"]["detail"], "language rank is 2");

    let path = write_dfa("b1-json.dfa", &samples::even_cd_three_state());
    let o = run(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["ok"], true);
    let r = &v["result"];
    assert_eq!(r["states"], 3);
    assert_eq!(r["minimal"], false);
    assert_eq!(r["rank"], 2);
    assert_eq!(r["charPoly"], serde_json::json!([0, 4, -5, 1]));
    assert_eq!(r["languageRank"], 1);
    assert_eq!(r["rankOne"]["lambda"], 4);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let bad = write_text("bad.dfa", "alphabet: a\nstates: 2\ninitial: 0\nfinals: 1\ntrans: 0 a 1\ntrans: 0 a 0\n");
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ParseError"), "{}", stderr(&o));

    let o = run(&["rank", "--regex", "((a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("RegexSyntaxError"));

    let o = run(&["equitable", "--regex", "a*", "--partition", "0|x"]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(run(&["rank"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--regex", "a*"]).status.code(), Some(2));
    let missing = run(&["rank", "/nonexistent/file.dfa"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let o = run(&["--format", "json", "rank", "--regex", "a+"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["code"], "UsageError");
}

#[test]
fn ranking_commands() {
    let o = run(&["rank-word", "--regex", "(a+ba)*", "aba"]);
    assert_eq!(stdout(&o), "5\n");
    let o = run(&["unrank-word", "--regex", "(a+ba)*", "6"]);
    assert_eq!(stdout(&o), "baa\n");
    let o = run(&["rank-word", "--regex", "(a+ba)*", "bb"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: WordNotInLanguage: "));
    let o = run(&["unrank-word", "--regex", "a+b", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: IndexOutOfLanguage: "));

    let path = write_dfa("fib.dfa", &samples::fibonacci());
    let o = run(&["rank-word", path.to_str().unwrap(), "aba"]);
    assert_eq!(stdout(&o), "5\n");
    let o = run(&["rank", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn compress_round_trip() {
    let o = run(&["compress", "--regex", "(a+ba)*", "aba"]);
    assert_eq!(stdout(&o), "05\n");
    let o = run(&["compress", "--regex", "(a+ba)*", "--raw", "aba"]);
    assert_eq!(o.stdout, vec![0x05]);

    let path = write_dfa("fib-compress.dfa", &samples::fibonacci());
    let p = path.to_str().unwrap();
    for word in ["", "a", "babaaaba", "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"] {
        let hex = stdout(&run(&["compress", p, word]));
        let o = run_with_stdin(&["decompress", p], hex.as_bytes());
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(stdout(&o), format!("{word}\n"));

        let raw = run(&["compress", p, "--raw", word]).stdout;
        let o = run_with_stdin(&["decompress", p, "--raw"], &raw);
        assert_eq!(stdout(&o), format!("{word}\n"));
    }
    let o = run_with_stdin(&["decompress", p], b"zz");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minimize_then_analyze_is_minimal() {
    let path = write_dfa("c1.dfa", &samples::even_cd_four_state());
    let o = run(&["minimize", path.to_str().unwrap()]);
    assert!(o.status.success());
    let minimal = write_text("c1-min.dfa", &stdout(&o));
    let v = json(&run(&["analyze", "--format", "json", minimal.to_str().unwrap()]));
    assert_eq!(v["result"]["minimal"], true);
    assert_eq!(v["result"]["states"], 2);

    // stdin input
    let o = run_with_stdin(&["minimize", "-"], serialize_dfa(&samples::even_cd_four_state()).as_bytes());
    assert_eq!(stdout(&o), std::fs::read_to_string(&minimal).unwrap());
}

#[test]
fn expand_then_analyze_is_expanded_normal() {
    let path = write_dfa("d1.dfa", &samples::rank_one_two_state());
    let o = run(&["expand", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let expanded = write_text("d1-expanded.dfa", &stdout(&o));
    let v = json(&run(&["analyze", "--format", "json", expanded.to_str().unwrap()]));
    assert_eq!(v["result"]["expandedNormal"], true);
    assert_eq!(v["result"]["states"], 3);

    let o = run(&["expand", "--regex", "(a+ba)*"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o), "error: NotRankOne: language rank is 2\n");
}

#[test]
fn output_is_deterministic() {
    let path = write_dfa("b1-det.dfa", &samples::even_cd_three_state());
    let p = path.to_str().unwrap();
    for args in [
        vec!["analyze", p],
        vec!["--format", "json", "analyze", p],
        vec!["minimize", "--regex", "(a+b)*c(a+b)*"],
        vec!["expand", p],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
    }
}
