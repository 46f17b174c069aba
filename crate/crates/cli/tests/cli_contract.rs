//! End-to-end checks of the command-line contract: documented invocations,
//! exit codes, output determinism, and batch-file semantics.

use std::io::Write;
use std::process::{Command, Output};

fn birat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn classify_documented_invocations() {
    let out = birat(&["classify", "t^3", "t^2 + t"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("BIRATIONAL, NOT ISOMORPHISM"));

    let out = birat(&["classify", "t", "t^2", "t^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ISOMORPHISM"));

    let out = birat(&["classify", "5", "7"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("degenerate image (point)"));
}

#[test]
fn gb_documented_invocations() {
    let out = birat(&["gb", "t^10 + t^4", "t^8 + 2*t^2", "t^6 - t^4 + 1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("t + s"));

    let out = birat(&["gb", "t"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1"));
}

#[test]
fn divdiff_documented_invocations() {
    let out = birat(&["divdiff", "t^3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("t^2 + t*s + s^2"));
    assert!(text.contains("3*s^2"));

    let out = birat(&["divdiff", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("g1 = 0"));

    let out = birat(&["divdiff", "t^4 - 2*t^2 + 2"]);
    assert!(stdout(&out).contains("t^3 + t^2*s + t*s^2 + s^3 - 2*t - 2*s"));
}

#[test]
fn parse_errors_exit_2() {
    let out = birat(&["classify", "t^"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 2"));

    let out = birat(&["classify", "--field", "F91", "t"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"));

    let out = birat(&["classify", "--field", "R", "t"]);
    assert_eq!(out.status.code(), Some(2));

    let out = birat(&["classify"]);
    assert_eq!(out.status.code(), Some(2));

    let out = birat(&["--definitely-not-a-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = birat(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn prime_field_and_lex_flags() {
    let out = birat(&["divdiff", "--field", "F5", "t^2 - 2"]);
    assert_eq!(out.status.code(), Some(0));
    // -2 reduces to 3 mod 5 and the divided difference of t^2 + 3 is t + s
    assert!(stdout(&out).contains("f1 = t^2 + 3"));
    assert!(stdout(&out).contains("g1 = t + s"));

    let out = birat(&["classify", "--order", "lex", "t^3", "t^2 + t"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("BIRATIONAL, NOT ISOMORPHISM"));
}

#[test]
fn text_output_is_deterministic() {
    let args = [
        "classify",
        "--show-basis",
        "2*t^8 + t^4 + 3*t + 1",
        "t^4 - 2*t^2 + 2",
    ];
    let first = birat(&args);
    let second = birat(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());
}

#[test]
fn show_basis_prints_both_renderings() {
    let out = birat(&["classify", "--show-basis", "t^3", "t^2 + t"]);
    let text = stdout(&out);
    assert!(text.contains("g1 = t^2 + t*s + s^2"));
    assert!(text.contains("g2 = t + s + 1"));
    assert!(text.contains("reduced basis (degrevlex, monic):"));
    assert!(text.contains("reduced basis (integer primitive):"));
    assert!(text.contains("s^2 + s + 1"));
}

#[test]
fn batch_file_continues_past_failures() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("birat-batch-{}.txt", std::process::id()));
    let mut file = std::fs::File::create(&path).unwrap();
    writeln!(file, "# comment only").unwrap();
    writeln!(file, "t ; t^2   # isomorphism").unwrap();
    writeln!(file, "t^        # parse error").unwrap();
    writeln!(file, "t^2").unwrap();
    drop(file);

    let out = birat(&["classify", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();

    // max per-instance code: parse error (2) outranks successes
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("ISOMORPHISM"));
    assert!(text.contains("NOT BIRATIONAL"));
    assert!(stderr(&out).contains("instance 2"));
}

#[test]
fn json_mode_emits_one_object_per_instance() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("birat-jsonl-{}.txt", std::process::id()));
    std::fs::write(&path, "t ; t^2\nt^2\n").unwrap();

    let out = birat(&["classify", "--json", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();

    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert!(value.get("classification").is_some());
    }
}

#[test]
fn gb_and_divdiff_json_shapes() {
    let out = birat(&["gb", "--json", "t^3", "t^2 + t"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["basis_monic"].as_array().unwrap().len(), 2);
    assert_eq!(value["gi"].as_array().unwrap().len(), 2);

    let out = birat(&["divdiff", "--json", "t^3"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["gi"][0], "t^2 + t*s + s^2");
    assert_eq!(value["diagonals"][0], "3*s^2");
    assert_eq!(value["derivatives"][0], "3*s^2");
}
