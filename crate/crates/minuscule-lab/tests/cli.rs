//! End-to-end checks of the command-line interface: output shapes, exit
//! codes, byte determinism and JSON round-trips.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minuscule-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn list_minuscule_outputs() {
    let out = run(&["list-minuscule", "--type", "D", "--rank", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "type: D5\nminuscule nodes: 1 4 5\n");

    let out = run(&["list-minuscule", "--type", "F", "--rank", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "type: F4\nminuscule nodes: none\n");

    let out = run(&["list-minuscule", "--type", "A", "--rank", "1"]);
    assert_eq!(stdout(&out), "type: A1\nminuscule nodes: 1\n");

    let out = run(&[
        "list-minuscule",
        "--type",
        "E",
        "--rank",
        "6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["minuscule_nodes"], serde_json::json!([1, 6]));
}

#[test]
fn invalid_types_exit_2() {
    let out = run(&["list-minuscule", "--type", "Q", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["list-minuscule", "--type", "D", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dynkin", "--type", "B", "--rank", "1", "--node", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dynkin_e6_node_1() {
    let out = run(&["dynkin", "--type", "E", "--rank", "6", "--node", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("D_ev(q) = 1 + q^4 + q^8"), "{text}");
    assert!(text.contains("fixed weights under w0: 3"), "{text}");
    assert!(text.contains("free (split class): true"), "{text}");
}

#[test]
fn dynkin_e7_node_7_not_free() {
    let out = run(&["dynkin", "--type", "E", "--rank", "7", "--node", "7"]);
    let text = stdout(&out);
    assert!(text.contains("fixed weights under w0: 0"), "{text}");
    assert!(text.contains("free (split class): false"), "{text}");
}

#[test]
fn dynkin_eval_flag() {
    let out = run(&[
        "dynkin", "--type", "A", "--rank", "1", "--node", "1", "--eval", "-1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("D(-1) = 0"));
}

#[test]
fn dynkin_unicode_rendering() {
    let out = run(&[
        "dynkin", "--type", "E", "--rank", "6", "--node", "1", "--unicode",
    ]);
    assert!(stdout(&out).contains("1 + q⁴ + q⁸"));
}

#[test]
fn dynkin_non_minuscule_node_exits_2() {
    let out = run(&["dynkin", "--type", "G", "--rank", "2", "--node", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not minuscule"), "{err}");
}

#[test]
fn dynkin_json_shape() {
    let out = run(&[
        "dynkin", "--type", "A", "--rank", "3", "--node", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["orbit_size"], 6);
    assert_eq!(v["dynkin"], "1 + q + 2q^2 + q^3 + q^4");
    assert_eq!(v["fixed_weights"], 2);
    assert_eq!(v["value_at_minus_one"], "2");
}

#[test]
fn verify_trivial_sweep_passes() {
    let out = run(&["verify", "--suite", "all", "--max-rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 fail"));
}

#[test]
fn verify_is_byte_deterministic() {
    let args = [
        "verify",
        "--suite",
        "identities",
        "--max-rank",
        "3",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "two runs differ");

    // A capped worker count must not change the bytes either.
    let c = bin()
        .args(args)
        .env("MINUSCULE_LAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout, "thread cap changed the output");
}

#[test]
fn verify_report_json_roundtrips() {
    let out = run(&[
        "verify",
        "--suite",
        "tables",
        "--max-rank",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report: minuscule_lab::report::Report =
        serde_json::from_str(&stdout(&out)).expect("report parses");
    assert_eq!(report.schema, "1");
    assert_eq!(report.suite, "tables");
    assert!(report.summary.pass > 0);
    assert_eq!(report.summary.fail, 0);
    // Round-trip.
    let again: minuscule_lab::report::Report =
        serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(report, again);
}

#[test]
fn verify_timestamps_opt_in() {
    let plain = run(&["verify", "--suite", "tables", "--max-rank", "2"]);
    assert!(!stdout(&plain).contains("generated:"));
    let stamped = run(&[
        "verify",
        "--suite",
        "tables",
        "--max-rank",
        "2",
        "--timestamps",
    ]);
    assert!(stdout(&stamped).starts_with("generated: "));
}

#[test]
fn tables_markdown_and_json() {
    let out = run(&["tables", "--format", "md"]);
    let text = stdout(&out);
    assert!(text.contains("## Table 1: inner to a split real form"));
    assert!(text.contains("## Table 2: not inner to a split real form"));
    assert!(text.contains("e7(-25)"));

    let out = run(&["tables", "--format", "json", "--instantiate", "n=2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mode"], "instantiated");
    let text = stdout(&out);
    assert!(text.contains("so_{1,4}(R)"), "B row at n=2");
    assert!(text.contains("su_{2,2}"), "fold row at n=2");

    // Unknown formats are usage errors.
    let out = run(&["tables", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("minuscule-lab-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tables.md");
    let out = run(&[
        "tables",
        "--format",
        "md",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.contains("# Adapted real forms"));
    std::fs::remove_file(&path).ok();
}
