mod common;

use std::fs;

use common::{cli, data, golden_cases, golden_path, instance};
use proptest::prelude::*;
use vardegen::format::{
    parse_certificates, parse_instance, parse_partition, render_instance, Payload,
};
use vardegen_core::degeneracy::validate_partition;
use vardegen_core::hard_pair::validate_certificate;

#[test]
fn triangle_is_certified_mono() {
    let (code, out) = cli(&["--format", "structured", "partition", &data("triangle.txt")]);
    assert_eq!(code, 2);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["outcome"], "hard");
    let block = &report["certificates"][0]["blocks"][0];
    assert_eq!(block["type"], "M");
    assert_eq!(block["j"], 1);
    assert_eq!(report["verified"], true);
}

#[test]
fn fuzz_with_seed_seven_agrees() {
    let (code, out) = cli(&[
        "--seed", "7", "fuzz", "--n-max", "5", "--p", "2", "--cases", "300",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("c outcome agreement\n"));
}

/// Text output of a solving command feeds straight back into `validate`.
fn round_trip_through_validate(args: &[&str], file: &str, flag: &str, expect: i32) {
    let dir = tempfile::tempdir().unwrap();
    let mut full: Vec<&str> = args.to_vec();
    let path = data(file);
    full.push(&path);
    let (code, out) = cli(&full);
    assert_eq!(code, expect, "{out}");
    let saved = dir.path().join("result.txt");
    fs::write(&saved, &out).unwrap();
    let saved = saved.display().to_string();
    let (code, report) = cli(&["validate", &path, flag, &saved]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report, "c outcome valid\n");
}

#[test]
fn emitted_objects_validate() {
    round_trip_through_validate(&["partition"], "triangle.txt", "--certificate", 2);
    round_trip_through_validate(&["partition"], "three_blocks.txt", "--certificate", 2);
    round_trip_through_validate(&["check-hard"], "three_blocks.txt", "--certificate", 2);
    round_trip_through_validate(&["partition"], "three_blocks_slack.txt", "--partition", 0);
}

#[test]
fn validate_rejects_a_bad_partition() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("p.txt");
    fs::write(&part, "p partition 3 1\nv 1 1\nv 2 1\nv 3 1\n").unwrap();
    let (code, out) = cli(&[
        "validate",
        &data("triangle.txt"),
        "--partition",
        &part.display().to_string(),
    ]);
    assert_eq!(code, 2);
    assert!(
        out.starts_with("c outcome invalid\nc violation class 1 is not weakly degenerate"),
        "{out}"
    );
}

#[test]
fn validate_rejects_a_tampered_certificate() {
    let (_, out) = cli(&["partition", &data("three_blocks.txt")]);
    let tampered = out.replacen("b 1 M 2", "b 1 M 1", 1);
    assert_ne!(tampered, out);
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.txt");
    fs::write(&cert, tampered).unwrap();
    let (code, _) = cli(&[
        "validate",
        &data("three_blocks.txt"),
        "--certificate",
        &cert.display().to_string(),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.txt");
    fs::write(&bad, "p digraph 2 1 1\na 1 1\nf 1 0\nf 2 0\n").unwrap();
    let (code, out) = cli(&["partition", &bad.display().to_string()]);
    assert_eq!(code, 1);
    assert!(out.contains("line 2: loop at vertex 1"), "{out}");

    let short = dir.path().join("short.txt");
    fs::write(&short, "p digraph 2 2 1\na 1 2\na 2 1\nf 1 1\nf 2 0\n").unwrap();
    let (code, out) = cli(&["partition", &short.display().to_string()]);
    assert_eq!(code, 1);
    assert!(out.contains("degree condition"), "{out}");

    let (code, _) = cli(&[
        "partition",
        &dir.path().join("missing.txt").display().to_string(),
    ]);
    assert_eq!(code, 1);
    let (code, _) = cli(&["list-color", &data("triangle.txt")]);
    assert_eq!(code, 1);
    let (code, out) = cli(&["--budget", "10", "oracle", &data("three_blocks.txt")]);
    assert_eq!(code, 1);
    assert!(out.contains("exceed the budget"), "{out}");
    let (code, _) = cli(&["brooks", &data("k5.txt"), "--colors", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn reductions_report_their_outcomes() {
    let (code, out) = cli(&["list-color", &data("two_squares.txt")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("p coloring 8"));

    let (code, out) = cli(&["brooks", &data("k5.txt")]);
    assert_eq!(code, 2);
    assert!(out.contains("c exception bidirected-complete"));
    let (code, _) = cli(&["brooks", &data("k5.txt"), "--colors", "5"]);
    assert_eq!(code, 0);

    assert_eq!(
        cli(&["s-color", &data("k5.txt"), "--s", "2", "--colors", "2"]).0,
        2
    );
    assert_eq!(
        cli(&["s-color", &data("k5.txt"), "--s", "2", "--colors", "3"]).0,
        0
    );

    let (code, out) = cli(&["list-s-color", &data("c7_lists.txt"), "--s", "1"]);
    assert_eq!(code, 2);
    assert!(
        out.contains("shape bidirected-odd-cycle common-list 1 2 holds true"),
        "{out}"
    );
    assert_eq!(
        cli(&["list-s-color", &data("c7_three_lists.txt"), "--s", "1"]).0,
        0
    );

    let (code, out) = cli(&["oracle", &data("triangle.txt")]);
    assert_eq!(code, 2);
    assert_eq!(out, "c outcome infeasible\n");
}

#[test]
fn structured_reports_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in golden_cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (_, first) = cli(&args);
        let (_, second) = cli(&args);
        assert_eq!(first, second, "{name} is not deterministic");
        let path = golden_path(name);
        if update {
            fs::write(&path, &first).unwrap();
        }
        let pinned =
            fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(first, pinned, "{name} differs from its golden file");
    }
}

#[test]
fn emitted_text_parses() {
    let (_, out) = cli(&["partition", &data("three_blocks_slack.txt")]);
    let part = parse_partition(&out).unwrap();
    let inst =
        parse_instance(&fs::read_to_string(data("three_blocks_slack.txt")).unwrap()).unwrap();
    let Payload::Function(f) = &inst.payload else {
        panic!("function payload")
    };
    assert!(validate_partition(&inst.digraph, f, &part).is_ok());

    let (_, out) = cli(&["partition", &data("three_blocks.txt")]);
    let certs = parse_certificates(&out).unwrap();
    let inst = parse_instance(&fs::read_to_string(data("three_blocks.txt")).unwrap()).unwrap();
    let Payload::Function(f) = &inst.payload else {
        panic!("function payload")
    };
    assert_eq!(certs.len(), 1);
    assert!(validate_certificate(&inst.digraph, f, &certs[0]).is_ok());
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(inst in instance(8)) {
        let text = render_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }
}
