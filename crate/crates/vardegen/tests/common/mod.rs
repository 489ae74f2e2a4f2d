#![allow(dead_code)]

use std::path::PathBuf;

use clap::Parser;
use proptest::prelude::*;
use vardegen::cli::{run, Cli};
use vardegen::format::{Instance, Payload};
use vardegen_core::degeneracy::{DegeneracyFunction, VectorFunction};
use vardegen_core::reductions::ListAssignment;
use vardegen_core::Digraph;

pub fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

/// Runs the command line `vardegen <args>` in-process.
pub fn cli(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("vardegen").chain(args.iter().copied()))
        .expect("arguments parse");
    run(&cli)
}

/// Fixed commands whose structured reports are pinned under tests/golden.
pub fn golden_cases() -> Vec<(&'static str, Vec<String>)> {
    let with = |file: &str, rest: &[&str]| -> Vec<String> {
        let mut v: Vec<String> = vec!["--format".into(), "structured".into()];
        v.extend(rest.iter().map(|s| s.to_string()));
        v.push(data(file));
        v
    };
    vec![
        ("partition_triangle", with("triangle.txt", &["partition"])),
        (
            "partition_three_blocks",
            with("three_blocks.txt", &["partition"]),
        ),
        (
            "partition_three_blocks_slack",
            with("three_blocks_slack.txt", &["partition", "--check-shifts"]),
        ),
        (
            "check_hard_three_blocks",
            with("three_blocks.txt", &["check-hard"]),
        ),
        ("oracle_triangle", with("triangle.txt", &["oracle"])),
        (
            "list_color_two_squares",
            with("two_squares.txt", &["list-color"]),
        ),
        ("brooks_k5", with("k5.txt", &["brooks"])),
        (
            "s_color_k5_two_classes",
            with("k5.txt", &["s-color", "--s", "2", "--colors", "2"]),
        ),
        (
            "s_color_k5_three_classes",
            with("k5.txt", &["s-color", "--s", "2", "--colors", "3"]),
        ),
        (
            "list_s_color_c7",
            with("c7_lists.txt", &["list-s-color", "--s", "1"]),
        ),
        (
            "list_s_color_c7_three",
            with("c7_three_lists.txt", &["list-s-color", "--s", "1"]),
        ),
        (
            "fuzz_seed_7",
            [
                "--format",
                "structured",
                "--seed",
                "7",
                "fuzz",
                "--n-max",
                "5",
                "--p",
                "2",
                "--cases",
                "200",
            ]
            .map(String::from)
            .to_vec(),
        ),
    ]
}

pub fn digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

/// Any instance the file format can carry. Payloads need a vertex, since
/// an empty payload section cannot be told apart from a missing one.
pub fn instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (
        digraph(1, max_n),
        0..4usize,
        1..=3usize,
        proptest::collection::vec(0..5usize, max_n * 3),
    )
        .prop_flat_map(|(d, kind, p, values)| {
            let n = d.vertex_count();
            let lists =
                proptest::collection::vec(proptest::collection::btree_set(1..=9u32, 0..=4), n);
            (Just(d), Just(kind), Just(p), Just(values), lists).prop_map(
                move |(d, kind, p, values, lists)| {
                    let payload = match kind {
                        0 => Payload::None,
                        1 => Payload::Function(
                            VectorFunction::new(
                                p,
                                (0..n).map(|v| values[v * 3..v * 3 + p].to_vec()).collect(),
                            )
                            .unwrap(),
                        ),
                        2 => Payload::Lists(ListAssignment::new(
                            lists.into_iter().map(|s| s.into_iter().collect()).collect(),
                        )),
                        _ => Payload::Thresholds(DegeneracyFunction(values[..n].to_vec())),
                    };
                    Instance {
                        digraph: d,
                        payload,
                    }
                },
            )
        })
}
