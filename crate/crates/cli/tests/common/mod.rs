#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden file name and the arguments that must reproduce it byte for byte.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "orbit_necklace_001101",
        &["orbit", "001101", "--kind", "necklace"],
    ),
    (
        "orbit_bracelet_1021",
        &["orbit", "1021", "--kind", "bracelet"],
    ),
    ("orbit_single_symbol", &["orbit", "7", "--kind", "necklace"]),
    (
        "fixed_necklaces_211",
        &["generate", "--mode", "necklaces", "--content", "2,1,1"],
    ),
    (
        "fixed_bracelets_211",
        &["generate", "--mode", "bracelets", "--content", "2,1,1"],
    ),
    (
        "fixed_necklaces_211_offset0",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--content",
            "2,1,1",
            "--offset",
            "0",
        ],
    ),
    (
        "fixed_necklaces_22",
        &["generate", "--mode", "necklaces", "--content", "2,2"],
    ),
    (
        "fixed_necklaces_13",
        &["generate", "--mode", "necklaces", "--content", "1,3"],
    ),
    (
        "necklaces_4_2",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--length",
            "4",
            "--arity",
            "2",
            "--no-index",
        ],
    ),
    (
        "necklaces_4_2_offset0",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--length",
            "4",
            "--arity",
            "2",
            "--offset",
            "0",
            "--no-index",
        ],
    ),
    (
        "necklaces_2_3",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--length",
            "2",
            "--arity",
            "3",
            "--no-index",
        ],
    ),
    (
        "necklaces_4_2_count",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--length",
            "4",
            "--arity",
            "2",
            "--count-only",
        ],
    ),
    (
        "necklaces_6_2_count",
        &[
            "generate",
            "--mode",
            "necklaces",
            "--length",
            "6",
            "--arity",
            "2",
            "--count-only",
        ],
    ),
    (
        "bracelets_6_2_count",
        &[
            "generate",
            "--mode",
            "bracelets",
            "--length",
            "6",
            "--arity",
            "2",
            "--count-only",
        ],
    ),
    (
        "count_necklaces_6_2",
        &[
            "count",
            "--object",
            "necklaces",
            "--length",
            "6",
            "--arity",
            "2",
        ],
    ),
    (
        "count_bracelets_6_2",
        &[
            "count",
            "--object",
            "bracelets",
            "--length",
            "6",
            "--arity",
            "2",
        ],
    ),
    (
        "lyndon_3_3",
        &[
            "generate", "--mode", "lyndon", "--length", "3", "--arity", "3",
        ],
    ),
    (
        "debruijn_4_2",
        &["debruijn", "--length", "4", "--arity", "2", "--offset", "0"],
    ),
    (
        "debruijn_4_2_sep",
        &[
            "debruijn", "--length", "4", "--arity", "2", "--offset", "0", "--sep", ".",
        ],
    ),
    (
        "debruijn_2_3",
        &["debruijn", "--length", "2", "--arity", "3", "--offset", "1"],
    ),
    (
        "debruijn_2_3_sep",
        &[
            "debruijn", "--length", "2", "--arity", "3", "--offset", "1", "--sep", ".",
        ],
    ),
    (
        "debruijn_4_2_windows",
        &[
            "debruijn",
            "--length",
            "4",
            "--arity",
            "2",
            "--offset",
            "0",
            "--windows",
        ],
    ),
    (
        "compose_101_2",
        &["compose", "--target", "1,0,1", "--terms", "2"],
    ),
    (
        "counting_vectors_4_2",
        &["compose", "--counting-vectors", "4,2"],
    ),
    ("compose_5_1", &["compose", "--target", "5", "--terms", "1"]),
    ("permute_1011", &["permute", "1011"]),
    ("permute_012", &["permute", "012"]),
];

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_necklaces"))
        .args(args)
        .env_remove("NECKLACES_ORACLE_LIMIT")
        .env_remove("NECKLACES_DEBRUIJN_LIMIT")
        .output()
        .expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).expect("golden file present")
}
