//! Golden-file tests for the `graslice` binary.
//!
//! Each case runs the binary from `tests/fixtures`, checks the exit code, and
//! compares stdout byte for byte with `tests/golden/<name>.out`. Set
//! `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

const CASES: &[Case] = &[
    case("classify_c3", &["classify", "c3.json"], 0),
    case("classify_p3", &["classify", "p3.json"], 1),
    case("classify_p3_edgelist", &["classify", "p3.txt"], 1),
    case("cone_classify_c3", &["cone-classify", "c3.json"], 0),
    case("cone_classify_p3", &["cone-classify", "p3.json"], 1),
    case("arrow_arc_c3", &["arrow", "arc.json", "--gadget", "c3"], 0),
    case("arrow_loop_c3", &["arrow", "loop.json", "--gadget", "c3"], 0),
    case(
        "arrow_loop_c3_edgelist",
        &["--format", "edgelist", "arrow", "loop.json", "--gadget", "c3"],
        0,
    ),
    case(
        "arrow_two_cycle_c3_dot",
        &["--format", "dot", "arrow", "two_cycle.json", "--gadget", "c3"],
        0,
    ),
    case("arrow_isolated", &["arrow", "isolated.json", "--gadget", "c4"], 0),
    case(
        "phi_two_cycle",
        &["phi", "two_cycle.json", "--gadget", "c3", "--arc", "v", "u"],
        0,
    ),
    case("verify_p4", &["verify-gadget", "--gadget", "p4", "--max-size", "2"], 0),
    case(
        "verify_c3_two_cycle",
        &["verify-gadget", "--gadget", "c3", "--digraph", "two_cycle.json"],
        0,
    ),
    case(
        "verify_mutated",
        &["verify-gadget", "--gadget", "p4_mutated.json", "--max-size", "2"],
        1,
    ),
    case(
        "verify_unbalanced",
        &["verify-gadget", "--gadget", "unbalanced_gadget.json", "--max-size", "1"],
        1,
    ),
    case(
        "strong_replacement_g2",
        &["strong-replacement", "--gadget", "g2", "--max-size", "2"],
        0,
    ),
    case(
        "strong_replacement_k2",
        &[
            "strong-replacement",
            "k2.json",
            "--a",
            "a",
            "--b",
            "b",
            "--digraph",
            "path2.json",
        ],
        0,
    ),
    case(
        "strong_replacement_p2",
        &[
            "strong-replacement",
            "p2_ends.json",
            "--a",
            "a",
            "--b",
            "c",
            "--digraph",
            "path2.json",
        ],
        1,
    ),
    case(
        "homs_k2_k2_count",
        &["homs", "k2.json", "k2.json", "--mode", "count"],
        0,
    ),
    case("homs_k2_c3_list", &["homs", "k2.json", "c3.json", "--mode", "list"], 0),
    case(
        "homs_c3_k2_exists",
        &["homs", "c3.json", "k2.json", "--mode", "exists"],
        1,
    ),
    case(
        "homs_slice_c3",
        &[
            "homs",
            "c3_identity.json",
            "c3_identity.json",
            "--base",
            "c3.json",
            "--mode",
            "list",
        ],
        0,
    ),
    case(
        "homs_directed",
        &["homs", "arc.json", "two_cycle.json", "--directed", "--mode", "list"],
        0,
    ),
    case("endos_c3_identity", &["endos", "c3_identity.json"], 0),
    case("endos_pendant", &["endos", "p3_pendant.json"], 0),
    case("retract_p3_identity", &["retract", "p3_identity.json"], 0),
    case("retract_pendant", &["retract", "p3_pendant.json"], 0),
    case("dichotomy_p3", &["dichotomy", "p3.json", "--max-carrier", "4"], 0),
    case("dichotomy_object", &["dichotomy", "--object", "p3_pendant.json"], 0),
    case(
        "embed_check_c3",
        &["embed-check", "--gadget", "c3", "--max-size", "2"],
        0,
    ),
    case("enumerate_count", &["enumerate-digraphs", "2", "--count"], 0),
    case(
        "enumerate_canonical",
        &["--format", "edgelist", "enumerate-digraphs", "2", "--canonical"],
        0,
    ),
    case("gadget_y", &["gadget", "y"], 0),
    case("gadget_g2", &["gadget", "g2"], 0),
];

/// Input errors: exit 2, nothing on stdout, and a message containing the
/// given fragment on stderr.
const ERRORS: &[(&[&str], &str)] = &[
    (&["classify", "malformed.json"], "EOF"),
    (&["classify", "missing.json"], "cannot read"),
    (
        &["arrow", "arc.json", "--gadget", "unbalanced_gadget.json"],
        "different colors",
    ),
    (&["arrow", "arc.json", "--gadget", "q5"], "unknown built-in gadget"),
    (&["verify-gadget", "--gadget", "p4", "--max-size", "9"], "cap"),
    (
        &["verify-gadget", "--gadget", "c3", "--digraph", "isolated.json"],
        "isolated point",
    ),
    (
        &["homs", "c3_identity.json", "p3_identity.json", "--mode", "count"],
        "different base",
    ),
    (
        &["homs", "c3_identity.json", "c3_identity.json", "--base", "p3.json"],
        "different base",
    ),
    (&["homs", "k2.json", "k2.json", "--base", "c3.json"], "slice objects"),
    (&["retract", "c3_identity.json"], "not a path"),
    (&["dichotomy", "c3.json"], "universal"),
    (&["dichotomy", "p3.json", "--max-carrier", "8"], "sweep limit"),
    (&["phi", "arc.json", "--gadget", "c3", "--arc", "v", "u"], "not an arc"),
    (&["--format", "edgelist", "classify", "c3.json"], "JSON only"),
    (&["enumerate-digraphs", "9"], "cap"),
    (&["frobnicate"], "unrecognized subcommand"),
];

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graslice"))
        .args(args)
        .current_dir(root().join("fixtures"))
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&run(args))).expect("stdout is JSON")
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for c in CASES {
        let out = run(c.args);
        assert_eq!(
            out.status.code(),
            Some(c.code),
            "{}: stderr {}",
            c.name,
            String::from_utf8_lossy(&out.stderr)
        );
        let text = stdout(&out);
        let path = root().join("golden").join(format!("{}.out", c.name));
        if update {
            fs::write(&path, &text).unwrap();
        } else {
            let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            if expected != text {
                mismatches.push(c.name);
            }
        }
    }
    assert!(
        mismatches.is_empty(),
        "stdout differs from golden files: {mismatches:?}"
    );
}

#[test]
fn json_cases_print_valid_json() {
    for c in CASES.iter().filter(|c| !c.args.contains(&"--format")) {
        let text = stdout(&run(c.args));
        assert!(serde_json::from_str::<Value>(&text).is_ok(), "{}", c.name);
    }
}

#[test]
fn input_errors_exit_two() {
    for (args, fragment) in ERRORS {
        let out = run(args);
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {stderr}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(stderr.contains(fragment), "{args:?}: {stderr}");
    }
}

#[test]
fn output_is_deterministic() {
    for c in CASES {
        assert_eq!(run(c.args).stdout, run(c.args).stdout, "{}", c.name);
    }
    let sweep = ["dichotomy", "p3.json", "--max-carrier", "4"];
    let single: Vec<&str> = ["--jobs", "1"].iter().chain(&sweep).copied().collect();
    assert_eq!(run(&sweep).stdout, run(&single).stdout);
}

#[test]
fn classify_verdicts() {
    let v = json(&["classify", "c3.json"]);
    assert_eq!(v["verdict"], "Universal");
    assert_eq!(v["pattern"], "C3");
    assert_eq!(json(&["classify", "p3.json"])["verdict"], "NotUniversal");
}

#[test]
fn arrow_shapes() {
    let arc = json(&["arrow", "arc.json", "--gadget", "c3"]);
    assert_eq!(arc["carrier"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(arc["carrier"]["edges"].as_array().unwrap().len(), 3);

    let triangle = json(&["arrow", "loop.json", "--gadget", "c3"]);
    assert_eq!(triangle["carrier"]["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(triangle["carrier"]["edges"].as_array().unwrap().len(), 3);
    let mut colours: Vec<&str> = triangle["map"]
        .as_object()
        .unwrap()
        .values()
        .map(|c| c.as_str().unwrap())
        .collect();
    colours.sort();
    assert_eq!(colours, ["0", "1", "2"]);

    let out = run(&["arrow", "isolated.json", "--gadget", "c4"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("isolated"));
}

#[test]
fn hom_counts() {
    assert_eq!(json(&["homs", "k2.json", "k2.json", "--mode", "count"])["count"], 2);
    assert_eq!(
        json(&["homs", "c3.json", "k2.json", "--mode", "exists"])["exists"],
        false
    );
    let endos = [
        "homs",
        "c3_identity.json",
        "c3_identity.json",
        "--base",
        "c3.json",
        "--mode",
        "count",
    ];
    assert_eq!(json(&endos)["count"], 1);
    assert_eq!(json(&["endos", "c3_identity.json"])["endo_count"], 1);
}

#[test]
fn sweeps_pass() {
    assert_eq!(
        json(&["verify-gadget", "--gadget", "p4", "--max-size", "2"])["verdict"],
        "pass"
    );
    let mutated = json(&["verify-gadget", "--gadget", "p4_mutated.json", "--max-size", "2"]);
    assert_eq!(mutated["verdict"], "fail");
    assert_eq!(mutated["counterexample"]["kind"], "extra_morphism");
    assert_eq!(
        json(&["embed-check", "--gadget", "c3", "--max-size", "2"])["verdict"],
        "pass"
    );
    assert_eq!(json(&["dichotomy", "p3.json", "--max-carrier", "4"])["exceptions"], 0);
}

#[test]
fn retraction_kinds() {
    assert_eq!(json(&["retract", "p3_identity.json"])["kind"], "RigidPath");
    let r = json(&["retract", "p3_pendant.json"]);
    assert_eq!(r["kind"], "Retract");
    assert_eq!(r["retraction"]["p"], "a");
}
