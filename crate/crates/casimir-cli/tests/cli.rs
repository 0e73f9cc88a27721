//! End-to-end tests for the `casimir` binary: golden files for every
//! subcommand, exit-code contract, output determinism, and JSON round-trips.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_casimir"));
    cmd.args(args);
    for (key, value) in env {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().expect("exit code"),
    )
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn assert_golden(args: &[&str], name: &str) {
    let (stdout, stderr, code) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    assert_eq!(stdout, golden(name), "golden mismatch for {name}");
}

// --- golden files, one per subcommand and format ---

#[test]
fn golden_eig() {
    assert_golden(&["eig", "--n", "4", "1", "0", "0"], "eig_su4_fundamental.txt");
    assert_golden(&["eig", "--n", "3", "1", "1"], "eig_su3_adjoint.txt");
    assert_golden(&["eig", "--n", "3", "0", "0"], "eig_su3_trivial.txt");
    assert_golden(
        &["eig", "--n", "4", "1", "0", "0", "--decimal"],
        "eig_su4_fundamental_decimal.txt",
    );
    assert_golden(
        &["eig", "--n", "4", "1", "0", "0", "--format", "json"],
        "eig_su4_fundamental.json",
    );
    assert_golden(
        &["eig", "--n", "5", "0", "1", "0", "0", "--format", "csv"],
        "eig_su5_antisym.csv",
    );
}

#[test]
fn golden_stable_eig() {
    assert_golden(
        &["stable-eig", "--k", "1", "--head", "1", "--tail", "1"],
        "stable_eig_adjoint.txt",
    );
    assert_golden(
        &["stable-eig", "--k", "1", "--head", "2", "--tail", "0"],
        "stable_eig_symmetric.txt",
    );
    assert_golden(
        &["stable-eig", "--k", "1", "--head", "0", "--tail", "0"],
        "stable_eig_trivial.txt",
    );
    assert_golden(
        &[
            "stable-eig", "--k", "2", "--head", "0", "1", "--tail", "2", "0", "--format", "json",
        ],
        "stable_eig_balanced_pair.json",
    );
}

#[test]
fn golden_decompose() {
    assert_golden(&["decompose", "--n", "5", "--k", "1"], "decompose_su5_k1.txt");
    assert_golden(&["decompose", "--n", "5", "--k", "2"], "decompose_su5_k2.txt");
    assert_golden(
        &["decompose", "--n", "5", "--k", "2", "--format", "json"],
        "decompose_su5_k2.json",
    );
    assert_golden(
        &["decompose", "--n", "5", "--k", "2", "--format", "csv"],
        "decompose_su5_k2.csv",
    );
}

#[test]
fn golden_verify() {
    assert_golden(
        &["verify", "--k-max", "1", "--n-list", "3", "--label-bound", "1"],
        "verify_k1_n3.txt",
    );
    assert_golden(
        &[
            "verify", "--k-max", "2", "--n-list", "5,7,9", "--label-bound", "2",
        ],
        "verify_k2.txt",
    );
}

#[test]
fn golden_batch() {
    let path = fixture("demo_reps.txt");
    assert_golden(&["batch", &path], "batch_demo.txt");
    assert_golden(&["batch", &path, "--format", "json"], "batch_demo.jsonl");
}

// --- exit-code contract: 0 pass, 1 violation, 2 usage/input, 3 cap ---

#[test]
fn exit_code_usage_errors() {
    // Wrong label count.
    let (_, stderr, code) = run(&["eig", "--n", "4", "1", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("3 Dynkin labels"));

    // Unknown flag: clap's own usage error.
    let (_, _, code) = run(&["eig", "--bogus"]);
    assert_eq!(code, 2);

    // Head/tail length mismatch.
    let (_, _, code) = run(&["stable-eig", "--k", "2", "--head", "0", "1", "--tail", "1"]);
    assert_eq!(code, 2);

    // Negative labels are rejected while parsing.
    let (_, _, code) = run(&["stable-eig", "--k", "1", "--head", "-1", "--tail", "1"]);
    assert_eq!(code, 2);

    // Verify below the stable range.
    let (_, stderr, code) = run(&["verify", "--k-max", "2", "--n-list", "4", "--label-bound", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("stable range"));

    // Unreadable batch input.
    let (_, _, code) = run(&["batch", "/nonexistent/input.txt"]);
    assert_eq!(code, 2);
}

#[test]
fn exit_code_resource_cap() {
    let (_, stderr, code) = run(&["decompose", "--n", "4", "--k", "9"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("cap"));

    // An explicit tiny cap trips much earlier.
    let (_, _, code) = run(&["decompose", "--n", "5", "--k", "3", "--cap", "10"]);
    assert_eq!(code, 3);
}

#[test]
fn decompose_outside_stable_range_is_usage_error() {
    let (_, stderr, code) = run(&["decompose", "--n", "4", "--k", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("stable range"));
}

#[test]
fn batch_reports_bad_lines_and_keeps_going() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("reps.txt");
    let mut file = std::fs::File::create(&path).expect("create");
    writeln!(file, "1 | 1 / 1").unwrap();
    writeln!(file, "2 | 0 1 / 1").unwrap();
    writeln!(file, "1 | 2 / 0").unwrap();
    drop(file);

    let (stdout, stderr, code) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"));
    // Both good lines still produced records.
    assert_eq!(stdout.lines().count(), 2);
    assert!(stdout.contains("2*N + 2 - 4/N"));
}

// --- determinism ---

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = [
        "verify", "--k-max", "2", "--n-list", "5,7,9", "--label-bound", "2",
    ];
    let (single, _, code1) = run_with_env(&args, &[("RAYON_NUM_THREADS", "1")]);
    let (parallel, _, code2) = run_with_env(&args, &[("RAYON_NUM_THREADS", "4")]);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(single, parallel);

    let (first, _, _) = run(&["decompose", "--n", "7", "--k", "2", "--format", "json"]);
    let (second, _, _) = run(&["decompose", "--n", "7", "--k", "2", "--format", "json"]);
    assert_eq!(first, second);
}

// --- JSON round-trips: parse and re-serialize is the identity ---

#[derive(serde::Serialize, serde::Deserialize)]
struct PolyJson {
    a1: String,
    a0: String,
    am1: String,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct UniversalJson {
    x: String,
    y: String,
    z: String,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RepRecord {
    k: usize,
    head: Vec<u32>,
    tail: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<String>,
    poly: PolyJson,
    balanced: bool,
    areas: [i64; 2],
    universal: Option<UniversalJson>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct DecomposeDoc {
    n: usize,
    k: usize,
    records: Vec<RepRecord>,
    checksum: String,
    pass: bool,
}

#[test]
fn decompose_json_round_trips() {
    let (stdout, _, code) = run(&["decompose", "--n", "5", "--k", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let line = stdout.trim_end();
    let doc: DecomposeDoc = serde_json::from_str(line).expect("valid document");
    assert_eq!(doc.records.len(), 6);
    assert_eq!(doc.checksum, "576");
    assert!(doc.pass);
    assert_eq!(serde_json::to_string(&doc).unwrap(), line);
}

#[test]
fn batch_json_lines_round_trip() {
    let path = fixture("demo_reps.txt");
    let (stdout, _, code) = run(&["batch", &path, "--format", "json"]);
    assert_eq!(code, 0);
    for line in stdout.lines() {
        let record: RepRecord = serde_json::from_str(line).expect("valid record");
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
        // Schema invariant: universal present exactly when balanced.
        assert_eq!(record.balanced, record.universal.is_some());
    }
    assert_eq!(stdout.lines().count(), 3);
}
