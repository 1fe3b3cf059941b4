//! End-to-end tests of the command-line interface: subcommands, file
//! formats, exit codes, and manifest emission.

use bergesat::hypergraph::Hypergraph;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bergesat"))
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

fn k3_khg() -> String {
    "2 3 3\n0 1\n0 2\n1 2\n".to_string()
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn invariants_reports_case_table() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k3.khg", &k3_khg());
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args(["--manifest", manifest.to_str().unwrap(), "invariants", &graph]));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("beta=2"));
    assert!(text.contains("f=1"));
    assert!(text.contains("case(k3)=F1"));
    // manifest written with the input digest recorded
    let m: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(m["input_digests"].as_array().unwrap().len(), 1);
    assert_eq!(m["outcome"]["beta"], 2);
}

#[test]
fn construct_writes_khg_output() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k3.khg", &k3_khg());
    let params = write(
        dir.path(),
        "params.json",
        &format!(r#"{{"k": 3, "n": 12, "a": 2, "G": "{graph}", "S": [0]}}"#),
    );
    let output = dir.path().join("out.khg");
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "construct",
        &params,
        "--output",
        output.to_str().unwrap(),
    ]));
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let host = Hypergraph::parse(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!((host.k(), host.n(), host.edge_count()), (3, 12, 5));
}

#[test]
fn check_berge_prints_witness_or_free() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "k3.khg", &k3_khg());
    let free_host = write(dir.path(), "free.khg", "3 3 1\n0 1 2\n");
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "check-berge",
        &free_host,
        &pattern,
    ]));
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "FREE");

    let full_host = write(
        dir.path(),
        "full.khg",
        "3 6 3\n0 1 3\n0 2 4\n1 2 5\n", // the 3-uniform expansion of K3
    );
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "check-berge",
        &full_host,
        &pattern,
    ]));
    assert!(out.status.success());
    let w: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(w["core_map"].as_array().unwrap().len(), 3);
}

#[test]
fn complete_saturates_and_logs_added_edges() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "p3.khg", "2 3 2\n0 1\n1 2\n");
    let host = write(dir.path(), "empty.khg", "3 5 0\n");
    let output = dir.path().join("sat.khg");
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "complete",
        &host,
        &pattern,
        "--output",
        output.to_str().unwrap(),
    ]));
    assert!(out.status.success());
    let sat = Hypergraph::parse(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert!(sat.edge_count() >= 1);
    let log = std::fs::read_to_string(dir.path().join("sat.added.log")).unwrap();
    assert_eq!(log.lines().count(), sat.edge_count());
}

#[test]
fn sat_number_exact_value() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "p2.khg", "2 2 1\n0 1\n");
    let cert = dir.path().join("cert.khg");
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "sat-number",
        "5",
        "3",
        &pattern,
        "--output",
        cert.to_str().unwrap(),
    ]));
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn tight_reduce_reports_certificate() {
    let dir = tempfile::tempdir().unwrap();
    // 4-uniform expansion of the tight path P^(3)_5: sparse, stays below c
    let host = write(
        dir.path(),
        "host.khg",
        "4 8 3\n0 1 2 5\n1 2 3 6\n2 3 4 7\n",
    );
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "tight-reduce",
        &host,
        "3",
        "5",
    ]));
    assert!(out.status.success());
    let j: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(j["kind"], "BOUND_CERTIFICATE");
    assert_eq!(j["c"], 15);
}

#[test]
fn verify_paper_all_pass_for_k3() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "k3.khg", &k3_khg());
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "verify-paper",
        &pattern,
        "3",
        "--n-from",
        "8",
        "--n-to",
        "10",
    ]));
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 3);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_paper_unsupported_case_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "k6.khg", &bergesat::families::complete_graph(6).serialize());
    let manifest = dir.path().join("manifest.json");
    // K6 has f = 4 but k = 6 is outside the case table
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "verify-paper",
        &pattern,
        "6",
    ]));
    assert!(out.status.success());
    assert!(stdout(&out).contains("UNSUPPORTED"));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    let bad = write(dir.path(), "bad.khg", "3 5\n");
    let out = run(bin().args(["--manifest", manifest.to_str().unwrap(), "invariants", &bad]));
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("nope.khg");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "invariants",
        missing.to_str().unwrap(),
    ]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn indeterminate_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "k4.khg", &bergesat::families::complete_graph(4).serialize());
    // the 3-uniform expansion of K4 contains a Berge-K4, but a 2-node budget
    // cannot decide that
    let host = write(
        dir.path(),
        "host.khg",
        &bergesat::berge::expansion(&bergesat::families::complete_graph(4), 3)
            .unwrap()
            .serialize(),
    );
    let manifest = dir.path().join("manifest.json");
    let out = run(bin().args([
        "--manifest",
        manifest.to_str().unwrap(),
        "--node-budget",
        "2",
        "check-berge",
        &host,
        &pattern,
    ]));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn repeated_runs_have_identical_deterministic_manifests() {
    let dir = tempfile::tempdir().unwrap();
    let pattern = write(dir.path(), "k3.khg", &k3_khg());
    let mut manifests = Vec::new();
    for i in 0..2 {
        let manifest = dir.path().join(format!("manifest{i}.json"));
        let out = run(bin().args([
            "--manifest",
            manifest.to_str().unwrap(),
            "verify-paper",
            &pattern,
            "3",
            "--n-from",
            "8",
            "--n-to",
            "9",
        ]));
        assert!(out.status.success());
        let mut m: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
        // timing and the manifest's own path differ between runs by design
        m["wall_time_ms"] = serde_json::json!(0);
        m["command_line"] = serde_json::json!([]);
        manifests.push(m);
    }
    assert_eq!(manifests[0], manifests[1]);
}
