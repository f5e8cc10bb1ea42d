use std::io::Write;
use std::process::{Command, Stdio};

use daisy_cli::GraphFile;

fn daisy(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_daisy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn daisy");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn generated_files_round_trip_byte_for_byte() {
    for args in [
        &["generate", "hypercube", "--n", "3"][..],
        &["generate", "daisy", "--n", "4", "--gen", "0011,0110,1100,1001"],
        &["generate", "fibonacci", "--n", "6"],
        &["generate", "lucas", "--n", "6"],
    ] {
        let (code, text, _) = daisy(args, "");
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(GraphFile::parse(&text).unwrap().to_text(), text);
        let (code, out, _) = daisy(&["check", "-"], &text);
        assert_eq!((code, out.as_str()), (0, "proper\n"));
    }
}

#[test]
fn scramble_label_check_pipeline() {
    let (_, lucas, _) = daisy(&["generate", "lucas", "--n", "7"], "");
    let (code, scrambled, _) = daisy(&["scramble", "-", "--seed", "42"], &lucas);
    assert_eq!(code, 0);
    assert!(!scrambled.contains("label"));
    let (code, labelled, _) = daisy(&["label", "-"], &scrambled);
    assert_eq!(code, 0);
    assert_eq!(daisy(&["check", "-"], &labelled).0, 0);
    let (code, cert, _) = daisy(&["decompose", "-"], &labelled);
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("daisy-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let reference = dir.join("lucas.graph");
    std::fs::write(&reference, &lucas).unwrap();
    let (code, _, err) = daisy(&["replay", "-", "--verify", reference.to_str().unwrap()], &cert);
    assert_eq!(code, 0, "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(daisy(&["label", "-"], "3 3\n0 1\n1 2\n0 2\n").2.trim(), "not-bipartite");
    assert_eq!(daisy(&["label", "-"], "3 3\n0 1\n1 2\n0 2\n").0, 1);
    assert_eq!(daisy(&["label", "-"], "3 3\n0 1\n").0, 2);
    assert_eq!(daisy(&["label", "/nonexistent/graph"], "").0, 2);
    assert_eq!(daisy(&["generate", "cube", "--n", "3"], "").0, 2);
    assert_eq!(daisy(&["generate", "lucas", "--n", "1"], "").0, 2);
    assert_eq!(daisy(&["daisy-graph", "-", "--x", "0"], "2 1\n0 1\n").0, 2);
    assert_eq!(daisy(&["replay", "-"], "steps 1\n1\n").0, 1);
    assert_eq!(daisy(&["contract", "-", "--class", "5"], "2 1\n0 1\n").0, 1);
}

#[test]
fn daisy_graph_and_stats() {
    let rooted = "7 8\nroot 6\n0 1\n0 4\n1 2\n2 3\n3 5\n4 5\n4 6\n5 6\n";
    let (code, out, _) = daisy(&["daisy-graph", "-", "--x", "0,3"], rooted);
    assert_eq!(code, 0);
    let sub = GraphFile::parse(&out).unwrap();
    assert_eq!((sub.graph.vertex_count(), sub.graph.edge_count()), (5, 5));
    let (code, report, _) = daisy(&["stats", "-"], "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    assert_eq!(code, 0);
    assert!(report.contains("partial cube yes") && report.contains("median graph no"));
}

#[test]
fn corpus_verify_small() {
    let (code, out, _) = daisy(&["corpus-verify", "--max-n", "2"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("7 instances, 0 failed"));
}
