use std::process::Command;

use condiam::cli::run;
use condiam::search::{VerificationCertificate, CSV_HEADER};
use condiam::parse_graph6;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("condiam").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn compute_wiener_of_triangle() {
    assert_eq!(call(&["compute", "--g6", "Bw", "--wiener"]), (0, "3\n".into(), String::new()));
    let (code, out, _) = call(&["compute", "--g6", "Ch", "--wiener", "--diameter", "--transmission", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "10\n3\n6\n");
    let (code, out, _) = call(&["compute", "--g6", "Ch", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["wiener"], 10);
}

#[test]
fn verify_path_claim_matches() {
    let (code, out, _) = call(&["verify", "--c", "-1", "--s", "2", "--n", "8", "--source", "trees"]);
    assert_eq!(code, 0);
    let cert = VerificationCertificate::from_json(&out).unwrap();
    assert_eq!(cert.status.to_string(), "MATCH_UNIQUE");
    assert_eq!(cert.report.max_wiener, Some(84));
}

#[test]
fn verify_reports_tie_with_exit_one() {
    let (code, out, _) = call(&["verify", "--c", "1", "--s", "2", "--n", "10", "--source", "trees"]);
    assert_eq!(code, 1);
    let cert = VerificationCertificate::from_json(&out).unwrap();
    assert_eq!(cert.status.to_string(), "TIE");
    assert_eq!(cert.report.max_wiener, Some(141));
    assert_eq!(cert.report.maximizers.len(), 2);
    let x = cert.crosscheck.unwrap();
    assert_eq!(x.construction_difference_value, 0);
}

#[test]
fn audit_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let (code, out, _) = call(&[
        "audit", "--c", "-1,0,1", "--s", "1,2", "--n-max", "9", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "the grid contains known ties");
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let cols = CSV_HEADER.split(',').count();
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().all(|r| r.split(',').count() == cols));
    assert!(rows.contains(&"1,2,9,4,22,102,MISMATCH"));
    assert!(rows.contains(&"1,1,7,4,5,48,TIE"));
}

#[test]
fn audit_json_is_an_array() {
    let (code, out, _) = call(&["audit", "--c", "0", "--s", "1", "--n-max", "8", "--format", "json"]);
    assert_eq!(code, 0);
    let certs: Vec<VerificationCertificate> = serde_json::from_str(&out).unwrap();
    assert_eq!(certs.len(), 4);
}

#[test]
fn family_and_condiam() {
    let (code, out, _) = call(&["family", "--kind", "single", "--n", "7", "--i", "3"]);
    assert_eq!(code, 0);
    let g = parse_graph6(out.trim().as_bytes()).unwrap();
    assert_eq!(condiam::wiener(&g).unwrap(), 50);
    let (code, claimed, _) = call(&["family", "--claimed", "--c", "0", "--s", "2", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(claimed, out);

    let (code, out, _) = call(&["family", "--kind", "path", "--n", "6"]);
    assert_eq!(code, 0);
    let (code, text, _) = call(&["condiam", "--g6", out.trim(), "--s", "2", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(text, "3\nV1 [0, 1]\nV2 [4, 5]\nbrute-force 3\n");
}

#[test]
fn sweep_lists_maximisers() {
    let (code, out, _) = call(&["sweep", "--n", "7", "--s", "1", "--target-d", "4", "--format", "g6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    for line in out.lines() {
        assert_eq!(condiam::wiener(&parse_graph6(line.as_bytes()).unwrap()).unwrap(), 48);
    }
}

#[test]
fn transform_check_passes() {
    let (code, out, _) = call(&["transform-check", "--trials", "100", "--max-n", "12", "--seed", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.contains("failures=0")));
}

#[test]
fn bad_input_exits_two_with_one_line() {
    let cases: &[&[&str]] = &[
        &["compute", "--g6", "B~~", "--wiener"],
        &["compute", "--g6", "B?", "--wiener"],
        &["compute", "--g6", "Bw", "--transmission", "7"],
        &["compute", "--input", "/nonexistent/file.g6"],
        &["compute"],
        &["verify", "--c", "2", "--s", "1", "--n", "8"],
        &["verify", "--c", "0", "--s", "2", "--n", "5"],
        &["verify", "--c", "0", "--s", "1", "--n", "10", "--source", "exhaustive"],
        &["sweep", "--n", "5", "--s", "1", "--target-d", "2", "--source", "nowhere"],
        &["family", "--kind", "star", "--n", "5"],
        &["family", "--kind", "single", "--n", "5", "--i", "9"],
    ];
    for args in cases {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}: {out}{err}");
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "), "{args:?}: {err}");
    }
    for args in [&["frobnicate"][..], &["audit", "--n-max", "x"], &["verify", "--c", "1"]] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "));
    }
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("transform-check"));
}

#[test]
fn malformed_corpus_line_is_reported_or_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.g6");
    std::fs::write(&path, "Ch\nC\x1f\nCr\n").unwrap();
    let source = format!("g6:{}", path.display());
    let args = ["sweep", "--n", "4", "--s", "1", "--target-d", "3", "--source", &source, "--format", "text"];
    let (code, _, err) = call(&args);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let mut lenient = args.to_vec();
    lenient.push("--lenient");
    let (code, out, _) = call(&lenient);
    assert_eq!(code, 0);
    assert!(out.contains("examined 2"), "{out}");
}

#[test]
fn binary_exit_codes_and_thread_env() {
    let bin = env!("CARGO_BIN_EXE_condiam");
    let out = Command::new(bin).args(["compute", "--g6", "Bw", "--wiener"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3\n");

    let out = Command::new(bin)
        .args(["verify", "--c", "1", "--s", "2", "--n", "10", "--format", "csv"])
        .env("CONDIAM_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("1,2,10,5,35,141,TIE"));

    let out = Command::new(bin).args(["compute", "--g6", "\u{7f}"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
