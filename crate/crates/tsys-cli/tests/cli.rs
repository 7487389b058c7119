//! Contract tests for the `tsys` binary: exit codes, determinism, output
//! formats, and the bundled input fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn tsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsys")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_str().expect("utf-8 path").to_string()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let a = tsys(&["zamolodchikov", "--d", "1", "--ell", "1", "--seed", "7"]);
    let b = tsys(&["zamolodchikov", "--d", "1", "--ell", "1", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["p"], 4);
    assert_eq!(v["report"]["passed"], true);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(tsys(&["--nope"]).status.code(), Some(2));
    assert_eq!(tsys(&["evolve", "--input", "/nonexistent.json"]).status.code(), Some(2));
    let off = tsys(&["lgv", "--input", &fixture("surface.json"), "--i", "0", "--j", "0", "--k", "2"]);
    assert_eq!(off.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&off.stderr).contains("sublattice"));
    let csv = tsys(&["wall", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(2));
}

#[test]
fn fixtures_drive_every_subcommand() {
    let runs: Vec<Vec<String>> = vec![
        vec!["evolve".into(), "--input".into(), fixture("surface.json"), "--kmax".into(), "2".into()],
        vec!["evolve".into(), "--input".into(), fixture("symbolic.json"), "--kmax".into(), "2".into()],
        vec!["ysys".into(), "--input".into(), fixture("pq.json"), "--levels".into(), "4".into()],
        vec!["lgv".into(), "--input".into(), fixture("surface.json"), "--j".into(), "1".into(), "--k".into(), "2".into()],
        vec!["wall".into(), "--input".into(), fixture("strip.json"), "--kmax".into(), "2".into()],
        vec!["zamolodchikov".into(), "--input".into(), fixture("tube.json")],
        vec!["condense".into(), "--input".into(), fixture("matrix.json")],
        vec!["coeffs".into(), "--input".into(), fixture("strip.json")],
        vec!["pentagram".into(), "--input".into(), fixture("pentagon.json"), "--iters".into(), "6".into()],
        vec!["mutations".into(), "--input".into(), fixture("pq.json")],
        vec!["unfold".into(), "--input".into(), fixture("unfold.json")],
    ];
    for args in runs {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = tsys(&refs);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn closed_pentagon_sits_on_the_conserved_locus() {
    let out = tsys(&["pentagram", "--input", &fixture("pentagon.json"), "--iters", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["on_conserved_locus"], true);
    assert_eq!(v["report"]["passed"], true);
    let os = v["O"].as_array().expect("O series");
    assert!(os.iter().all(|o| o == &os[0]), "O should be constant");
}

#[test]
fn pentagram_csv_is_a_flat_series() {
    let out = tsys(&["pentagram", "--input", &fixture("pentagon.json"), "--iters", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("utf-8 csv");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("iter,O,E"));
    assert_eq!(lines.clone().count(), 4);
    assert!(lines.all(|l| l.split(',').count() == 3));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("tsys-cli-test-{}.json", std::process::id()));
    let out = tsys(&[
        "condense",
        "--input",
        &fixture("matrix.json"),
        "--output",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("file written")).expect("json");
    assert_eq!(v["size"], 4);
    std::fs::remove_file(&path).ok();
}
