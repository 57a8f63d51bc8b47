use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn thinpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thinpos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn barbell(dir: &TempDir) -> std::path::PathBuf {
    let file = dir.path().join("barbell.txt");
    let out = thinpos(&["gen", "barbell", "--m", "3", "--output", path(&file)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    file
}

#[test]
fn gen_writes_edge_list() {
    let out = thinpos(&["gen", "barbell", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.trim() == "2 3 1"), "{text}");
}

#[test]
fn cluster_reports_barbell_halves_deterministically() {
    let dir = TempDir::new().unwrap();
    let file = barbell(&dir);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for out_file in [&a, &b] {
        let out = thinpos(&[
            "cluster", "--input", path(&file), "--restarts", "8", "--seed", "1", "--oracle",
            "--output", path(out_file),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let ja = std::fs::read_to_string(&a).unwrap();
    assert_eq!(ja, std::fs::read_to_string(&b).unwrap());
    let report: serde_json::Value = serde_json::from_str(&ja).unwrap();
    let clusters = report["clusters"].as_array().unwrap();
    let half = clusters
        .iter()
        .find(|c| c["members"] == serde_json::json!(["0", "1", "2"]))
        .expect("left triangle reported");
    assert_eq!(half["boundary"], 1.0);
    assert_eq!(half["oracle"], true);
}

#[test]
fn thin_prints_final_width() {
    let dir = TempDir::new().unwrap();
    let file = barbell(&dir);
    let out = thinpos(&["thin", "--input", path(&file), "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("step 0: width"));
    assert!(text.contains("final width"));
}

#[test]
fn verify_reports_oracle_verdict() {
    let dir = TempDir::new().unwrap();
    let file = barbell(&dir);
    let out = thinpos(&["verify", "--input", path(&file), "--set", "0,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("boundary 1"));
    assert!(text.contains("pinch cluster true"));

    let out = thinpos(&["verify", "--input", path(&file), "--set", "0,1"]);
    let text = stdout(&out);
    assert!(text.contains("pinch cluster false"));
    assert!(text.contains("witness"));
}

#[test]
fn input_errors_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(thinpos(&["thin", "--input", path(&missing)]).status.code(), Some(1));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1 2\n1 1 3\n").unwrap();
    let out = thinpos(&["cluster", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn step_limit_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("planted.txt");
    let out = thinpos(&["gen", "planted", "--sizes", "8,8", "--output", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let out = thinpos(&["cluster", "--input", path(&file), "--restarts", "2", "--max-steps", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
