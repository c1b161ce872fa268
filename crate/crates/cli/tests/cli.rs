use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn salvetti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_salvetti")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lists_types() {
    let o = salvetti(&["list-types"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("B3    salvetti, |W| = 48"));
    assert!(text.contains("A~2   toric, |W0| = 6"));
}

#[test]
fn build_then_homology() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g2.json");
    let o = salvetti(&["build", "G2", "salvetti", "--out", path(&file)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(fs::read_to_string(&file).unwrap().contains("salvetti-complex/v1"));

    let o = salvetti(&["homology", path(&file)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Z^6") && text.contains("Z^5"));

    let o = salvetti(&["homology", path(&file), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["torsion_free"], true);
    let betti: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d["betti"].as_u64().unwrap()).collect();
    assert_eq!(betti, [1, 6, 5]);
}

#[test]
fn toric_filtration_stage() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("stage.json");
    let o = salvetti(&["build", "A~2", "filtration", "--require", "s0,s2", "--out", path(&file)]);
    assert!(o.status.success());
    let o = salvetti(&["homology", path(&file), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["torsion_free"], true);
}

#[test]
fn chain_maps() {
    let o = salvetti(&["build", "A3", "delta", "--require", "s3", "--next", "s2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "salvetti-chain-map/v1");
    assert_eq!(v["shift"], "-2");

    let o = salvetti(&["build", "A~2", "projection", "--base", "s0", "--next", "s1"]);
    assert!(o.status.success());

    // The summand form of this inclusion is not a chain map.
    let o = salvetti(&["build", "A~2", "inclusion", "--require", "s0", "--next", "s1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(salvetti(&["build", "Q7", "salvetti"]).status.code(), Some(2));
    assert_eq!(salvetti(&["build", "A~2", "salvetti"]).status.code(), Some(2));
    assert_eq!(salvetti(&["build", "A2", "delta"]).status.code(), Some(2));
    assert_eq!(salvetti(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(salvetti(&["verify", "--suite", "z"]).status.code(), Some(2));
    assert_eq!(salvetti(&["homology", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(salvetti(&["verify", "--type", "E8", "--max-order", "1000"]).status.code(), Some(2));
}

#[test]
fn verify_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let o = salvetti(&["verify", "--type", "A2", "--type", "A~2", "--jobs", "2", "--out", path(&file)]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));

    let text = fs::read_to_string(&file).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], "salvetti-report/v1");
    assert_eq!(v["subjects"].as_array().unwrap().len(), 2);

    let o = salvetti(&["report", path(&file)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("== A~2 toric =="));

    // A tampered report with a failed check exits 1.
    let mut v = v;
    v["subjects"][0]["checks"][0]["status"] = "fail".into();
    v["summary"]["failed"] = 1.into();
    fs::write(&file, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(salvetti(&["report", path(&file)]).status.code(), Some(1));
}
