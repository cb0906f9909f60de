use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn steiner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steiner"))
        .args(args)
        .env("EVENFREE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn construct(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = path(dir, name);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", s(&out)]);
    let o = steiner(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn bose_15_is_five_even_free() {
    let dir = TempDir::new().unwrap();
    let d15 = construct(&dir, "d15.json", &["bose", "--x", "5"]);
    let o = steiner(&["verify", "even-free", "--r", "5", s(&d15)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["verdict"], "pass");
    for prop in ["steiner", "cyclic", "pasch"] {
        assert_eq!(code(&steiner(&["verify", prop, s(&d15)])), 0, "{prop}");
    }
}

#[test]
fn fano_fails_four_even_free_with_witness() {
    let dir = TempDir::new().unwrap();
    let fano = construct(&dir, "fano.json", &["pg", "--m", "2", "--q", "2"]);
    let o = steiner(&["verify", "even-free", "--r", "4", "--oracle", s(&fano)]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert_eq!(v["oracle"], "agrees");
    assert_eq!(code(&steiner(&["verify", "pasch", s(&fano)])), 1);
}

#[test]
fn search_13_exhausts_empty() {
    let o = steiner(&["search", "--v", "13", "--k", "3", "--r", "5"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["status"], "exhausted");
    assert_eq!(v["count"], 0);
}

#[test]
fn search_writes_first_design_and_reports_timeout() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "sts19.json");
    let o = steiner(&["search", "--v", "19", "--k", "3", "--r", "5", "--reduce", "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["count"], 2);
    assert_eq!(code(&steiner(&["verify", "pasch", s(&out)])), 0);

    let o = steiner(&["search", "--v", "43", "--k", "3", "--r", "5", "--budget", "0"]);
    assert_eq!(code(&o), 3);
    assert_eq!(stdout_json(&o)["status"], "budget-exhausted");
}

#[test]
fn compose_and_export() {
    let dir = TempDir::new().unwrap();
    let b15 = construct(&dir, "b15.json", &["bose", "--x", "5"]);
    let out = path(&dir, "d75.json");
    let o = steiner(&["compose", "sts3", s(&b15), s(&b15), "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["format"], "cyclic-design/1");
    assert_eq!(doc["v"], 75);
    assert_eq!(doc["base_blocks"].as_array().unwrap().len(), 13);
    assert_eq!(doc["provenance"]["ingredients"].as_array().unwrap().len(), 2);
    assert_eq!(code(&steiner(&["verify", "pasch", s(&out)])), 0);

    let o = steiner(&["export", s(&b15), "--format", "ooc"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("short orbit"));

    let o = steiner(&["export", s(&b15), "--format", "blocks"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 35);
    let lines: Vec<Vec<u32>> = text
        .lines()
        .map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
    assert!(lines.iter().all(|b| b.windows(2).all(|p| p[0] < p[1])));

    let o = steiner(&["export", s(&b15), "--format", "orbits"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("short: 0 5 10"));
}

#[test]
fn compose_rejects_bad_orders() {
    let dir = TempDir::new().unwrap();
    let b15 = construct(&dir, "b15.json", &["bose", "--x", "5"]);
    let pg = construct(&dir, "pg.json", &["pg", "--m", "2", "--q", "3"]);
    let o = steiner(&["compose", "sts3", s(&b15), s(&pg)]);
    assert_eq!(code(&o), 2);
    let fano = construct(&dir, "fano.json", &["pg", "--m", "2", "--q", "2"]);
    let sts13 = path(&dir, "sts13.json");
    steiner(&["search", "--v", "13", "--k", "3", "--r", "3", "--limit", "1", "-o", s(&sts13)]);
    // block size 4 is not an odd prime; fano and sts(13) are admissible orders but contain Pasch
    assert_eq!(code(&steiner(&["compose", "odd-prime", s(&pg), s(&pg)])), 2);
    assert_eq!(code(&steiner(&["compose", "odd-prime", s(&fano), s(&b15)])), 1);
    assert_eq!(code(&steiner(&["compose", "odd-prime", s(&sts13), s(&b15)])), 1);
}

#[test]
fn matrices_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let a = construct(&dir, "a.json", &["dm", "--v", "7", "--k", "3"]);
    let b = construct(&dir, "b.json", &["dm", "--v", "13", "--k", "3"]);
    let p = construct(&dir, "p.json", &["dm-product", s(&a), s(&b)]);
    let o = steiner(&["verify", "dm", s(&p)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["v"], 91);
    let oa = construct(&dir, "oa.json", &["oa", "--k", "5"]);
    assert_eq!(code(&steiner(&["verify", "oa", s(&oa)])), 0);
    let oa4 = construct(&dir, "oa4.json", &["oa", "--q", "4"]);
    assert_eq!(code(&steiner(&["verify", "oa", s(&oa4)])), 0);

    let pg = construct(&dir, "pg.json", &["pg", "--m", "2", "--q", "3"]);
    let m13 = construct(&dir, "m13.json", &["dm", "--v", "13", "--k", "4"]);
    let out = path(&dir, "d169.json");
    let o = steiner(&["compose", "dm", s(&pg), s(&pg), "--dm", s(&m13), "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&steiner(&["verify", "pasch", s(&out)])), 0);
}

#[test]
fn tampered_and_forged_documents() {
    let dir = TempDir::new().unwrap();
    let d15 = construct(&dir, "d15.json", &["bose", "--x", "5"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&d15).unwrap()).unwrap();

    doc["certificates"] = serde_json::json!([
        { "property": "even-free", "bound": 5, "verdict": false, "tool_version": "0.0.0" }
    ]);
    let forged = path(&dir, "forged.json");
    std::fs::write(&forged, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = steiner(&["verify", "even-free", "--r", "5", s(&forged)]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ignored"));

    doc["base_blocks"][0]["points"] = serde_json::json!([0, 1, 2]);
    let tampered = path(&dir, "tampered.json");
    std::fs::write(&tampered, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = steiner(&["verify", "steiner", s(&tampered)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("digest"));
}

#[test]
fn two_orbit_witness_and_usage_errors() {
    let dir = TempDir::new().unwrap();
    let d15 = construct(&dir, "d15.json", &["bose", "--x", "5"]);
    let o = steiner(&["verify", "witness-2k", s(&d15)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["size"], 6);
    let pg = construct(&dir, "pg.json", &["pg", "--m", "2", "--q", "3"]);
    assert_eq!(code(&steiner(&["verify", "witness-2k", s(&pg)])), 2);

    assert_eq!(code(&steiner(&["construct", "bose", "--x", "9"])), 2);
    assert_eq!(code(&steiner(&["search", "--v", "11", "--k", "3", "--r", "5"])), 2);
    assert_eq!(code(&steiner(&["verify"])), 2);
    assert_eq!(code(&steiner(&["--help"])), 0);
    assert_eq!(code(&steiner(&["verify", "steiner", "/nonexistent.json"])), 2);
}
