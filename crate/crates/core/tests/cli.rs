use std::process::Command;

use serde_json::Value;

fn atn(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_atn")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout).to_string();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, String::from_utf8_lossy(&out.stderr).to_string())
}

fn statuses(v: &Value) -> Vec<(String, String)> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["id"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn verify_cocycle_builtin() {
    let (code, v, _) = atn(&["verify", "cocycle", "--group", "Z2xZ2", "--builtin", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["checks"][0]["checked"], 1024);
}

#[test]
fn tnu_exhaustive() {
    let (code, v, _) = atn(&["verify", "tnu", "--group", "Z2xZ2", "--builtin", "1,1", "--lattice", "2x2", "--exhaustive"]);
    assert_eq!(code, 0);
    assert!(statuses(&v).iter().all(|(_, s)| s == "pass"));
}

#[test]
fn classify_reports_unsolvable() {
    let (code, v, _) = atn(&["classify", "--group", "Z2xZ2", "--builtin", "1,0", "--gset", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["detail"]["verdict"], "unsolvable");
    let (_, v, _) = atn(&["classify", "--group", "Z2xZ2", "--builtin", "1,0", "--gset", "transitive:0,1"]);
    assert_eq!(v["checks"][0]["detail"]["solvable"], true);
    assert_eq!(v["checks"][1]["id"], "restriction");
    assert_eq!(v["checks"][1]["detail"]["is_cocycle"], true);
}

#[test]
fn cohomology_expectation() {
    let (code, _, _) = atn(&["verify", "cohomology", "--group", "Z2xZ2", "--degree", "4", "--expect", "2,2"]);
    assert_eq!(code, 0);
    let (code, v, _) = atn(&["verify", "cohomology", "--group", "Z2", "--degree", "4", "--expect", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
}

#[test]
fn spt_suites() {
    let (code, _, err) = atn(&["verify", "spt2d", "--group", "Z2", "--cocycle3", "carry:1", "--lattice", "2x4"]);
    assert_eq!(code, 0, "{err}");
    let (code, v, _) = atn(&["verify", "spt3d", "--group", "Z2xZ2", "--builtin", "0,1", "--global"]);
    assert_eq!(code, 0);
    assert!(statuses(&v).iter().any(|(id, _)| id == "global_symmetry_minimal"));
}

#[test]
fn cochain_and_gset_files() {
    let dir = tempfile::tempdir().unwrap();
    let w = atn::zxz_four_cocycle(1, 1);
    let wpath = dir.path().join("w.txt");
    std::fs::write(&wpath, w.to_text("Z2xZ2")).unwrap();
    let x = atn::phases_lambda::GSet::transitive(w.group(), &[0, 1]).unwrap();
    let xpath = dir.path().join("x.txt");
    std::fs::write(&xpath, x.to_text()).unwrap();
    let out = dir.path().join("r.json");
    let (code, _, err) = atn(&[
        "classify",
        "--group",
        "Z2xZ2",
        "--cocycle",
        wpath.to_str().unwrap(),
        "--gset",
        xpath.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["suite"], "classify");
}

#[test]
fn exit_codes() {
    assert_eq!(atn(&["verify", "bogus"]).0, 2);
    assert_eq!(atn(&["verify", "cocycle", "--group", "Q8"]).0, 2);
    assert_eq!(atn(&["verify", "cocycle", "--group", "Z2", "--builtin", "1,1"]).0, 2);
    let (code, v, _) = atn(&["verify", "cocycle", "--group", "Z2xZ2", "--cocycle", "zero"]);
    assert_eq!((code, v["passed"].as_bool()), (0, Some(true)));
}

#[test]
fn guard_override_skips() {
    let out = Command::new(env!("CARGO_BIN_EXE_atn"))
        .args(["verify", "spt3d", "--group", "Z2xZ2", "--builtin", "1,1"])
        .env("ATN_GUARD_OVERRIDE", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(statuses(&v).iter().any(|(_, s)| s == "skipped"));
}
