use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hopflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopflab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_reports_and_exit_codes() {
    let o = hopflab(&["--json", "validate", "catalog:h4"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], "hopflab-report/1");
    assert_eq!(v["passed"], true);

    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"field\": \"Q\",\n  \"dim\": }").unwrap();
    let o = hopflab(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(code(&hopflab(&["validate", "catalog:nope"])), 2);
    assert_eq!(code(&hopflab(&["no-such-command"])), 2);
}

#[test]
fn corrupted_antipode_exits_one_with_witness() {
    let out = scratch("h4.json");
    assert_eq!(code(&hopflab(&["catalog", "export", "h4", "-o", out.to_str().unwrap()])), 0);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    doc["antipode"][2] = serde_json::json!(["0", "0", "1", "0"]);
    std::fs::write(&out, doc.to_string()).unwrap();
    let o = hopflab(&["--json", "validate", out.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "antipode").unwrap();
    assert_eq!(check["witness"], serde_json::json!([2]));
}

#[test]
fn exported_cocycle_deforms_through_files() {
    let h = scratch("h4b.json");
    let s = scratch("sigma.json");
    let d = scratch("deformed.json");
    assert_eq!(code(&hopflab(&["catalog", "export", "h4", "-o", h.to_str().unwrap()])), 0);
    assert_eq!(code(&hopflab(&["catalog", "export", "sigma_t", "--param", "-1", "-o", s.to_str().unwrap()])), 0);
    assert_eq!(code(&hopflab(&["check-cocycle", s.to_str().unwrap()])), 0);
    let o = hopflab(&["deform", h.to_str().unwrap(), "--cocycle", s.to_str().unwrap(), "-o", d.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&hopflab(&["validate", d.to_str().unwrap()])), 0);
}

#[test]
fn structure_commands() {
    assert_eq!(code(&hopflab(&["check-cqt", "catalog:r_t:2"])), 0);
    assert_eq!(code(&hopflab(&["check-qt", "catalog:qt_t:-1"])), 0);
    assert_eq!(code(&hopflab(&["check-yd", "catalog:end_regular_t:1"])), 0);
    assert_eq!(code(&hopflab(&["azumaya", "catalog:end_regular_t:1"])), 0);
    assert_eq!(code(&hopflab(&["azumaya", "catalog:kc2_trivial_algebra"])), 1);
    let o = hopflab(&["--json", "wedge", "catalog:unit_object_h4", "catalog:unit_object_h4", "--cqt", "catalog:r_t:1"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&hopflab(&["galois", "catalog:unit_object_h4", "--cqt", "catalog:r_t:1"])), 0);
    assert_eq!(code(&hopflab(&["--field", "Fp:5", "check-cocycle", "catalog:sigma_t:3"])), 0);
}

#[test]
fn catalog_listing_and_suite() {
    let o = hopflab(&["--json", "catalog", "list"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o).to_string().contains("sigma_t"));
    let o = hopflab(&["--json", "suite", "--only", "1,2", "--t-values", "-1,0,1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], "hopflab-suite/1");
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
}

#[test]
fn every_exported_entry_validates() {
    for info in hopflab::catalog::ENTRIES {
        let path = scratch(&format!("export-{}.json", info.name));
        let p = path.to_str().unwrap();
        assert_eq!(code(&hopflab(&["catalog", "export", info.name, "--param", "2", "-o", p])), 0, "{}", info.name);
        let o = hopflab(&["validate", p]);
        assert_eq!(code(&o), 0, "{}: {}", info.name, String::from_utf8_lossy(&o.stdout));
    }
}
