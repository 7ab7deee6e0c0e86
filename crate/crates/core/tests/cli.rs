use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn wq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_wq")).args(args).current_dir(root()).output().expect("run wq")
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schemas/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn validate(v: &jsonschema::Validator, json: &str) {
    let inst: serde_json::Value = serde_json::from_str(json).unwrap();
    let errs: Vec<String> = v.iter_errors(&inst).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errs.is_empty(), "{:?}", errs);
}

#[test]
fn a1_all_passes_and_validates() {
    let out = wq(&["--config", "configs/a1.toml", "--command", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let json = String::from_utf8(out.stdout).unwrap();
    validate(&schema(), &json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["sections"].as_array().unwrap().len(), 6);
}

#[test]
fn every_command_validates() {
    let sch = schema();
    for cmd in ["root-system", "realization", "algebra-check", "rmatrix-check", "wq", "slice"] {
        let out = wq(&["--config", "configs/a2.toml", "--command", cmd]);
        validate(&sch, &String::from_utf8(out.stdout).unwrap());
    }
}

#[test]
fn a2_realization_reports_c_matrix() {
    let out = wq(&["--config", "configs/a2.toml", "--command", "realization"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = &v["sections"][0]["data"]["c"];
    assert_eq!(c, &serde_json::json!([["0", "1"], ["-1", "0"]]));
}

#[test]
fn a1_root_system_has_one_positive_root() {
    let out = wq(&["--config", "configs/a1.toml", "--command", "root-system", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("D = 1"));
}

#[test]
fn failing_check_sets_exit_code() {
    // the printed comultiplication conjugator fails on A2
    let out = wq(&["--config", "configs/a2.toml", "--command", "rmatrix-check"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_file_and_seed_override() {
    let dir = std::env::temp_dir().join(format!("wq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("r.json");
    let out = wq(&["--config", "configs/a1.toml", "--command", "root-system", "--seed", "99", "--out", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["config"]["seed"], 99);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn timing_is_opt_in() {
    let out = wq(&["--config", "configs/a1.toml", "--command", "root-system", "--timing"]);
    let json = String::from_utf8(out.stdout).unwrap();
    assert!(json.contains("elapsed_ms"));
    validate(&schema(), &json);
    let out = wq(&["--config", "configs/a1.toml", "--command", "root-system"]);
    assert!(!String::from_utf8(out.stdout).unwrap().contains("elapsed_ms"));
}

#[test]
fn config_errors_have_positions() {
    let dir = std::env::temp_dir().join(format!("wq-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("bad.toml");
    std::fs::write(&p, "type = \"A\"\nrank = 2\ns = [1, 2\n").unwrap();
    let out = wq(&["--config", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{}", err);
    std::fs::write(&p, "type = \"A\"\nrank = 2\ns = [4]\n").unwrap();
    let out = wq(&["--config", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`s`"));
    let out = wq(&["--config", "configs/a1.toml", "--command", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
