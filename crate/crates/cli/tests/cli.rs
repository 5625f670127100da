use std::process::{Command, Output};

fn rhodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = rhodes(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn build_sizes() {
    let v = json(&["build", "rhodes-hat", "--n", "2", "--group", "Z2"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["size"], 7);
    assert_eq!(v["top_adjoined"], true);
    assert_eq!(json(&["build", "dowling", "--n", "2", "--group", "1"])["size"], 5);
    assert_eq!(json(&["build", "Ln", "--n", "3"])["size"], 7);
    assert_eq!(json(&["build", "partition", "--n", "4"])["size"], 15);
    let r = json(&["build", "rhodes", "--n", "2", "--group", "Z2"]);
    assert_eq!(r["is_lattice"], false);
    assert!(r["no_join_witness"].is_array());
}

#[test]
fn dot_output() {
    let o = rhodes(&["build", "powerset", "--n", "2", "--format", "dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches("->").count(), 4);
}

#[test]
fn counts() {
    let v = json(&["count", "bases", "--complex", "lift", "--n", "3", "--group", "Z2", "--format", "json"]);
    assert_eq!(v["oracle"], 16);
    assert_eq!(v["closed_formula"], "28");
    assert_eq!(v["corrected_formula"], "16");
    assert_eq!(v["closed_formula_over_oracle"], "7/4");
    let v = json(&["count", "bases", "--complex", "H", "--n", "3", "--group", "1", "--format", "json"]);
    assert_eq!((v["oracle"].as_u64(), v["rank"].as_u64()), (Some(3), Some(5)));
    let v = json(&["count", "flats", "--complex", "uniform", "--k", "2", "--n", "2", "--format", "json"]);
    assert_eq!(v["oracle"], 4);
}

#[test]
fn verify_exit_codes() {
    for args in [
        &["verify", "rhodes-lift", "--n", "3", "--group", "Z3"][..],
        &["verify", "mindeg", "--n", "3"],
        &["verify", "wreath", "--n", "2", "--group", "Z2"],
    ] {
        let o = rhodes(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(": pass"));
    }
    let v = json(&["verify", "facets", "--format", "json"]);
    assert_eq!(v["criterion"], 9);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
    assert_eq!(rhodes(&["verify", "no-such-suite"]).status.code(), Some(3));
}

#[test]
fn error_exit_codes() {
    assert_eq!(rhodes(&["build", "dowling", "--group", "Q8"]).status.code(), Some(3));
    assert_eq!(rhodes(&["build", "dowling", "--n", "4", "--group", "Z3"]).status.code(), Some(2));
    assert_eq!(rhodes(&["build", "dowling", "--n", "3", "--group", "Z3", "--bound", "8"]).status.code(), Some(2));
    assert_eq!(rhodes(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(rhodes(&["build", "Ln", "--format", "csv"]).status.code(), Some(3));
    assert_eq!(rhodes(&["--help"]).status.code(), Some(0));
}

#[test]
fn represent_ln_matrix() {
    let o = rhodes(&["represent", "--lattice", "Ln", "--n", "3"]);
    assert!(o.status.success());
    let rows: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(rows, ["111111", "011111", "001111", "000101", "000110"]);
    let v = json(&["represent", "--lattice", "Ln", "--n", "3", "--group", "Z2", "--format", "json"]);
    assert_eq!(v["columns"].as_array().unwrap().len(), 3 + 3 * 2);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn exports() {
    let v = json(&["export", "H", "--n", "2", "--group", "Z2"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["ground"].as_array().unwrap().len(), 4);
    let o = rhodes(&["export", "delta", "--n", "3", "--group", "Z2"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    let g = json(&["export", "group", "--group", "S3"]);
    assert_eq!(g["table"].as_array().unwrap().len(), 6);
    let dir = std::env::temp_dir().join(format!("rhodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let o = rhodes(&["export", "M", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"facets\""));
    std::fs::remove_dir_all(&dir).unwrap();
}
