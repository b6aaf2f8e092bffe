use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bverify"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_shipped_configs() {
    for name in ["gr4", "qp", "ns"] {
        let o = bin(&["validate", &format!("configs/{name}.json")]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("ok: "));
    }
    let o = bin(&["validate", "configs/gr4.json"]);
    assert!(stdout(&o).contains("4 generators, 2 maps"));
}

#[test]
fn validation_error_exits_two() {
    let o = bin(&["validate", "tests/fixtures/exit2.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bicharacter[0][0]"));
    let o = bin(&["validate", "tests/fixtures/does-not-exist.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn run_writes_report_to_stdout() {
    let o = bin(&["run", "tests/fixtures/exit0.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["exit_code"], 0);
    assert!(report["config_digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(report["suites"][0].get("timing_ms").is_none());
}

#[test]
fn ns_run_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out: PathBuf = dir.path().join("ns.json");
    let o = bin(&["run", "configs/ns.json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let suite = &report["suites"][0];
    assert_eq!(suite["status"], "fails");
    assert_eq!(suite["failures"][0]["inputs"], serde_json::json!(["x", "y"]));
    assert_eq!(suite["failures"][0]["lhs"], "x*y");
    assert_eq!(suite["failures"][0]["rhs"], "(q)*x*y");
}

#[test]
fn suite_filter_and_bound_override() {
    let o = bin(&["run", "configs/gr4.json", "--suite", "lemma32", "--max-len", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let suites = report["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    for s in suites {
        assert_eq!(s["suite"], "lemma32");
        assert_eq!(s["bounds"]["per_arg"], 2);
        assert_eq!(s["status"], "holds");
    }
    // a suite absent from the configuration runs against every map
    let o = bin(&["run", "configs/qp.json", "--suite", "lemma31"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suites"].as_array().unwrap().len(), 1);
    let o = bin(&["run", "configs/qp.json", "--suite", "leibniz_right"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suites"].as_array().unwrap().len(), 3);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn unknown_suite_exits_two() {
    let o = bin(&["run", "configs/gr4.json", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_command() {
    let o = bin(&["search", "--group", "Z2", "--predicate", "chi_ee=-1", "--e", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[1..], ["[[-1]]".to_string()]);
    assert!(lines[0].contains("matches: 1"));

    let o = bin(&["search", "--group", "Z3", "--predicate", "chi_ee=-1", "--e", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).contains("matches: 0"));

    let o = bin(&["search", "--group", "Z0", "--predicate", "symmetric"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin(&["search", "--group", "Z2", "--predicate", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin(&["search", "--group", "Z2xZ2", "--predicate", "symmetric"]);
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["--version"]).status.code(), Some(0));
}
