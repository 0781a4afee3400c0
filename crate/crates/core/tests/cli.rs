use std::process::{Command, Output};

use theta_core::cli::{ListRow, Report, SuiteResult, TOO_LARGE};

fn tool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-tool"))
        .args(args)
        .env_remove("THETA_TOOL_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> Report {
    let mut a = vec!["report"];
    a.extend_from_slice(args);
    a.extend_from_slice(&["--format", "json"]);
    let o = tool(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn ev_has_two_components() {
    let r = json_report(&["E", "7", "EV"]);
    assert_eq!(r.components.count, 2);
    assert_eq!(r.schema, 1);
    assert_eq!(r.codim, r.dims.a);
}

#[test]
fn split_a2_is_irreducible() {
    assert_eq!(json_report(&["A", "2", "AI"]).components.count, 1);
}

#[test]
fn g2_report() {
    let r = json_report(&["G", "2", "G"]);
    assert_eq!(r.degrees, vec![2, 6]);
    assert_eq!(r.weyl_order, 12);
    assert_eq!(r.poincare, Some(vec![1, 2, 2, 2, 2, 2, 1]));
    let text = stdout(&tool(&["report", "G", "2", "G"]));
    assert!(text.contains("1 + 2t + 2t^2"));
}

#[test]
fn json_round_trips() {
    let r = json_report(&["E", "6", "EII"]);
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["poincare"].as_array().unwrap().iter().all(|c| c.is_i64()));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_theta-tool"))
        .args(["report", "E", "7", "EV"])
        .env("THETA_TOOL_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(TOO_LARGE));
    let o = tool(&["report", "E", "8", "EVIII", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.poincare, None);
    assert_eq!(r.poincare_text, TOO_LARGE);
}

#[test]
fn usage_errors_exit_2() {
    let o = tool(&["report", "E", "7", "EXYZ"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("EVI") && err.contains("EVII"));
    assert_eq!(tool(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(tool(&["list", "B", "1"]).status.code(), Some(2));
    assert_eq!(tool(&[]).status.code(), Some(2));
    assert_eq!(tool(&["--help"]).status.code(), Some(0));
}

fn list(series: &str, rank: &str) -> Vec<ListRow> {
    let o = tool(&["list", series, rank, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn listings() {
    let e6 = list("E", "6");
    assert!(e6.iter().any(|r| r.quasi_split && !r.split && r.outer_diagram));
    let a1 = list("A", "1");
    assert_eq!(a1.len(), 1);
    assert_eq!(a1[0].label, "AI");
    let d4 = list("D", "4");
    assert!(d4.iter().any(|r| r.inner) && d4.iter().any(|r| !r.inner));
    let text = stdout(&tool(&["list", "D", "4"]));
    assert!(text.lines().count() == d4.len() + 1);
}

#[test]
fn verify_suites() {
    for suite in ["proposition", "w0"] {
        let o = tool(&["verify", suite, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let r: SuiteResult = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(r.passed);
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
    }
    let o = tool(&["verify", "centdim", "--seed", "42", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}
