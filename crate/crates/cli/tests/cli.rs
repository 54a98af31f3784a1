use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).env_remove("LEFSCHETZ_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (serde_json::from_slice(&o.stdout).unwrap(), o.status.code().unwrap())
}

fn triples(v: &Value) -> Vec<(i64, i64, i64)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|t| (t["a1"].as_i64().unwrap(), t["a2"].as_i64().unwrap(), t["a3"].as_i64().unwrap()))
        .collect()
}

#[test]
fn colon_gens_small_case() {
    let o = run(&["colon-gens", "--d1", "2", "--d2", "2", "--a", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("q1 = x - y"), "{out}");
    assert!(out.contains("q2 = y^2"), "{out}");

    let (v, code) = json(&["colon-gens", "--d1", "2", "--d2", "2", "--a", "1"]);
    assert_eq!(code, 0);
    for k in ["regime", "q1", "q2", "degrees", "degree_law_ok"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["q1"], serde_json::json!([{"x": 1, "y": 0, "coeff": "1"}, {"x": 0, "y": 1, "coeff": "-1"}]));
    assert_eq!(v["degrees"], serde_json::json!([1, 2]));
    assert_eq!(v["degree_law_ok"], true);
}

#[test]
fn colon_gens_unit_ideal() {
    let o = run(&["colon-gens", "--d1", "2", "--d2", "2", "--a", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("unit ideal"));
    let (v, _) = json(&["colon-gens", "--d1", "2", "--d2", "2", "--a", "3"]);
    assert_eq!(v["regime"], "unit_ideal");
    assert_eq!(v["degrees"], Value::Null);
    assert_eq!(v["q2"], serde_json::json!([]));
}

#[test]
fn verify_small_grid() {
    let o = run(&["verify", "--d1-max", "6", "--d2-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() > 50);
    assert!(!out.contains("FAIL"));
    let (v, code) = json(&["--jobs", "1", "verify", "--d1-max", "5", "--d2-max", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["first_counterexample"], Value::Null);
}

#[test]
fn wlp_rogue_cases() {
    let o = run(&["wlp", "--a1", "3", "--a2", "7", "--a3", "14", "--t", "9", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("determinant: fails") && out.contains("direct rank: fails") && out.contains("agree"), "{out}");

    let (v, _) = json(&["wlp", "--a1", "2", "--a2", "9", "--a3", "13", "--t", "9"]);
    assert_eq!(v["det"]["holds"], false);
    assert_eq!(v["det"]["determinant"], "0");
    assert_eq!(v["direct"]["holds"], false);
}

#[test]
fn wlp_empty_system() {
    let (v, code) = json(&["wlp", "--a1", "1", "--a2", "1", "--a3", "4", "--t", "2", "--method", "det"]);
    assert_eq!(code, 0);
    assert_eq!(v["det"]["holds"], true);
    assert_eq!(v["det"]["short_circuit"], true);
    assert_eq!(v["direct"], Value::Null);
}

#[test]
fn wlp_reports_the_violated_hypothesis() {
    for (args, needle) in [
        (["--a1", "1", "--a2", "1", "--a3", "2", "--t", "5"], "divisible by 3"),
        (["--a1", "1", "--a2", "1", "--a3", "7", "--t", "5"], "2(a1 + a2)"),
        (["--a1", "1", "--a2", "7", "--a3", "1", "--t", "5"], "max(a1, a2)"),
        (["--a1", "3", "--a2", "7", "--a3", "14", "--t", "7"], "t >= s/3"),
    ] {
        let mut all = vec!["wlp"];
        all.extend_from_slice(&args);
        let o = run(&all);
        assert_eq!(o.status.code(), Some(64));
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.contains(needle), "{err}");
    }
}

#[test]
fn det_poly_odd_and_even() {
    let (v, code) = json(&["det-poly", "--a1", "3", "--a2", "7", "--a3", "14", "--parity", "odd", "--root-lo", "8", "--root-hi", "99"]);
    assert_eq!(code, 0);
    for k in ["parity", "degree", "coefficients", "roots", "verified"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["roots"], serde_json::json!([9]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["parity"], "odd");
    let c = v["coefficients"].as_array().unwrap();
    assert!(c.iter().all(|t| t["exp"].is_u64() && t["coeff"].is_string()));
    assert_eq!(c.last().unwrap()["exp"], v["degree"]);

    let (v, code) = json(&["det-poly", "--a1", "3", "--a2", "7", "--a3", "14", "--parity", "even", "--root-lo", "8", "--root-hi", "99"]);
    assert_eq!(code, 0);
    assert_eq!(v["roots"], serde_json::json!([]));
}

#[test]
fn conjecture_scan_levels() {
    let (v, code) = json(&["conjecture-scan", "--a", "2"]);
    assert_eq!(code, 0);
    let level = &v["levels"][0];
    assert_eq!(triples(&level["solutions"]), vec![(1, 4, 4), (3, 7, 14)]);
    assert_eq!(level["a1_eq_a2_family"], false);
    assert_eq!(level["pattern_holds"], true);

    let (v, _) = json(&["conjecture-scan", "--a", "3"]);
    let level = &v["levels"][0];
    assert_eq!(triples(&level["solutions"]), vec![(1, 7, 7), (2, 9, 13)]);
    assert_eq!(level["a1_eq_a2_family"], true);

    let (v, _) = json(&["conjecture-scan", "--a", "1"]);
    let level = &v["levels"][0];
    assert_eq!(triples(&level["solutions"]), vec![]);
    assert_eq!(level["a1_eq_a2_family"], true);

    let (v, _) = json(&["conjecture-scan"]);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 6);
    assert!(levels.iter().all(|l| l["new_solutions"] == 0 && l["pattern_holds"] == true));
}

#[test]
fn hilbert_table() {
    let (v, code) = json(&["hilbert", "--d1", "3", "--d2", "5", "--a", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["values"], serde_json::json!([1, 2, 3, 3, 3, 2, 1]));
    assert_eq!(v["injectivity"]["closed_form"], 4);
    assert_eq!(v["injectivity"]["by_hilbert_function"], 4);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let cases: [&[&str]; 3] = [
        &["--format", "json", "conjecture-scan", "--a", "3"],
        &["--format", "json", "verify", "--d1-max", "5", "--d2-max", "5"],
        &["--format", "json", "det-poly", "--a1", "2", "--a2", "4", "--a3", "6", "--parity", "odd"],
    ];
    for args in cases {
        let first = run(args).stdout;
        assert_eq!(run(args).stdout, first);
        let mut one = vec!["--jobs", "1"];
        one.extend_from_slice(args);
        assert_eq!(run(&one).stdout, first);
        let env = Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).env("LEFSCHETZ_JOBS", "2").output().unwrap();
        assert!(env.status.success());
        assert_eq!(env.stdout, first);
    }
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["frobnicate"][..],
        &["wlp", "--a1", "1"],
        &["--format", "yaml", "hilbert", "--d1", "2", "--d2", "2"],
        &["--jobs", "0", "hilbert", "--d1", "2", "--d2", "2"],
        &["colon-gens", "--d1", "1", "--d2", "2", "--a", "1"],
        &["conjecture-scan", "--a", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(64), "{args:?}");
    }
    let bad_env = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["hilbert", "--d1", "2", "--d2", "2"])
        .env("LEFSCHETZ_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn progress_goes_to_stderr() {
    let o = run(&["--format", "json", "conjecture-scan", "--a", "1"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("level 1"));
    serde_json::from_slice::<Value>(&o.stdout).unwrap();
}
