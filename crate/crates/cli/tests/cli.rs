use std::process::{Command, Output};

use qpartitions::theta::SeriesName;

fn qpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpart"))
        .args(args)
        .env_remove("QPART_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_plain_lines() {
    let o = qpart(&["expand", "--series", "w_t", "--t", "4", "--precision", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "3: 20"));

    let o = qpart(&["expand", "--series", "f", "--k", "1", "--precision", "3"]);
    assert_eq!(stdout(&o), "0: 1\n1: -1\n2: -1\n");
}

#[test]
fn expand_d_nonzeros() {
    let o = qpart(&["expand", "--series", "d", "--precision", "15", "--format", "csv"]);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let nonzero: Vec<usize> = r
        .records()
        .map(|rec| rec.unwrap())
        .filter(|rec| &rec[1] != "0")
        .map(|rec| rec[0].parse().unwrap())
        .collect();
    assert_eq!(nonzero, vec![0, 2, 4, 10, 14]);
}

#[test]
fn expand_matches_library() {
    let o = qpart(&["expand", "--series", "a2", "--precision", "300", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lib = SeriesName::A2.build(300).unwrap().to_decimal_strings();
    let cli: Vec<String> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    assert_eq!(cli, lib);
}

#[test]
fn expand_dissection() {
    let o = qpart(&["expand", "--series", "p", "--precision", "20", "--dissect", "5,4"]);
    assert_eq!(stdout(&o), "0: 5\n1: 30\n2: 135\n3: 490\n");
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qpart"))
        .args(["expand", "--series", "psi"])
        .env("QPART_PRECISION", "7")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn ranktable_reproduces_the_28_rows() {
    let o = qpart(&["ranktable", "--family", "V", "--t", "4", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 28);
    assert_eq!(v["summary"]["classes"], serde_json::json!(["4", "4", "4", "4", "4"]));
    assert_eq!(v["summary"]["total"], "20");
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["components"] == "[];[];[];[3];[];[];[]"
        && r["weight"] == 1
        && r["statistic"] == 2));
    assert!(rows.iter().any(|r| r["components"] == "[2];[1];[];[];[];[];[]"
        && r["weight"] == -1
        && r["statistic"] == 1));
}

#[test]
fn ranktable_csv_quotes_components() {
    let o = qpart(&["ranktable", "--family", "V", "--t", "4", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "n,family,t,components,weight,statistic");
    assert!(text.contains("\"[];[];[];[1];[1,1];[];[]\""));
    assert_eq!(text.lines().count(), 29);
}

#[test]
fn ranktable_small_cases() {
    let o = qpart(&["ranktable", "--family", "W2", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut stats: Vec<i64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["statistic"].as_i64().unwrap())
        .collect();
    stats.sort();
    assert_eq!(stats, vec![-2, -1, 1, 2]);

    let o = qpart(&["ranktable", "--family", "V", "--t", "4", "--n", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0]["weight"].as_i64(), rows[0]["statistic"].as_i64()), (Some(1), Some(0)));
}

#[test]
fn ranktable_guardrail() {
    let o = qpart(&["ranktable", "--family", "V", "--t", "1", "--n", "30"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guardrail"));
}

#[test]
fn cranktable_routes_agree() {
    let gf = qpart(&["cranktable", "--family", "W2", "--n-max", "8", "--format", "csv"]);
    let en = qpart(&["cranktable", "--family", "W2", "--n-max", "8", "--format", "csv", "--enumerate"]);
    assert!(gf.status.success());
    assert_eq!(gf.stdout, en.stdout);
    assert!(stdout(&gf).starts_with("n,family,t,statistic,count\n0,W2,2,0,1\n"));
}

#[test]
fn suite_filter_and_starved_precision() {
    let o = qpart(&["suite", "--precision", "10", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 20);
    assert!(reports.iter().all(|r| r["status"] != "pass"));

    let o = qpart(&["suite", "--precision", "200", "--filter", "mod5", "--no-timings"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for r in v.as_array().unwrap() {
        let id = r["id"].as_str().unwrap();
        assert!(id.contains("mod5") || id.contains("equidistribution"), "{id}");
    }
}

#[test]
fn suite_output_is_byte_stable() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("qpart-a-{}.json", std::process::id()));
    let b = dir.join(format!("qpart-b-{}.json", std::process::id()));
    for p in [&a, &b] {
        let o = qpart(&["suite", "--precision", "600", "--filter", "mod4", "--no-timings", "-o", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn verify_by_id_and_controls() {
    let o = qpart(&["verify", "--id", "w2-7n4-mod7", "--precision", "800"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qpart(&["verify", "--controls", "--id", "control-w2-7n3-mod7", "--precision", "800"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["counterexample"]["index"].as_u64().is_some());
    let o = qpart(&["verify", "--id", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qpart(&["verify", "--list"]);
    assert!(stdout(&o).lines().count() >= 20);
}

#[test]
fn sweep_reports_counterexample() {
    let o = qpart(&[
        "sweep", "--series", "w_t", "--t", "4", "--progression", "5,1", "--modulus", "5",
        "--n-max", "20", "--precision", "200",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["counterexample"]["values"][0], "4");

    let o = qpart(&[
        "sweep", "--series", "c_t", "--t", "5", "--progression", "5,3", "--zero", "--n-max", "30",
        "--precision", "200",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qpart(&["expand", "--series", "nonsense"]).status.code(), Some(2));
    assert_eq!(qpart(&["expand", "--series", "w_t"]).status.code(), Some(2));
    assert_eq!(qpart(&["expand"]).status.code(), Some(2));
    assert_eq!(qpart(&["sweep", "--series", "p", "--progression", "5", "--zero", "--n-max", "1"]).status.code(), Some(2));
    assert_eq!(qpart(&["expand", "--series", "p", "--dissect", "3,5", "--precision", "10"]).status.code(), Some(2));
}

#[test]
fn write_failure_exits_3() {
    let o = qpart(&["expand", "--series", "p", "--precision", "3", "-o", "/nonexistent-dir/x.txt"]);
    assert_eq!(o.status.code(), Some(3));
}
