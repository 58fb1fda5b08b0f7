use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_modulilab"));
    cmd.args(args).env_remove("MODULILAB_SEED").env_remove("MODULILAB_VERIFY_BREAK");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_six_nodes() {
    let o = run(&["classify", "--gcoeffs", "0,0,1,1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"stratum\":\"SixA1\"}\n");
    assert_eq!(stdout(&run(&["classify", "--gcoeffs", "0,0,1,1"])), "stratum  SixA1\n");
}

#[test]
fn classify_other_inputs() {
    assert_eq!(json(&["classify", "--ecoeffs", "1,1,-1"])["stratum"], "CurvPlus");
    let v = json(&["classify", "--cpoint", "1,2,3,5"]);
    assert_eq!(v["gcoeffs"], serde_json::json!(["-165", "165", "1517", "173"]));
    assert_eq!(v["stratum"], "TwoA1");
    assert_eq!(json(&["classify", "--gcoeffs", "1/2,-1/2,1,1"])["stratum"], "FourA1");
    assert_eq!(json(&["classify", "--gcoeffs", "1,-1,1,2"])["stratum"], "Curv");
}

#[test]
fn quotient_of_reducible_point() {
    assert_eq!(stdout(&run(&["quotient", "--gcoeffs", "1,-1,1,1", "--json"])), "{\"wpoint\":[\"2\",\"2\",\"0\",\"0\"]}\n");
}

#[test]
fn invariants_numeric_and_symbolic() {
    let v = json(&["invariants", "--gcoeffs", "0,0,1,1"]);
    assert_eq!(v["H"], "1");
    let s = json(&["invariants", "--symbolic"]);
    assert_eq!(s["H"].as_str().unwrap().matches('/').count(), 4);
}

#[test]
fn orbit_and_stabilizer() {
    let o = json(&["orbit", "--gcoeffs", "0,0,0,1"]);
    assert_eq!(o["size"], 12);
    let s = json(&["stabilizer", "--gcoeffs", "0,0,0,1"]);
    assert_eq!(s["order"], 48);
    assert_eq!(s["elements"].as_array().unwrap().len(), 48);
}

#[test]
fn oracle_counts() {
    let v = json(&["oracle-count", "--gcoeffs", "0,0,1,1", "--prime", "7"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["reduced_stratum"], "SixA1");
    let all = json(&["oracle-count", "--ecoeffs", "2,3,5"]);
    let counts: Vec<u64> = all.as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [14, 16]);
}

#[test]
fn beta_presets() {
    let e = json(&["beta", "--preset", "divisor-E"]);
    assert_eq!((e["s_value"].as_str(), e["beta"].as_str()), (Some("5/6"), Some("7/6")));
    assert_eq!(json(&["beta", "--preset", "nemuro"])["delta_bound"], "16/15");
    assert_eq!(json(&["beta", "--preset", "delta-sextic-dP"])["constant"], "1");
    assert_eq!(run(&["beta", "--preset", "unknown"]).status.code(), Some(2));
}

#[test]
fn fan_checks() {
    let v = json(&["fan"]);
    assert_eq!(v["complete"], true);
    assert_eq!(v["multiplicities"], serde_json::json!([3, 2, 1, 6, 4, 3]));
    assert_eq!(v["star_subdivision"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["nonsense"][..],
        &["classify"],
        &["classify", "--gcoeffs", "1,2,3"],
        &["classify", "--gcoeffs", "0,0,0,0"],
        &["classify", "--gcoeffs", "1,2", "--ecoeffs", "1,2,3"],
        &["oracle-count", "--gcoeffs", "1,2,3,5", "--prime", "9"],
        &["verify", "--suite", "everything"],
        &["strata-scan", "--plane", "a+e=0"],
        &["quotient", "--gcoeffs", "1,2,3,5", "--primes", "4"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(run_env(&["verify", "--suite", "fan"], &[("MODULILAB_SEED", "abc")]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_propagates_failure() {
    let ok = run(&["verify", "--suite", "all"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let broken = run_env(&["verify", "--suite", "all", "--json"], &[("MODULILAB_VERIFY_BREAK", "segre")]);
    assert_eq!(broken.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&broken)).unwrap();
    let failed: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["segre"]);
}

#[test]
fn verify_with_cpoint_and_seed() {
    let v = json(&["verify", "--suite", "appendix", "--cpoint", "3,2,1,2"]);
    let row = v.as_array().unwrap().iter().find(|r| r["check"] == "cpoint").unwrap().clone();
    assert!(row["detail"].as_str().unwrap().ends_with("SixA1"));
    let seeded = run_env(&["verify", "--suite", "appendix", "--json"], &[("MODULILAB_SEED", "7")]);
    assert!(stdout(&seeded).contains("seed 7"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["verify", "--suite", "appendix", "--json"][..], &["orbit", "--gcoeffs", "1,2,3,5", "--json"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn strata_scan_csv() {
    let o = run(&["strata-scan"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,c,d,stratum"));
    assert_eq!(lines.count(), 21 * 21 * 21 - 1);
    assert!(out.contains("\n0,0,1,1,SixA1\n"));
    let small = stdout(&run(&["strata-scan", "--plane", "d=0", "--step", "1", "--bound", "1"]));
    assert_eq!(small.lines().count(), 27);
}

#[test]
fn timings_go_to_stderr() {
    let o = run(&["classify", "--gcoeffs", "0,0,1,1", "--json", "--timings"]);
    assert_eq!(stdout(&o), "{\"stratum\":\"SixA1\"}\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));
}

#[test]
fn classify_details() {
    let v = json(&["classify", "--gcoeffs", "0,0,1,1", "--details"]);
    let pts = v["singular_points"].as_array().unwrap();
    assert_eq!(pts.len(), 6);
    assert!(pts.iter().all(|p| p["singular"] == true));
    assert_eq!(v["model"].as_array().unwrap().len(), 3);
    let none = json(&["classify", "--gcoeffs", "1,2,3,5", "--details"]);
    assert!(none.get("singular_points").is_none());
    let c = json(&["classify", "--cpoint", "1,2,3,5", "--details"]);
    assert_eq!(c["discriminants"], serde_json::json!(["165", "845", "168"]));
    assert_eq!(c["lines"].as_array().unwrap().len(), 4);
    let e = json(&["classify", "--ecoeffs", "1,1,2", "--details"]);
    assert_eq!(e["stratum"], "TwoA1Plus");
    assert_eq!(e["singular_points"].as_array().unwrap().len(), 2);
    assert!(e["singular_points"].as_array().unwrap().iter().all(|p| p["singular"] == true));
}
