use std::process::Command;

fn qforms(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qforms")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn mu_csv_rows() {
    let (code, out, _) = qforms(&["mu", "--s", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "l,mu\n2,\"3168\"\n3,\"-3600\"\n4,\"1764\"\n");
}

#[test]
fn mu_json_has_fractions_as_strings() {
    let (code, out, _) = qforms(&["mu", "--s", "6", "--verify-order", "20"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mu"][0]["value"], "49605048/343");
    assert_eq!(v["verified_order"], 20);
}

#[test]
fn rep_triangular_check() {
    let (code, out, _) = qforms(&["rep", "--kind", "triangular", "--s", "2", "--n-max", "1", "--check", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["count"], "1");
    assert_eq!(v[1]["count"], "16");
    assert_eq!(v[1]["oracle"], "16");
}

#[test]
fn verify_shuffle_exits_zero() {
    let (code, out, _) = qforms(&["verify", "--suite", "shuffle", "--order", "30"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    assert_eq!(reports.last().unwrap()["convention"], "ge1");
}

#[test]
fn verify_tolerance_override_can_fail() {
    let (code, out, _) = qforms(&["verify", "--suite", "transform", "--tol", "1e-20", "--format", "csv"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("identity,status,"));
    assert!(out.contains(",fail,"));
}

#[test]
fn byte_identical_reruns() {
    let args = ["expand", "--double", "oe", "--r", "2", "--s", "3", "--order", "15", "--format", "csv"];
    assert_eq!(qforms(&args), qforms(&args));
    let args = ["verify", "--suite", "summation", "--order", "16"];
    assert_eq!(qforms(&args), qforms(&args));
}

#[test]
fn timing_is_opt_in() {
    let (_, plain, _) = qforms(&["verify", "--suite", "summation", "--order", "10"]);
    let (_, timed, _) = qforms(&["verify", "--suite", "summation", "--order", "10", "--timing"]);
    assert!(!plain.contains("elapsed_ms"));
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("qforms-cli-{}.json", std::process::id()));
    let (code, out, _) = qforms(&["expand", "--series", "theta", "--order", "9", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let series = qforms::cli::series_from_json(&serde_json::from_str(&written).unwrap()).unwrap();
    assert_eq!(series, qforms::eisenstein::theta_unit(9).to_ext());
}

#[test]
fn usage_errors() {
    let (code, _, err) = qforms(&["rep", "--kind", "cubes", "--s", "2", "--n-max", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--kind"));
    let (code, _, err) = qforms(&["expand", "--double", "xx", "--r", "1", "--s", "1", "--order", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("xx"));
    let (code, _, _) = qforms(&["frobnicate"]);
    assert_eq!(code, 2);
}
