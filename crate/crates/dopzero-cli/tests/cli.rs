//! End-to-end checks of the binary: flag surface, exit codes, CSV/JSON
//! shapes and run-to-run determinism.

use std::process::{Command, Output};

fn dopzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dopzero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dopzero_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dopzero"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn eval_exact_examples() {
    let out = dopzero(&[
        "eval", "--family", "krawtchouk", "--n", "1", "--p", "1/2", "--M", "4", "--x", "2",
        "--exact",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    let out = dopzero(&[
        "eval", "--family", "meixner", "--n", "0", "--beta", "-5", "--c", "-1", "--x", "7/3",
        "--exact",
    ]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = dopzero(&[
        "eval", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--M", "2", "--x", "0",
        "--exact",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn eval_float_mode_and_decimal_flags() {
    // decimal strings are exact: 0.5 is 1/2
    let out = dopzero(&[
        "eval", "--family", "krawtchouk", "--n", "2", "--p", "0.5", "--M", "2", "--x", "1/2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-1");
}

#[test]
fn eval_float_overflow_exits_1() {
    // exact value exists but exceeds the double range without --exact
    let big = format!("1{}", "0".repeat(200));
    let out = dopzero(&[
        "eval", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--M", "7/2", "--x", &big,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("double"));
}

#[test]
fn zeros_csv_shape_and_determinism() {
    let args = [
        "zeros", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--M", "2",
    ];
    let out = dopzero(&args);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,zero,bracket_lo,bracket_hi,lemma1_sign");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1,0.29289321881"));
    assert!(lines[2].starts_with("2,1.70710678118"));
    // bit-identical on a second run
    let again = dopzero(&args);
    assert_eq!(text, stdout(&again));
}

#[test]
fn zeros_json_stable_key_order() {
    let out = dopzero(&[
        "zeros", "--family", "meixner", "--n", "2", "--beta", "-5", "--c", "-1", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let spec_at = text.find("\"spec\"").unwrap();
    let method_at = text.find("\"method\"").unwrap();
    let zeros_at = text.find("\"zeros\"").unwrap();
    let checks_at = text.find("\"checks\"").unwrap();
    assert!(spec_at < method_at && method_at < zeros_at && zeros_at < checks_at);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let zeros = doc["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 2);
    for z in zeros {
        let v = z["zero"].as_f64().unwrap();
        assert!(v > 0.0 && v < 5.0);
        assert_eq!(z["lemma1_sign"].as_i64(), Some(-1));
    }
    assert_eq!(doc["checks"]["jacobi"].as_array().unwrap().len(), 2);
}

#[test]
fn zeros_regime_violation_names_the_condition() {
    let out = dopzero(&[
        "zeros", "--family", "meixner", "--n", "2", "--beta", "0.5", "--c", "-1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("requires c<0 and beta<1-n"));
}

#[test]
fn malformed_flags_exit_2() {
    let out = dopzero(&["eval", "--family", "krawtchouk", "--n", "1", "--x", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dopzero(&["eval", "--family", "nosuch", "--n", "1", "--x", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dopzero(&[
        "eval", "--family", "meixner", "--n", "1", "--beta", "1/0", "--c", "-1", "--x", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_pfaff_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "pfaff", "--seed", "7", "--cases", "40"];
    let out = dopzero(&args);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["suite"], "pfaff");
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["failed"], 0);
    assert_eq!(text, stdout(&dopzero(&args)));
}

#[test]
fn verify_variation_profile_example() {
    let out = dopzero(&[
        "verify", "--suite", "variation", "--n", "3", "--p", "1/2", "--from", "3.05", "--to",
        "5", "--step", "0.05",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["failed"], 0);
    // 40 gamma samples plus one constancy record per unit interval
    assert_eq!(doc["checks"].as_array().unwrap().len(), 42);
}

#[test]
fn verify_interlacing_example() {
    let out = dopzero(&[
        "verify", "--suite", "interlacing", "--p", "1/2", "--N", "6",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["failed"], 0);
}

#[test]
fn sweep_rows_and_empty_range() {
    let out = dopzero(&[
        "sweep", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--param", "M", "--from",
        "2.1", "--to", "4.0", "--step", "0.1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "param,value,in_bounds,variations,zeros");
    assert_eq!(lines.len(), 21, "20 sample rows plus header");
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[2], "true");
        let zeros: Vec<f64> = fields[4]
            .split(';')
            .map(|z| z.parse().unwrap())
            .collect();
        let m: f64 = fields[1].parse().unwrap();
        assert_eq!(zeros.len(), 2);
        assert!(zeros.iter().all(|z| *z > 0.0 && *z < m));
    }

    let out = dopzero(&[
        "sweep", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--param", "M", "--from",
        "5", "--to", "4", "--step", "1",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1, "empty range emits header only");
}

#[test]
fn sweep_marks_out_of_regime_rows() {
    let out = dopzero(&[
        "sweep", "--family", "meixner", "--n", "2", "--beta", "-5", "--param", "c", "--from",
        "-2", "--to", "0.5", "--step", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // c = -2, -1 in regime; c = 0 is an excluded parameter value
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("c,-2,true"));
    assert!(lines[2].starts_with("c,-1,true"));
    assert!(lines[3].starts_with("c,0,false,,"));
    // in-regime zeros stay inside (0, -beta) = (0, 5)
    for row in &lines[1..3] {
        let zeros = row.rsplit(',').next().unwrap();
        for z in zeros.split(';') {
            let z: f64 = z.parse().unwrap();
            assert!(z > 0.0 && z < 5.0);
        }
    }
}

#[test]
fn mesh_guard_env_override() {
    let out = dopzero_env(
        &[
            "zeros", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--M", "6",
            "--method", "sturm",
        ],
        "DOPZERO_MAX_MESH",
        "3",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("jacobi"));

    let out = dopzero_env(
        &[
            "zeros", "--family", "krawtchouk", "--n", "2", "--p", "1/2", "--M", "6",
            "--method", "sturm",
        ],
        "DOPZERO_MAX_MESH",
        "not-a-number",
    );
    assert_eq!(out.status.code(), Some(2));
}
