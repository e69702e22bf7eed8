use std::process::{Command, Output};

use serde_json::Value;

fn su11(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su11")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    su11(args).status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&su11(args))).expect("stdout is one JSON object")
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "--suite", "jacobi", "--samples", "200"], 0),
        (&["verify", "--suite", "thompson", "--samples", "200"], 1),
        (&["verify", "--suite", "bogus"], 2),
        (&["verify"], 2),
        (&["frobnicate"], 2),
        (&["map", "--which", "sym", "--point", "0,0,0"], 0),
        (&["map", "--which", "exp", "--point", "2,0,1"], 1),
        (&["map", "--which", "nope", "--point", "0,0,1"], 2),
        (&["map", "--which", "fr", "--point", "0,1"], 2),
        (&["map", "--which", "fr", "--point", "0,x,1"], 2),
        (&["spectrum", "--point", "1,0,0"], 0),
        (&["spectrum", "--point", "0.1,1,1"], 1),
        (&["spectrum", "--point", "-1,0,0"], 1),
        (&["--help"], 0),
    ];
    for (args, want) in cases {
        assert_eq!(code(args), *want, "su11 {}", args.join(" "));
    }
}

#[test]
fn failing_suite_still_emits_a_report() {
    let r = report(&["verify", "--suite", "thompson", "--samples", "200"]);
    assert_eq!(r["pass"], false);
    assert!(r["max_defect"].as_f64().unwrap() > r["tolerance"].as_f64().unwrap());
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["verify", "--suite", "dressing", "--samples", "300", "--seed", "7"];
    assert_eq!(without_time(report(&args)), without_time(report(&args)));
}

#[test]
fn json_file_matches_stdout_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = su11(&["verify", "--suite", "charts", "--samples", "100", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, stdout(&o));
    let v: Value = serde_json::from_str(&file).unwrap();
    for key in ["suite", "samples", "seed", "tolerance", "max_defect", "worst_point", "pass", "wall_time_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let back: su11_core::verify::VerificationReport = serde_json::from_str(&file).unwrap();
    assert_eq!(serde_json::to_value(&back).unwrap(), v);
}

#[test]
fn tolerance_flag_controls_the_verdict() {
    assert_eq!(code(&["verify", "--suite", "jacobi", "--samples", "100", "--tol", "1e-30"]), 1);
    assert_eq!(code(&["verify", "--suite", "jacobi", "--samples", "100", "--tol", "1e-9"]), 0);
}

#[test]
fn all_with_zero_samples_passes_trivially() {
    let r = report(&["verify", "--suite", "all", "--samples", "0"]);
    assert_eq!(r["pass"], true);
    assert_eq!(r["max_defect"].as_f64(), Some(0.0));
}

#[test]
fn map_examples() {
    let line = |args: &[&str]| -> Vec<f64> {
        let o = su11(args);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).lines().next().unwrap().split(' ').map(|s| s.parse().unwrap()).collect()
    };
    assert_eq!(line(&["map", "--which", "sym", "--point", "0,0,0"]), vec![0.0, 0.0, 1.0]);
    let l = line(&["map", "--which", "log", "--point", "0,0,2.718281828459045"]);
    assert!(l[0].abs() < 1e-15 && l[1].abs() < 1e-15 && (l[2] - 1.0).abs() < 1e-12);
    let f = line(&["map", "--which", "fr", "--point", "0,0,1"]);
    assert_eq!(f, vec![0.0, 0.0, std::f64::consts::E]);
    let n = line(&["map", "--which", "exp", "--point", "-0.3,0.2,1"]);
    assert!(n[0] < 0.0);
}

#[test]
fn gw_map_reports_conserved_lambda() {
    let o = su11(&["map", "--which", "gw", "--point", "0.5,-0.2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().nth(1).unwrap();
    let v: Vec<f64> = last.split(' ').skip(1).map(|s| s.parse().unwrap()).collect();
    assert_eq!(&last[..6], "lambda");
    assert!((v[0] - v[1]).abs() < 1e-9);
}

#[test]
fn spectrum_reports_delta_when_not_admissible() {
    let o = su11(&["spectrum", "--point", "0.1,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Δ = "));
    let ok = su11(&["spectrum", "--point", "1,0,0"]);
    assert_eq!(stdout(&ok).trim().parse::<f64>().unwrap(), 1.0);
}

#[test]
fn flow_table_rows_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let single = dir.path().join("one.csv");
    for p in [&a, &b] {
        let o = su11(&["flow", "--lambdas", "0.5,1,2", "--s", "0,0.5,1", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut rdr = csv::Reader::from_path(&a).unwrap();
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), su11_cli::CSV_HEADER.to_vec());
    assert_eq!(rdr.records().count(), 9);

    assert_eq!(code(&["flow", "--lambdas", "1", "--s", "0", "--out", single.to_str().unwrap()]), 0);
    let mut rdr = csv::Reader::from_path(&single).unwrap();
    let row: Vec<f64> = rdr.records().next().unwrap().unwrap().iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(&row[0..3], &row[3..6]);
    assert!(row[7] < 1e-3);
    assert!(std::fs::metadata(&single).unwrap().len() < std::fs::metadata(&a).unwrap().len());
}

#[test]
fn flow_rejects_bad_grids_and_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    assert_eq!(code(&["flow", "--lambdas", "-1", "--s", "0", "--out", out.to_str().unwrap()]), 1);
    assert_eq!(code(&["flow", "--lambdas", "1", "--s", "0", "--out", "/nonexistent/dir/x.csv"]), 1);
    assert_eq!(code(&["flow", "--lambdas", "1", "--out", out.to_str().unwrap()]), 2);
}

#[test]
fn in_process_runner_matches_the_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let c = su11_cli::run(["su11", "map", "--which", "fr", "--point", "0,0,1"], &mut out, &mut err);
    assert_eq!(c, 0);
    assert_eq!(String::from_utf8(out).unwrap(), stdout(&su11(&["map", "--which", "fr", "--point", "0,0,1"])));
}
