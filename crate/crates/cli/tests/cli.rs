use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_isospectra"))
        .args(args)
        .env("ISOSPECTRA_LOG", "off")
        .output()
        .expect("binary runs");
    let json = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exit code"), json)
}

fn pairs(v: &Value) -> Vec<[f64; 2]> {
    serde_json::from_value(v.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn zeros_of_small_examples() {
    let (code, r) = run(&["zeros", "--family", "ghyp", "-N", "1", "--alphas", "2", "--betas", "3"]);
    assert_eq!(code, 0);
    let z = pairs(&r["zeros"]);
    assert_eq!(z.len(), 1);
    assert!((z[0][0] - 2.0 / 3.0).abs() < 1e-15 && z[0][1].abs() < 1e-15);

    let (code, r) = run(&["zeros", "--family", "jacobi", "-N", "3", "--alphas", "0,0"]);
    assert_eq!(code, 0);
    let mut xs: Vec<f64> = pairs(&r["zeros"]).iter().map(|p| p[0]).collect();
    xs.sort_by(f64::total_cmp);
    let r35 = (3.0f64 / 5.0).sqrt();
    for (x, e) in xs.iter().zip([-r35, 0.0, r35]) {
        assert!((x - e).abs() < 1e-14, "{x} vs {e}");
    }
}

#[test]
fn invalid_parameters_exit_2() {
    let (code, r) = run(&["zeros", "--family", "ghyp", "-N", "2", "--alphas", "2", "--betas", "0"]);
    assert_eq!(code, 2);
    assert_eq!(r["exit_code"], 2);
    assert!(r["error"].is_string() && r["message"].is_string());

    let (code, _) =
        run(&["zeros", "--family", "gbasic", "-N", "2", "--alphas", "2", "--betas", "3", "--q", "1.0000000001"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["zeros", "--family", "hermite", "-N", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn repeated_zeros_exit_3() {
    let (code, r) = run(&["zeros", "--family", "wilson", "-N", "2", "--alphas=-2,-1.75,1.75,1.375"]);
    assert_eq!(code, 3);
    assert_eq!(r["error"], "repeated_zeros");
}

#[test]
fn matrix_of_degree_one_is_its_eigenvalue() {
    let (code, r) = run(&["matrix", "--family", "ghyp", "-N", "1", "--alphas", "2", "--betas", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["pass"], true);
    let m: Vec<Vec<[f64; 2]>> = serde_json::from_value(r["matrix"].clone()).unwrap();
    assert_eq!(m.len(), 1);
    assert!((m[0][0][0] - 3.0).abs() < 1e-13 && m[0][0][1].abs() < 1e-13);
}

#[test]
fn jacobi_reference_spectrum() {
    let (code, r) = run(&["matrix", "--family", "jacobi", "-N", "2", "--alphas", "0,0"]);
    assert_eq!(code, 0);
    let mut reference = pairs(&r["reference_spectrum"]);
    reference.sort_by(|a, b| a[0].total_cmp(&b[0]));
    assert_eq!(reference, vec![[1.0, 0.0], [4.0, 0.0]]);
    assert!(r["residuals"]["spectral"].as_f64().unwrap() < 1e-10);
}

#[test]
fn verify_reports_every_residual() {
    for args in [
        &["verify", "--family", "ghyp", "-N", "4", "--alphas", "2", "--betas", "3"][..],
        &["verify", "--family", "wilson", "-N", "3", "--alphas", "0.5,0.7,1.1,1.3"],
        &["verify", "--family", "q-racah", "-N", "3", "--alphas", "0.6,0.9,1.2,2.1", "--q", "1.6"],
    ] {
        let (code, r) = run(args);
        assert_eq!(code, 0, "{r}");
        assert_eq!(r["pass"], true);
        for key in ["spectral", "trace", "det", "identity", "equilibrium", "defining_eq"] {
            assert!(r["residuals"][key].is_f64(), "{key} missing in {r}");
        }
    }
}

#[test]
fn tolerances_are_honoured() {
    let args = ["verify", "--family", "ghyp", "-N", "4", "--alphas", "2", "--betas", "3", "--tol-spectral", "0"];
    let (code, r) = run(&args);
    if r["residuals"]["spectral"].as_f64().unwrap() > 0.0 {
        assert_eq!(code, 1);
        assert_eq!(r["pass"], false);
    }
}

#[test]
fn evolve_matches_the_oracle() {
    let base = ["evolve", "--family", "wilson", "-N", "2", "--alphas", "0.5,0.7,1.1,1.3"];
    let (code, r) = run(&[&base[..], &["--t1", "0"]].concat());
    assert_eq!(code, 0);
    assert_eq!(r["max_deviation"], 0.0);
    assert_eq!(r["ode_zeros"], r["oracle_zeros"]);

    let (code, r) = run(&base);
    assert_eq!(code, 0);
    assert!(r["max_deviation"].as_f64().unwrap() <= 1e-6);
    assert_eq!(r["times"].as_array().unwrap().len(), 2001);

    let (code, r) = run(&["evolve", "--family", "ghyp", "-N", "1", "--alphas", "2", "--betas", "3", "--perturb", "0"]);
    assert_eq!(code, 0);
    let ode = r["ode_zeros"].as_array().unwrap();
    assert!(ode.iter().all(|z| z == &ode[0]));

    let (code, _) = run(&["evolve", "--family", "jacobi", "-N", "2", "--alphas", "0,0"]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_is_seeded_and_passes() {
    let args = ["sweep", "--draws", "20", "--nmax", "8", "--seed", "11"];
    let first = Command::new(env!("CARGO_BIN_EXE_isospectra")).args(args).output().unwrap();
    let second = Command::new(env!("CARGO_BIN_EXE_isospectra")).args(args).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(r["total"], 140);
    assert_eq!(r["passed"], 140);

    let (code, r) = run(&["sweep", "--draws", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["families"].as_array().unwrap().len(), 0);
    assert_eq!(r["total"], 0);

    let (code, _) = run(&["sweep", "--nmax", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn spec_file_with_overrides() {
    let path = temp_file("gbasic.json", r#"{"family": "gbasic", "N": 3, "alphas": [2], "betas": [[3, 0]], "q": 1.7}"#);
    let file = path.to_str().unwrap();
    let (code, r) = run(&["matrix", "--spec-file", file]);
    assert_eq!(code, 0);
    assert_eq!(r["spec"]["N"], 3);
    assert_eq!(pairs(&r["zeros"]).len(), 3);

    let (code, r) = run(&["matrix", "--spec-file", file, "-N", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["spec"]["N"], 5);
    assert_eq!(r["spec"]["q"], serde_json::json!([1.7, 0.0]));

    let echoed = temp_file("echo.json", &r["spec"].to_string());
    let (code, again) = run(&["matrix", "--spec-file", echoed.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(again, r);

    let bad = temp_file("bad.json", r#"{"family": "ghyp", "N": 2, "alphas": [2], "betas": [3], "extra": 1}"#);
    let (code, _) = run(&["zeros", "--spec-file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _) = run(&["zeros", "--spec-file", "/nonexistent/spec.json"]);
    assert_eq!(code, 2);
}
