use std::fs;
use std::process::{Command, Output};

fn fieldpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fieldpos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_defaults_pass() {
    let o = fieldpos(&["verify"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("0 failed"));
    assert!(!text.contains(" FAIL"));
}

#[test]
fn verify_is_byte_deterministic() {
    let a = fieldpos(&["verify", "--seed", "99", "--samples", "20"]);
    let b = fieldpos(&["verify", "--seed", "99", "--samples", "20"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn impossible_fd_tolerance_fails() {
    let o = fieldpos(&["verify", "--tol-fd", "1e-16"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{text}");
    let fd_rows: Vec<&str> = text.lines().filter(|l| l.contains("1.0e-16")).collect();
    assert!(!fd_rows.is_empty());
    assert!(fd_rows.iter().any(|l| l.ends_with("FAIL")));
    // rows on other tolerances are unaffected
    assert!(text
        .lines()
        .filter(|l| l.contains("1.0e-12"))
        .all(|l| l.ends_with("PASS")));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fieldpos(&["verify", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(fieldpos(&["verify", "--mass", "abc"]).status.code(), Some(2));
    assert_eq!(fieldpos(&["nonsense"]).status.code(), Some(2));
    assert_eq!(fieldpos(&["zbw", "--grid-n", "1000"]).status.code(), Some(2));
    assert_eq!(
        fieldpos(&["covariance", "--word", "boost:q:1"]).status.code(),
        Some(2)
    );
}

#[test]
fn io_errors_exit_3() {
    let o = fieldpos(&["locality", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(3));
    let o = fieldpos(&["verify", "--config", "/nonexistent-dir/run.conf"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn zbw_defaults_write_801_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zbw.csv");
    let o = fieldpos(&["zbw", "--out", path.to_str().unwrap()]);
    let summary = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{summary}");
    let csv = fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,x_dirac,x_dirac_im,x_field,x_analytic"));
    assert_eq!(lines.count(), 801);
    let freq: f64 = summary
        .lines()
        .find(|l| l.starts_with("dirac oscillation frequency"))
        .and_then(|l| l.split_whitespace().nth(3))
        .unwrap()
        .parse()
        .unwrap();
    assert!((freq - 2.0).abs() < 0.1);
}

#[test]
fn zbw_csv_is_byte_deterministic() {
    let a = fieldpos(&["zbw", "--t-max", "5", "--mix", "1", "--p0", "0.4"]);
    let b = fieldpos(&["zbw", "--t-max", "5", "--mix", "1", "--p0", "0.4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 102);
}

#[test]
fn locality_defaults() {
    let o = fieldpos(&["locality"]);
    assert_eq!(o.status.code(), Some(0));
    let summary = String::from_utf8(o.stderr.clone()).unwrap();
    let ratio: f64 = summary
        .lines()
        .find(|l| l.starts_with("max overlap ratio"))
        .and_then(|l| l.split_whitespace().nth(3))
        .unwrap()
        .parse()
        .unwrap();
    assert!(ratio < 1e-8);
}

#[test]
fn covariance_word() {
    let o = fieldpos(&["covariance", "--word", "boost:x:0.5,rot:y:0.3", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let summary = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(summary.contains("word=[boost:x:0.5,rot:y:0.3]"), "{summary}");
    assert_eq!(stdout(&o).lines().count(), 21);
}

#[test]
fn yukawa_defaults_in_band() {
    let o = fieldpos(&["yukawa"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(&conf, "# small run\nsamples = 0\nseed = 5\n").unwrap();
    let c = conf.to_str().unwrap();
    assert_eq!(fieldpos(&["verify", "--config", c]).status.code(), Some(2));
    let o = fieldpos(&["verify", "--config", c, "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verify: mass=1 seed=5 samples=3"));
}
