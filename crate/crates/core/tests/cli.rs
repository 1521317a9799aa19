use std::process::{Command, Output};

use mzv::Rational;
use serde_json::Value;

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// The value of a text line `label = value`.
fn text_value(o: &Output) -> Rational {
    let s = stdout(o);
    s.trim().rsplit(" = ").next().unwrap().parse().unwrap()
}

#[test]
fn zeta_text_and_json() {
    let o = mzv(&["zeta", "-a", "0,0"]);
    assert!(o.status.success());
    assert_eq!(text_value(&o), Rational::frac(3, 8));

    let o = mzv(&["zeta", "-a", "2,1", "--variant", "alt", "--format", "json"]);
    assert!(o.status.success());
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value: Rational = j["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(value, Rational::frac(-1, 240));
    assert_eq!(j["variant"], "alt");
}

#[test]
fn polynomial_in_v_round_trips() {
    let o = mzv(&[
        "zeta", "-a", "1,0", "--v", "1/3", "--poly-v", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value: Rational = j["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(
        value,
        mzv::mzv::zeta_strict(&[1, 0], &Rational::frac(1, 3)).unwrap()
    );
    assert!(j.get("poly_v").is_some());
}

#[test]
fn negative_shift_is_parsed() {
    let o = mzv(&["zeta", "-a", "0", "--v", "-1/2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got = text_value(&o);
    assert_eq!(
        got,
        mzv::mzv::zeta_strict(&[0], &Rational::frac(-1, 2)).unwrap()
    );
}

#[test]
fn exit_codes() {
    assert_eq!(mzv(&["zeta", "-a", "1,-2"]).status.code(), Some(2));
    assert_eq!(
        mzv(&["zeta", "-a", "0", "--v", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(mzv(&["zeta", "-a", "x"]).status.code(), Some(2));
    assert_eq!(mzv(&["table", "--max", "40"]).status.code(), Some(2));
    assert_eq!(
        mzv(&["hdim", "--dim", "9", "-a", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(mzv(&["chen", "--word", "0"]).status.code(), Some(2));
    assert_eq!(mzv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mzv(&["zeta", "-a", "1,1,1,1,1,1,1"]).status.code(), Some(2));
    assert_eq!(
        mzv(&["zeta", "-a", "1,1,1,1,1,1,1", "--depth-limit", "7"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn table_csv_header_and_determinism() {
    let a = mzv(&["table", "--max", "6"]);
    let b = Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(["table", "--max", "6"])
        .env("RAYON_NUM_THREADS", "3")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("b\\a,0,1,2,3,4,5,6\n"));
    assert!(text.lines().nth(1).unwrap().starts_with("0,3/8,1/12,"));

    let latex = stdout(&mzv(&["table", "--max", "2", "--format", "latex"]));
    assert!(latex.contains("\\frac{3}{8}"));
}

#[test]
fn hdim_and_chen() {
    assert_eq!(
        text_value(&mzv(&["hdim", "--dim", "2", "-a", "0"])),
        Rational::frac(-2, 3)
    );
    let o = mzv(&["chen", "--word", "3,2", "--format", "json"]);
    assert!(o.status.success());
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = j.to_string();
    assert!(text.contains("1/6"), "{text}");
}

#[test]
fn verify_reports_are_stable() {
    let run = || {
        mzv(&[
            "verify",
            "--suite",
            "engine",
            "--engine-cases",
            "20",
            "--format",
            "json",
        ])
    };
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let j: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(j["failures"].as_array().unwrap().len(), 0);
    assert!(j.get("wall_time_ms").is_none());

    let o = mzv(&["verify", "--suite", "table", "--timing", "--format", "json"]);
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(j["wall_time_ms"].is_u64());
}
