use std::process::{Command, Output};

use kz_core::exactalg::SparsePolynomial;
use serde_json::Value;

fn kzint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kzint"))
        .args(args)
        .env_remove("KZ_WORKERS")
        .output()
        .expect("kzint runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn z(i: usize, j: usize) -> SparsePolynomial {
    SparsePolynomial::diff(3, i - 1, j - 1)
}

#[test]
fn solve_two_one_matrix() {
    let out = kzint(&["solve", "--lambda", "2,1", "--m", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let expected = [
        [
            &z(1, 2).pow_u(2) * &(&z(1, 3) + &z(2, 3)),
            -&(&z(1, 2).pow_u(2) * &z(1, 3)),
        ],
        [
            -&(&z(1, 2) * &z(1, 3).pow_u(2)),
            &z(1, 3).pow_u(2) * &(&z(1, 2) - &z(2, 3)),
        ],
    ];
    for (i, row) in expected.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let got: SparsePolynomial = serde_json::from_value(v["matrix"][i][j].clone()).unwrap();
            assert_eq!(&got, p, "entry {i},{j}");
        }
    }
    assert_eq!(v["degree"], 3);
}

#[test]
fn text_uses_difference_shorthand() {
    let out = kzint(&["solve", "--lambda", "2,1", "--m", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[1,2] -z12^2*z13"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["solve", "--lambda", "2,1", "--m", "0"][..],
        &["solve", "--lambda", "1,2", "--m", "1"],
        &["solve", "--lambda", "2,x", "--m", "1"],
        &["solve", "--lambda", "4,3", "--m", "1", "--budget", "10"],
        &["det", "--lambda", "2,1", "--m", "-1"],
        &["frobnicate"],
    ] {
        let out = kzint(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_sweep_n4() {
    let out = kzint(&["verify", "--all-partitions", "4", "--m", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    let reports = v["reports"].as_array().unwrap();
    // pairing runs only for the reflection shape
    let pairing: Vec<&Value> = reports.iter().filter(|r| r["check"] == "pairing").collect();
    assert_eq!(pairing.len(), 1);
    assert_eq!(pairing[0]["lambda"], serde_json::json!([3, 1]));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let base = kzint(&["solve", "--lambda", "2,2", "--m", "1", "--format", "json"]).stdout;
    let flag = kzint(&[
        "solve",
        "--lambda",
        "2,2",
        "--m",
        "1",
        "--format",
        "json",
        "--workers",
        "4",
    ])
    .stdout;
    let env = Command::new(env!("CARGO_BIN_EXE_kzint"))
        .args(["solve", "--lambda", "2,2", "--m", "1", "--format", "json"])
        .env("KZ_WORKERS", "3")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(base, flag);
    assert_eq!(base, env);
}

#[test]
fn flag_wins_over_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kzint"))
        .args(["stats", "--lambda", "2,1", "--workers", "2"])
        .env("KZ_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn negative_m_gives_the_dual_side() {
    let solve = json(&kzint(&["solve", "--lambda", "2,1", "--m", "-1", "--format", "json"]));
    let dual = json(&kzint(&["dual", "--lambda", "2,1", "--m", "1", "--format", "json"]));
    assert_eq!(solve, dual);
    assert_eq!(solve["m"], -1);
    let phi = kzint(&["reflection", "--n", "3", "--m", "-1", "--pairing", "--format", "json"]);
    assert_eq!(phi.status.code(), Some(0));
    assert!(json(&phi)["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["verdict"] == "pass"));
}

#[test]
fn stats_and_det() {
    let v = json(&kzint(&["stats", "--lambda", "3,2", "--format", "json"]));
    assert_eq!(v["specht_dim"], 5);
    assert_eq!(v["f2"], 2);
    let d = json(&kzint(&["det", "--lambda", "2,1", "--m", "1", "--format", "json"]));
    assert_eq!(d["report"]["value"]["constant"], "-2");
}

#[test]
fn writes_output_file() {
    let path = std::env::temp_dir().join(format!("kzint-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = kzint(&[
        "twist", "--lambda", "1,1", "--m", "1", "--format", "json", "--output", p,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["m"], -1);
}

#[test]
fn bad_environment_workers_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_kzint"))
        .args(["stats", "--lambda", "2,1"])
        .env("KZ_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
