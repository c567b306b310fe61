use std::process::{Command, Output};

use serde_json::Value;

fn ischur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ischur"))
        .args(args)
        .env_remove("ISCHUR_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn basis_sizes() {
    for (n, r, dim) in [(1, 1, 2), (1, 2, 3), (2, 1, 8), (2, 2, 36)] {
        let out = ischur(&["basis", "--n", &n.to_string(), "--r", &r.to_string()]);
        assert!(out.status.success());
        assert_eq!(json(&out).as_array().unwrap().len(), dim);
    }
}

#[test]
fn middle_generator_squared() {
    let e = "[[0,1],[1,0]]";
    let out = ischur(&[
        "mult", "--n", "1", "--r", "1", "--lhs", e, "--rhs", e, "--method", "both",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["match"], Value::Bool(true));
    let terms = v["oracle"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["matrix"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(
        terms[0]["coeff"]["v"],
        serde_json::json!({"-1": -1, "1": 1})
    );
    assert_eq!(terms[1]["matrix"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn formula_needs_a_generator() {
    let a = "[[0,1,0,0],[0,0,0,1],[1,0,0,0],[0,0,1,0]]";
    let out = ischur(&[
        "mult", "--n", "2", "--r", "2", "--lhs", a, "--rhs", a, "--method", "formula",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_perturbation_fails() {
    let ok = ischur(&["verify", "long", "--n", "1", "--r", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["failures"].as_array().unwrap().len(), 0);

    let bad = ischur(&["verify", "long", "--n", "1", "--r", "2", "--perturb"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!json(&bad)["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "commuting", "--n", "2", "--r", "2"];
    let a = ischur(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_ischur"))
        .args(args)
        .env("ISCHUR_THREADS", "1")
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["basis", "--n", "0", "--r", "1"],
        vec!["basis", "--n", "5", "--r", "1"],
        vec!["verify", "nonsense", "--n", "1", "--r", "1"],
        vec!["verify", "short", "--n", "4", "--r", "4"],
        vec!["verify", "short", "--n", "1", "--r", "1", "--jbox", "3"],
        vec![
            "mult",
            "--n",
            "1",
            "--r",
            "1",
            "--lhs",
            "[[0,1]",
            "--rhs",
            "[[0,1],[1,0]]",
        ],
        vec![
            "tensor-act",
            "--n",
            "1",
            "--r",
            "2",
            "--gen",
            "e_1",
            "--index",
            "1,2",
        ],
        vec![
            "tensor-act",
            "--n",
            "1",
            "--r",
            "2",
            "--gen",
            "t",
            "--index",
            "1,3",
        ],
    ] {
        let out = ischur(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_ischur"))
        .args(["verify", "short", "--n", "1", "--r", "1"])
        .env("ISCHUR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tensor_act_middle() {
    let out = ischur(&[
        "tensor-act",
        "--n",
        "1",
        "--r",
        "1",
        "--gen",
        "t",
        "--index",
        "1",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["index"], serde_json::json!([1]));
    assert_eq!(terms[0]["coeff"]["v"], serde_json::json!({"-1": 1}));
    assert_eq!(terms[1]["index"], serde_json::json!([2]));
}

#[test]
fn table_round_trip() {
    let path = std::env::temp_dir().join(format!("ischur-table-{}.json", std::process::id()));
    let out = ischur(&[
        "table",
        "--n",
        "1",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(doc["basis"].as_array().unwrap().len(), 3);
    // All three matrices have row and column sums (2, 2), so every pair composes.
    assert_eq!(doc["products"].as_array().unwrap().len(), 9);
}

#[test]
fn incompatible_profiles_give_zero() {
    let a = "[[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,1]]";
    let b = "[[0,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,0]]";
    let out = ischur(&["mult", "--n", "2", "--r", "1", "--lhs", a, "--rhs", b]);
    assert!(out.status.success());
    assert!(json(&out)["terms"].as_array().unwrap().is_empty());
}
