use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid-forge")).args(args).env_remove("MATROID_FORGE_MAX_N").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut with_format = args.to_vec();
    with_format.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&with_format)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn temp_json(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["catalan", "tutte", "--n", "2", "--method", "direct"]), "q^2*t + q*t^2\n");
    assert_eq!(stdout(&["catalan", "bases", "--n", "2", "--format", "json"]), "[[1,2],[1,3]]\n");
    assert_eq!(json(&["shifted", "bases", "--s", "2,3"]), serde_json::json!([[1, 2], [1, 3], [2, 3]]));
}

#[test]
fn tutte_methods_agree() {
    let want = stdout(&["catalan", "tutte", "--n", "5", "--method", "direct"]);
    for method in ["activities", "subsets", "series"] {
        assert_eq!(stdout(&["catalan", "tutte", "--n", "5", "--method", method]), want, "{method}");
    }
    let terms = json(&["catalan", "tutte", "--n", "3"]);
    assert_eq!(terms[0], serde_json::json!({"q": 3, "t": 1, "c": 1}));
    assert_eq!(terms.as_array().unwrap().len(), 5);
}

#[test]
fn catalan_queries() {
    assert_eq!(stdout(&["catalan", "rank", "--n", "3", "--set", "2,4,6"]), "2\n");
    assert_eq!(json(&["catalan", "circuits", "--n", "2"]), serde_json::json!([[2, 3], [4]]));
    assert_eq!(json(&["catalan", "bonds", "--n", "2"]), serde_json::json!([[1], [2, 3]]));
    let stats = json(&["catalan", "stats", "--n", "6"]);
    assert_eq!(stats["agree"], Value::Bool(true));
    assert_eq!(stats["rows"][0]["a"], 42);
}

#[test]
fn shifted_recovery_from_file() {
    let sm = temp_json(r#"{"m":5,"bases":[[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]}"#);
    let out = json(&["shifted", "recover", "--bases-file", sm.path().to_str().unwrap()]);
    assert_eq!(out, serde_json::json!({"shifted": true, "s": [2, 5]}));
    let not = temp_json("[[1,2],[3,4]]");
    let out = json(&["shifted", "recover", "--bases-file", not.path().to_str().unwrap()]);
    assert_eq!(out["shifted"], Value::Bool(false));
    assert_eq!(out["discrepancy"], serde_json::json!([1, 3]));
    let bare = temp_json("[[1,2],[1,3]]");
    assert_eq!(code(&["shifted", "recover", "--bases-file", bare.path().to_str().unwrap()]), 0);
    let with_loop = temp_json(r#"{"m":4,"bases":[[1,2],[1,3]]}"#);
    assert_eq!(code(&["shifted", "recover", "--bases-file", with_loop.path().to_str().unwrap()]), 2);
    assert_eq!(json(&["shifted", "check-axioms", "--s", "1,3,5"])["valid"], Value::Bool(true));
    assert_eq!(code(&["shifted", "check-axioms", "--bases-file", not.path().to_str().unwrap()]), 1);
}

#[test]
fn representation_round_trip() {
    let out = json(&["represent", "--s", "1,3", "--emit-matrix", "--verify"]);
    assert_eq!(out["matrix"], serde_json::json!([["1", "0", "0"], ["3", "9", "81"]]));
    assert_eq!(out["bases"], serde_json::json!([[1, 2], [1, 3]]));
    assert_eq!(out["verified"], Value::Bool(true));
    assert!(stdout(&["represent", "--s", "2,4,5", "--verify"]).ends_with("vector matroid equals SM[2, 4, 5]\n"));
}

#[test]
fn minors_and_field_probe() {
    let w = json(&["minor", "--n", "4", "--target", "2,4"]);
    assert_eq!(w["minor"], "U(2,4)");
    let probe = json(&["minor", "--n", "5", "--target", "2,5", "--field-size", "3"]);
    assert_eq!(probe["minor"], "U(2,5)");
    assert!(json(&["minor", "--n", "4", "--target", "2,4", "--field-size", "3"])["refusal"].is_string());
    assert_eq!(code(&["minor", "--n", "4", "--target", "2,4", "--field-size", "6"]), 2);
    assert_eq!(code(&["minor", "--n", "4", "--target", "2"]), 2);
}

#[test]
fn tableaux_and_posets() {
    assert_eq!(stdout(&["syt", "--shape", "2,2"]), "1 2 / 3 4\n1 3 / 2 4\n");
    let first = json(&["syt", "--shape", "3,1", "--first-row"]);
    assert_eq!(first["shift"], serde_json::json!([1, 3, 4]));
    assert_eq!(json(&["syt", "--shape", "2,2", "--mu", "2"]), serde_json::json!([[1, 2], [1, 3]]));
    assert_eq!(code(&["syt", "--shape", "2,2", "--mu", "3"]), 2);
    assert_eq!(code(&["syt", "--shape", "1,2"]), 2);
    let diamond = temp_json(r#"{"size": 4, "covers": [[1,2],[1,3],[2,4],[3,4]]}"#);
    let path = diamond.path().to_str().unwrap();
    assert_eq!(json(&["poset", "isets", "--file", path, "--ideal", "1,2"]), serde_json::json!([[1, 2], [1, 3]]));
    assert_eq!(code(&["poset", "isets", "--file", path, "--ideal", "4"]), 2);
    let cyclic = temp_json(r#"{"size": 2, "covers": [[1,2],[2,1]]}"#);
    assert_eq!(code(&["poset", "isets", "--file", cyclic.path().to_str().unwrap()]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["catalan", "bases", "--n", "20"]), 3);
    assert_eq!(code(&["catalan", "flats", "--n", "11"]), 3);
    assert_eq!(code(&["catalan", "flats", "--n", "3", "--max-subsets", "16"]), 3);
    assert_eq!(code(&["shifted", "bases", "--s", "3,2"]), 2);
    assert_eq!(code(&["catalan", "rank", "--n", "2", "--set", "9"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["catalan", "bases", "--n", "x"]), 2);
    assert_eq!(code(&["--help"]), 0);
    let err = String::from_utf8(run(&["catalan", "bases", "--n", "20"]).stderr).unwrap();
    assert!(err.contains("bound 14"), "{err}");
}

#[test]
fn max_n_from_environment() {
    let limited = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_matroid-forge"))
            .args(["catalan", "bases", "--n", "4"])
            .env("MATROID_FORGE_MAX_N", value)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(limited("3"), 3);
    assert_eq!(limited("4"), 0);
    assert_eq!(limited("many"), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["catalan", "bases", "--n", "9", "--threads", "2"];
    assert_eq!(stdout(&args), stdout(&["catalan", "bases", "--n", "9"]));
    assert_eq!(stdout(&["syt", "--shape", "3,2,1"]), stdout(&["syt", "--shape", "3,2,1"]));
}

#[test]
fn verify_all_quick() {
    let out = run(&["verify", "all", "--max-n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}
