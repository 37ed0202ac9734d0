use std::process::{Command, Output};

use serde_json::Value;

fn quotbwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quotbwb"))
        .args(args)
        .env_remove("QUOTBWB_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = quotbwb(&all);
    (serde_json::from_str(&stdout(&o)).expect("valid JSON"), o.status.code().unwrap())
}

#[test]
fn lr_prints_the_coefficient() {
    let o = quotbwb(&["lr", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1"]);
    assert_eq!(stdout(&o).trim(), "2");
    assert_eq!(o.status.code(), Some(0));
    let (v, _) = json(&["lr", "--alpha", "1", "--beta", "1"]);
    assert_eq!(v["result"]["2"], "1");
    assert_eq!(v["result"]["1,1"], "1");
}

#[test]
fn stromme_parameters() {
    let o = quotbwb(&["stromme", "--n", "2", "--r", "1", "--d", "2", "--b", "0", "--m", "5"]);
    assert_eq!(stdout(&o).trim(), "(10,3,7),(12,4,8)");
    let (v, _) = json(&["stromme", "--n", "2", "--r", "1", "--d", "2", "--m", "5"]);
    assert_eq!(v["result"]["rankK"], 48);
}

#[test]
fn sharp_example() {
    let (v, code) = json(&["examples", "sharp", "--jobs", "2"]);
    assert_eq!(code, 0);
    let entries = v["result"]["entries"].as_array().unwrap();
    let triples: Vec<(u64, i64, &str)> = entries
        .iter()
        .map(|e| (e["t"].as_u64().unwrap(), e["q"].as_i64().unwrap(), e["dim"].as_str().unwrap()))
        .collect();
    assert_eq!(triples, vec![(0, 0, "210"), (24, 23, "28")]);
    assert_eq!(v["result"]["table"]["0"], "182");
    for key in ["version", "config", "result", "notes", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn sym2_example() {
    let (v, code) = json(&["examples", "sym2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["degenerate"], false);
    assert_eq!(v["result"]["report"]["relations"][0]["text"], "H^2 - H^1 = 9");
}

#[test]
fn validation_errors_exit_one() {
    for args in [
        vec!["stromme", "--n", "2", "--r", "1", "--d", "2", "--m", "1"],
        vec!["lr", "--alpha", "1,2", "--beta", "1"],
        vec!["lr", "--alpha", "x", "--beta", "1"],
        vec!["dim", "--lambda", "1", "--n", "2", "--jobs", "0"],
        vec!["scan", "--n", "2", "--r", "1", "--d", "1", "--b1", "1"],
        vec!["stromme", "--n", "2", "--r", "1", "--d", "1", "--b", "0,1,2"],
        vec!["bracket", "--n", "2", "--r", "1", "--d", "1", "--m", "2", "--e", "3", "--convention", "printed"],
        vec!["nonsense"],
    ] {
        let o = quotbwb(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn verify_exit_codes() {
    let base = ["--n", "2", "--r", "1", "--d", "1"];
    let with = |head: &[&str], tail: &[&str]| -> Vec<String> {
        head.iter().chain(base.iter()).chain(tail.iter()).map(|s| s.to_string()).collect()
    };
    let cases: Vec<(Vec<String>, i32)> = vec![
        (with(&["verify", "thm41"], &["--eta", "1,0", "--rho", "1,0,0"]), 0),
        (with(&["verify", "prop47"], &["--eta", "2,0", "--rho", "1,0,0"]), 0),
        (with(&["verify", "cor14"], &["--insert", "-2:1"]), 0),
        (with(&["verify", "thm57"], &["--insert", "1:2"]), 0),
        (with(&["verify", "sx"], &["--lambda", "2"]), 0),
        (with(&["verify", "ext"], &["--m", "2", "--nu", "1", "--lambda", "1"]), 0),
        (
            ["verify", "thm41", "--n", "3", "--r", "1", "--d", "1", "--eta=0,-1", "--rho", "1,0,0"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            2,
        ),
        (with(&["verify", "thm57"], &["--insert", "0:1"]), 1),
    ];
    for (args, want) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = quotbwb(&refs);
        assert_eq!(o.status.code(), Some(want), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let args = ["scan", "--n", "2", "--r", "1", "--d", "1", "--b1", "2,0", "--b2", "1,0,0"];
    let mut payloads = Vec::new();
    for jobs in ["1", "3"] {
        let mut a = args.to_vec();
        a.extend(["--jobs", jobs]);
        let (mut v, code) = json(&a);
        assert_eq!(code, 0);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        payloads.push(serde_json::to_string_pretty(&v).unwrap());
    }
    assert_eq!(payloads[0], payloads[1]);
}

#[test]
fn json_round_trips() {
    let o = quotbwb(&["hyper", "--n", "2", "--r", "1", "--d", "1", "--insert", "q:-2:1", "--insert", "x:1"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim_end());
}

#[test]
fn table_format_is_plain_text() {
    let o = quotbwb(&["closed-form", "--n", "2", "--r", "1", "--d", "1", "--insert", "-2:1", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "H^1 = 2");
}

#[test]
fn cache_file_persists_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lr.cache");
    let o = Command::new(env!("CARGO_BIN_EXE_quotbwb"))
        .args(["lr", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1"])
        .env("QUOTBWB_CACHE", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("quotbwb-lrcache v1\n"));
    assert!(text.lines().any(|l| l.ends_with("|2")));

    std::fs::write(&path, "quotbwb-lrcache v2\n").unwrap();
    let o = quotbwb(&["lr", "--alpha", "1", "--beta", "1", "--cache", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = quotbwb(&["dim", "--lambda", "2,1", "--n", "3", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"], "8");
}
