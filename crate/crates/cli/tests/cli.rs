use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn charnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charnum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = charnum(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn quadric_threefold_t_number() {
    let o = charnum(&["tnumber", "--ambient", "4", "--degrees", "2", "--q", "2", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 (mod 2)"));
}

#[test]
fn cubic_surface_s_number() {
    let o = charnum(&["snumber", "--ambient", "3", "--degrees", "3", "--alpha", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().last() == Some("-15")));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(charnum(&["quadric", "--m", "7"]).status.code(), Some(2));
    assert_eq!(charnum(&["quadric", "--m", "0"]).status.code(), Some(2));
    assert_eq!(charnum(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(charnum(&["tnumber", "--ambient", "3", "--q", "4", "--t", "1"]).status.code(), Some(2));
    assert_eq!(charnum(&["snumber", "--ambient", "3", "--degrees", "3", "--alpha", "1"]).status.code(), Some(2));
    assert_eq!(charnum(&["snumber", "--ambient", "2", "--degrees", "1,1", "--alpha", "1"]).status.code(), Some(2));
    assert_eq!(charnum(&["hurewicz", "--ambient", "x"]).status.code(), Some(2));
    assert_eq!(charnum(&["hurewicz"]).status.code(), Some(2));
    let missing = scratch("missing.json");
    let _ = fs::remove_file(&missing);
    assert_eq!(charnum(&["hurewicz", "--file", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_round_trips_through_file() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["snumber", "--ambient", "2,1", "--degrees", "1,1", "--alpha", "0,1"],
        vec!["tnumber", "--ambient", "3", "--degrees", "3", "--q", "3", "--t", "1"],
        vec!["hurewicz", "--ambient", "4", "--degrees", "2;2"],
        vec!["lambda-family", "--ambient", "4", "--degrees", "2;3"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let first = charnum(&[args.as_slice(), &["--json"]].concat());
        assert_eq!(first.status.code(), Some(0));
        let path = scratch(&format!("round_trip_{i}.json"));
        fs::write(&path, &first.stdout).unwrap();
        let path = path.to_str().unwrap();
        let mut again: Vec<&str> = vec![args[0], "--file", path];
        let mut rest = args[1..].iter();
        while let Some(flag) = rest.next() {
            let value = rest.next().unwrap();
            if *flag != "--ambient" && *flag != "--degrees" {
                again.extend([*flag, *value]);
            }
        }
        again.push("--json");
        let second = charnum(&again);
        assert_eq!(second.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn table_and_json_agree() {
    let args = ["tnumber", "--ambient", "3", "--degrees", "3", "--q", "3", "--t", "1"];
    let v = json_of(&args);
    let table = stdout(&charnum(&args));
    let field = |k: &str| table.lines().find(|l| l.starts_with(k)).unwrap().split_whitespace().nth(1).unwrap().to_string();
    assert_eq!(v["s_value"], Value::String(field("s ")));
    assert_eq!(v["value"], Value::String(field("t-number")));
    assert_eq!(v["residue"]["value"].as_u64().unwrap().to_string(), field("residue"));

    let args = ["hurewicz", "--ambient", "2,1"];
    let v = json_of(&args);
    let table = stdout(&charnum(&args));
    let from_table: Vec<(String, String)> = table
        .lines()
        .skip(2)
        .map(|l| {
            let mut w = l.split_whitespace();
            (w.next().unwrap().to_string(), w.next().unwrap().to_string())
        })
        .collect();
    let from_json: Vec<(String, String)> = v["hurewicz"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let alpha: Vec<String> = e["alpha"].as_array().unwrap().iter().map(|c| c.to_string()).collect();
            (format!("({})", alpha.join(",")), e["value"].as_str().unwrap().to_string())
        })
        .collect();
    assert_eq!(from_table, from_json);
}

#[test]
fn lambda_family_quadric_surface() {
    let v = json_of(&["lambda-family", "--ambient", "3", "--degrees", "2", "--lambda", "-1,0,1"]);
    let values: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["-1", "0", "1"]);
    assert_eq!(v["pass"], Value::Bool(true));
}

#[test]
fn degree_formula_verdicts() {
    let base = ["degree-formula", "--ambient", "4", "--degrees", "2", "--q", "2", "--t", "2", "--target-t", "0"];
    let v = json_of(&base);
    assert_eq!(v["status"], "violated");
    let v = json_of(&[base.as_slice(), &["--preset", "algebraically-closed"]].concat());
    assert_eq!(v["status"], "holds-trivially");
    let v = json_of(&[base.as_slice(), &["--points", "2,4,6"]].concat());
    assert_eq!(v["status"], "violated");
    let v = json_of(&[
        "degree-formula", "--ambient", "4", "--degrees", "2", "--q", "2", "--t", "2", "--target-ambient", "4",
        "--target-degrees", "2",
    ]);
    assert_eq!(v["status"], "holds");
}

#[test]
fn quadric_with_target() {
    let v = json_of(&["quadric", "--m", "2", "--dim-x", "2", "--preset", "anisotropic-quadric"]);
    assert_eq!(v["s_top"], "-6");
    assert_eq!(v["closed_form"], "-6");
    assert_eq!(v["verdict"]["verdict"], "morphism-impossible");
}

#[test]
fn divisibility_default_family() {
    let v = json_of(&["check-divisibility", "--q", "2", "--t", "2"]);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        let s: i64 = e["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(s.rem_euclid(2), 0);
    }
}

#[test]
fn oracle_small_sweep() {
    let v = json_of(&["oracle", "--ambient", "5", "--max-roots", "2"]);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["max_weight"], 5);
}
