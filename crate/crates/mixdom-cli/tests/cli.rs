use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../mixdom/tests/fixtures").join(name)
}

fn mixdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixdom")).args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn sorted_sets(v: &Value) -> Vec<String> {
    let mut sets: Vec<String> = v["min_sets"].as_array().unwrap().iter().map(|s| s.to_string()).collect();
    sets.sort();
    sets
}

#[test]
fn solve_sample_with_both_programs() {
    let (g, td) = (fixture("sample.gr"), fixture("sample.td"));
    for algo in ["amds", "six"] {
        let report = json(&mixdom(&["solve", "--graph", path_str(&g), "--td", path_str(&td), "--algo", algo]));
        assert_eq!(report["gamma"], 2);
        assert_eq!(report["algorithm"], algo);
        assert_eq!(report["width"], 2);
        assert_eq!(report["bag_count"], 12);
        assert_eq!(report["schema_version"], 1);
        assert!(report.get("min_sets").is_none());
    }
}

#[test]
fn enumeration_matches_oracle() {
    let g = fixture("sample.gr");
    let dp = json(&mixdom(&["solve", "--graph", path_str(&g), "--enumerate"]));
    let oracle = json(&mixdom(&["oracle", "--graph", path_str(&g), "--enumerate"]));
    assert_eq!(dp["gamma"], 2);
    assert_eq!(oracle["gamma"], 2);
    assert_eq!(sorted_sets(&dp), sorted_sets(&oracle));
    let want = [r#"{"edges":[[1,2]],"vertices":[4]}"#, r#"{"edges":[[2,3]],"vertices":[4]}"#];
    assert_eq!(sorted_sets(&dp), want);
}

#[test]
fn k2_with_six_states() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k2.gr", "p tw 2 1\n1 2\n");
    assert_eq!(json(&mixdom(&["solve", "--graph", path_str(&g), "--algo", "six"]))["gamma"], 1);
}

#[test]
fn empty_graph_has_gamma_zero() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "empty.gr", "p tw 0 0\n");
    for algo in ["amds", "six", "oracle"] {
        assert_eq!(json(&mixdom(&["solve", "--graph", path_str(&g), "--algo", algo]))["gamma"], 0);
    }
}

#[test]
fn reports_are_identical_apart_from_timing() {
    let g = fixture("sample.gr");
    let run = || {
        let mut v = json(&mixdom(&["solve", "--graph", path_str(&g), "--enumerate", "--seed", "7"]));
        v["time_ms"] = Value::Null;
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let status = mixdom(&["solve", "--graph", path_str(&fixture("sample.gr")), "--out", path_str(&out)]);
    assert!(status.status.success());
    assert!(status.stdout.is_empty());
    let report: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["gamma"], 2);
}

#[test]
fn trace_starts_with_the_leaf_table() {
    let (g, td) = (fixture("sample.gr"), fixture("sample.td"));
    let out = mixdom(&["trace", "--graph", path_str(&g), "--td", path_str(&td)]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bag 1 leaf [2]\n2 0 0 | 0 0 0 | 1\n5 0 0 | 0 0 0 | 0\n"), "{text}");
    assert_eq!(text.matches("bag ").count(), 12);

    let dir = TempDir::new().unwrap();
    let file = dir.path().join("trace.txt");
    let solve = mixdom(&["solve", "--graph", path_str(&g), "--td", path_str(&td), "--trace", path_str(&file)]);
    assert!(solve.status.success());
    assert_eq!(fs::read_to_string(&file).unwrap(), text);
}

#[test]
fn six_trace_has_no_edge_columns() {
    let (g, td) = (fixture("sample.gr"), fixture("sample.td"));
    let out = mixdom(&["trace", "--graph", path_str(&g), "--td", path_str(&td), "--algo", "six"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bag 1 leaf [2]\n1 0 0 | 1\n5 0 0 | 0\n"), "{text}");
}

#[test]
fn validate_sample_decomposition() {
    let out =
        mixdom(&["validate", "--graph", path_str(&fixture("sample.gr")), "--td", path_str(&fixture("sample.td"))]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ok, width 2, 12 bags\n");
}

#[test]
fn validate_reports_violations_with_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad_header = write(&dir, "header.td", "s td 2 2 5\nb 1 1 2 3\nb 2 4 5\n1 2\n");
    let out = mixdom(&["validate", "--graph", path_str(&fixture("sample.gr")), "--td", path_str(&bad_header)]);
    assert_eq!(out.status.code(), Some(1));
    let td = write(&dir, "bad.td", "s td 2 3 5\nb 1 1 2 3\nb 2 4 5\n1 2\n");
    let out = mixdom(&["validate", "--graph", path_str(&fixture("sample.gr")), "--td", path_str(&td)]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "edge 1 4 is in no bag\nedge 3 4 is in no bag\n");

    let solve = mixdom(&["solve", "--graph", path_str(&fixture("sample.gr")), "--td", path_str(&td)]);
    assert_eq!(solve.status.code(), Some(2));
}

#[test]
fn decompose_tree_has_width_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tree.gr", "p tw 6 5\n1 2\n1 3\n3 4\n3 5\n5 6\n");
    let td = dir.path().join("tree.td");
    assert!(mixdom(&["decompose", "--graph", path_str(&g), "--out", path_str(&td)]).status.success());
    let header = fs::read_to_string(&td).unwrap();
    let fields: Vec<&str> = header.lines().find(|l| l.starts_with("s td")).unwrap().split_whitespace().collect();
    assert_eq!(fields[3], "2", "largest bag holds two vertices");
    let check = mixdom(&["validate", "--graph", path_str(&g), "--td", path_str(&td)]);
    assert_eq!(String::from_utf8(check.stdout).unwrap().lines().next().unwrap().split(',').nth(1), Some(" width 1"));
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.gr", "p tw 3 1\n1 1\n");
    let out = mixdom(&["solve", "--graph", path_str(&g)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = mixdom(&["solve", "--graph", path_str(&dir.path().join("missing.gr"))]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn oracle_guard_exits_three() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p tw 10 45\n");
    for u in 1..=10 {
        for v in u + 1..=10 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let g = write(&dir, "k10.gr", &text);
    assert_eq!(mixdom(&["oracle", "--graph", path_str(&g)]).status.code(), Some(3));
    assert_eq!(mixdom(&["solve", "--graph", path_str(&g), "--algo", "oracle"]).status.code(), Some(3));
}

#[test]
fn bench_emits_csv() {
    let g = fixture("sample.gr");
    let out = mixdom(&["bench", path_str(&g), "--algo", "amds,six,oracle"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "instance,algo,width,gamma,time_ms,peak_rows");
    assert_eq!(lines.len(), 4);
    for (line, algo) in lines[1..].iter().zip(["amds", "six", "oracle"]) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[1], algo);
        assert_eq!(cols[3], "2");
    }
}
