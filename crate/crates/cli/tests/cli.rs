use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use serde_json::Value;
use trigrid::fixtures;
use trigrid::polygon::parse_polygon;
use trigrid::GridPolygon;
use trigrid_cli::{run, Cli};

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trigrid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn polygon_file(name: &str, p: &GridPolygon) -> String {
    scratch(name, &p.to_file().to_json()).display().to_string()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("trigrid").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_nine_panes() {
    let f = polygon_file("nine.json", &fixtures::nine_pane_polygon());
    let (code, out, _) = invoke(&["analyze", &f]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cycles"], serde_json::json!([[1, 7, 4, 3, 5, 9], [2, 6, 8]]));
    assert_eq!(v["permutation"], "(1 7 4 3 5 9)(2 6 8)");
    assert_eq!(v["cyc"], 2);
    assert_eq!(v["trajectories"].as_array().unwrap().len(), 2);
    assert!(v.get("plabic").is_none());
}

#[test]
fn analyze_with_plabic_and_start_pane() {
    let f = polygon_file("hex.json", &fixtures::hexagon());
    let (code, out, _) = invoke(&["analyze", &f, "--plabic", "--start-pane", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["plabic"]["trip_permutation"], v["permutation"]);
    assert_eq!(v["plabic"]["graph"]["schema"], "plabic-v1");
    assert_eq!(v["cycle_type"], serde_json::json!([3, 3]));
}

#[test]
fn start_pane_out_of_range_is_input_error() {
    let f = polygon_file("tri.json", &fixtures::triangle());
    let (code, _, err) = invoke(&["analyze", &f, "--start-pane", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("out of range"));
}

#[test]
fn malformed_file_reports_line() {
    let f = scratch("bad.json", "{\"cells\": [\n  [0, 0, \"X\"]\n]}").display().to_string();
    let (code, _, err) = invoke(&["analyze", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("bad.json") && err.contains("line 2"), "{err}");
}

#[test]
fn invalid_polygon_is_input_error() {
    let f = scratch("dup.json", r#"{"cells": [[0, 0, "U"], [0, 0, "U"]]}"#).display().to_string();
    assert_eq!(invoke(&["analyze", &f]).0, 1);
    let f = scratch("extra.json", r#"{"cells": [[0, 0, "U"]], "name": 1}"#).display().to_string();
    assert_eq!(invoke(&["analyze", &f]).0, 1);
    assert_eq!(invoke(&["analyze", "/nonexistent/poly.json"]).0, 1);
}

#[test]
fn enumerate_csv_counts() {
    let (code, out, _) = invoke(&["enumerate", "--max-area", "6"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("hash,area,perim,cyc,cycle_type,area_slack,perim_slack,conjecture_slack"));
    assert_eq!(lines.count(), 1 + 1 + 1 + 3 + 4 + 12);
    let (_, out, _) = invoke(&["enumerate", "--max-area", "4", "--mode", "fixed", "--report", "json", "--threads", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counts"], serde_json::json!({"1": 2, "2": 3, "3": 6, "4": 14}));
}

#[test]
fn verify_is_clean() {
    let (code, out, err) = invoke(&["verify", "--max-area", "8"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exit_code"], 0);
    assert!(v["violations"].as_object().unwrap().values().all(|l| l.as_array().unwrap().is_empty()));
    let (code, out, _) = invoke(&["verify", "--max-area", "5", "--report", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 + 10);
}

#[test]
fn render_writes_svg() {
    let f = polygon_file("hex-r.json", &fixtures::hexagon());
    let svg = std::env::temp_dir().join(format!("trigrid-cli-{}", std::process::id())).join("hex.svg");
    let (code, out, _) = invoke(&["render", &f, "--out", svg.to_str().unwrap(), "--scale", "25"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches(r#"<g class="trajectory""#).count(), 2);
    let (code, out, _) = invoke(&["render", &f, "--plabic"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("<circle").count(), 6);
}

#[test]
fn glue_by_index_and_by_name() {
    let h = fixtures::hexagon();
    let a = polygon_file("ga.json", &h);
    let (code, out, _) = invoke(&["glue", &a, &a, "--pane1", "1", "--pane2", "1"]);
    assert_eq!(code, 0);
    let u = parse_polygon(&out).unwrap();
    assert_eq!((u.area(), u.perim()), (12, 10));
    assert!(u.is_congruent(&fixtures::hexagon_tree(2)));

    let name = h.boundary()[0].to_string();
    let (code, out2, _) = invoke(&["glue", &a, &a, "--pane1", &name, "--pane2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, out2);

    let (code, _, err) = invoke(&["glue", &a, &a, "--pane1", "H(50,50)", "--pane2", "1"]);
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = invoke(&["glue", &a, &a, "--pane1", "0", "--pane2", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn definition_is_consistent() {
    use clap::CommandFactory;
    Cli::command().debug_assert();
}

#[test]
fn parse_errors_exit_one() {
    let bin = env!("CARGO_BIN_EXE_trigrid");
    let s = Command::new(bin).args(["verify", "--max-area", "zero"]).output().unwrap();
    assert_eq!(s.status.code(), Some(1));
    let s = Command::new(bin).args(["render", "x.json", "--scale", "0"]).output().unwrap();
    assert_eq!(s.status.code(), Some(1));
    let s = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(s.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&s.stdout).contains("conjecture_slack"));
}

#[test]
fn binary_analyze_round_trip() {
    let f = polygon_file("nine-bin.json", &fixtures::nine_pane_polygon());
    let o = Command::new(env!("CARGO_BIN_EXE_trigrid")).args(["analyze", &f]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 9);
}
