//! End-to-end tests of the binary: exit codes, JSON shapes, determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn workdir(test: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(test);
    fs::create_dir_all(&dir).expect("create test dir");
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trop2-cli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn parse_stdout(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const EX46_F: &str = r#"{"d":2,"terms":[
 {"s":[1,1],"coeff":[{"c":"1","t":"0","u":"0"}]},
 {"s":[1,0],"coeff":[{"c":"1","t":"0","u":"0"}]},
 {"s":[0,1],"coeff":[{"c":"1","t":"0","u":"0"}]},
 {"s":[0,0],"coeff":[{"c":"1","t":"0","u":"0"}]}]}"#;

const EX46_G: &str = r#"{"d":2,"terms":[
 {"s":[1,0],"coeff":[{"c":"1","t":"0","u":"0"}]},
 {"s":[0,1],"coeff":[{"c":"1","t":"1","u":"0"}]},
 {"s":[0,0],"coeff":[{"c":"1","t":"1","u":"0"}]}]}"#;

const LINE: &str = r#"{"d":2,"terms":[
 {"s":[1,0],"coeff":[{"c":"1","t":"0","u":"0"}]},
 {"s":[0,1],"coeff":[{"c":"1","t":"1","u":"0"}]},
 {"s":[0,0],"coeff":[{"c":"1","t":"2","u":"1"}]}]}"#;

#[test]
fn stable_reports_the_known_intersection() {
    let dir = workdir("stable");
    let f = dir.join("f.json");
    let g = dir.join("g.json");
    fs::write(&f, EX46_F).unwrap();
    fs::write(&g, EX46_G).unwrap();

    let out = run(&[
        "stable",
        "--f",
        f.to_str().unwrap(),
        "--g",
        g.to_str().unwrap(),
        "--oracle",
    ]);
    let doc = parse_stdout(&out);
    let result = &doc["result"];
    assert_eq!(result["dims"], serde_json::json!([0, 0]));
    assert_eq!(result["pieces"].as_array().unwrap().len(), 2);
    assert_eq!(result["intermediate"].as_array().unwrap().len(), 3);
    assert_eq!(result["oracle"]["agree"], Value::Bool(true));
    assert_eq!(result["method"]["name"], "perturbation");
    assert_eq!(doc["header"]["command"], "stable");
    assert_eq!(
        doc["header"]["version"].as_str().unwrap(),
        env!("CARGO_PKG_VERSION")
    );
}

#[test]
fn beta_override_is_certified_before_use() {
    let dir = workdir("beta");
    let f = dir.join("f.json");
    let g = dir.join("g.json");
    fs::write(&f, EX46_F).unwrap();
    fs::write(&g, EX46_G).unwrap();

    let out = run(&[
        "stable",
        "--f",
        f.to_str().unwrap(),
        "--g",
        g.to_str().unwrap(),
        "--beta",
        "5/2",
    ]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["method"]["certificate"]["beta"], "5/2");

    let bad = run(&[
        "stable",
        "--f",
        f.to_str().unwrap(),
        "--g",
        g.to_str().unwrap(),
        "--beta",
        "-1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&bad.stderr).expect("stderr is JSON");
    assert!(err["code"].is_string());
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = workdir("determinism");
    let f = dir.join("f.json");
    let g = dir.join("g.json");
    fs::write(&f, EX46_F).unwrap();
    fs::write(&g, EX46_G).unwrap();
    let args = [
        "stable",
        "--f",
        f.to_str().unwrap(),
        "--g",
        g.to_str().unwrap(),
        "--oracle",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let line = dir.join("line.json");
    fs::write(&line, LINE).unwrap();
    let args = ["hypersurface", "--input", line.to_str().unwrap(), "--format", "svg"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn gscube_lists_all_vertices() {
    let out = run(&["gscube", "--d", "2"]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(doc["result"]["ordinary"].as_array().unwrap().len(), 4);

    let degenerate = run(&["gscube", "--d", "1"]);
    assert_eq!(degenerate.status.code(), Some(2));
}

#[test]
fn hypersurface_decomposes_and_closes() {
    let dir = workdir("hypersurface");
    let line = dir.join("line.json");
    fs::write(&line, LINE).unwrap();

    let out = run(&["hypersurface", "--input", line.to_str().unwrap()]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["kind"], "hypersurface");
    assert_eq!(doc["result"]["pieces"].as_array().unwrap().len(), 7);

    let out = run(&["closure", "--input", line.to_str().unwrap()]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["pieces"].as_array().unwrap().len(), 3);
}

#[test]
fn plot_accepts_result_envelopes() {
    let dir = workdir("plot");
    let line = dir.join("line.json");
    let dec = dir.join("dec.json");
    fs::write(&line, LINE).unwrap();

    let out = run(&[
        "hypersurface",
        "--input",
        line.to_str().unwrap(),
        "--out",
        dec.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&["plot", "--input", dec.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("stroke-dasharray"));

    let bogus = dir.join("bogus.json");
    fs::write(&bogus, r#"{"kind":"mystery"}"#).unwrap();
    let out = run(&["plot", "--input", bogus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cone_handles_homogenized_generators() {
    let dir = workdir("cone");
    let gens = dir.join("interval.json");
    fs::write(
        &gens,
        r#"{"d":2,"gens":[[["0","0"],["-2","0"]],[["0","0"],["2","1"]]]}"#,
    )
    .unwrap();

    let out = run(&["cone", "--gens", gens.to_str().unwrap()]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["kind"], "cone");
    assert!(doc["result"]["pieces"].as_array().unwrap().len() > 1);

    let out = run(&["closure", "--input", gens.to_str().unwrap()]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["kind"], "closure");
    assert!(!doc["result"]["pieces"].as_array().unwrap().is_empty());

    let svg = run(&["cone", "--gens", gens.to_str().unwrap(), "--format", "svg"]);
    assert!(svg.status.success());
    assert!(String::from_utf8(svg.stdout).unwrap().starts_with("<svg"));
}

#[test]
fn check_diagram_flags_cancellation() {
    let dir = workdir("diagram");
    let pos = dir.join("pos.json");
    fs::write(
        &pos,
        r#"{"d":1,"terms":[
 {"s":[1],"coeff":[{"c":"3","t":"1","u":"0"},{"c":"2","t":"1","u":"1"}]},
 {"s":[0],"coeff":[{"c":"1","t":"0","u":"0"}]}]}"#,
    )
    .unwrap();
    let cancel = dir.join("cancel.json");
    fs::write(
        &cancel,
        r#"{"d":1,"terms":[
 {"s":[1],"coeff":[{"c":"1","t":"0","u":"0"},{"c":"-2","t":"0","u":"1"}]},
 {"s":[0],"coeff":[{"c":"1","t":"0","u":"0"}]}]}"#,
    )
    .unwrap();

    let out = run(&["check-diagram", "--input", pos.to_str().unwrap(), "--sigma", "1/2"]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["sigma"]["admissible"], Value::Bool(true));

    let out = run(&["check-diagram", "--input", cancel.to_str().unwrap(), "--sigma", "1/2"]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["sigma"]["admissible"], Value::Bool(false));
    let statuses: Vec<&str> = doc["result"]["sigma"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["status"].as_str().unwrap())
        .collect();
    assert!(statuses.contains(&"inadmissible"));

    let out = run(&["check-diagram", "--input", pos.to_str().unwrap(), "--sigma", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check-diagram", "--input", pos.to_str().unwrap(), "--rho", "3"]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["rho"]["admissible"], Value::Bool(true));
}

#[test]
fn selfcheck_passes_with_a_fixed_seed() {
    let out = run(&["selfcheck", "--seed", "0", "--instances", "4"]);
    let doc = parse_stdout(&out);
    assert_eq!(doc["result"]["ok"], Value::Bool(true));
    for check in doc["result"]["checks"].as_array().unwrap() {
        assert_eq!(check["failures"], serde_json::json!(0), "{}", check["name"]);
    }
}

#[test]
fn missing_input_is_a_validation_error() {
    let out = run(&["hypersurface", "--input", "/nonexistent/f.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    assert_eq!(err["code"], "io_error");

    let dir = workdir("badjson");
    let bad = dir.join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    let out = run(&["hypersurface", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    assert_eq!(err["code"], "parse_error");
}
