use std::path::{Path, PathBuf};
use std::process::Command;

use lqt_cli::job::{parse_job, parse_job_str};
use lqt_cli::CliError;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn lqt(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lqt")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn fixture(name: &str) -> String {
    fixtures().join(format!("{name}.json")).to_string_lossy().into_owned()
}

/// Compares with the golden file, or rewrites it when `LQT_UPDATE_GOLDEN` is set.
fn golden(name: &str, actual: &str) {
    let path = fixtures().join("golden").join(name);
    if std::env::var_os("LQT_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "report differs from {}", path.display());
}

const CORPUS: [(&str, &str); 7] = [
    ("point", "hc"),
    ("dual_numbers", "hh"),
    ("dual_split", "hh"),
    ("split_pair", "maps-check"),
    ("jordan", "lqt-check"),
    ("two_cycle", "lqt-check"),
    ("framed_vertex", "lqt-check"),
];

#[test]
fn corpus_reruns_to_golden_reports() {
    for (name, task) in CORPUS {
        let (code, out) = lqt(&[task, "--input", &fixture(name)]);
        assert_eq!(code, 0, "{name}: {out}");
        golden(&format!("{name}.{task}.json"), &out);
    }
}

#[test]
fn reports_are_deterministic() {
    let a = lqt(&["lqt-check", "--input", &fixture("jordan")]);
    let b = lqt(&["lqt-check", "--input", &fixture("jordan")]);
    assert_eq!(a, b);
}

#[test]
fn every_task_runs_on_the_framed_jordan_quiver() {
    let text = std::fs::read_to_string(fixture("jordan")).unwrap();
    let mut job: serde_json::Value = serde_json::from_str(&text).unwrap();
    let module = serde_json::json!({ "dim": 1, "basis": ["m"], "act": [[["1"]]] });
    job["framing"] = serde_json::json!({
        "plus": [{ "name": "w+", "to": "v", "module": module }],
        "minus": [{ "name": "w-", "to": "v", "module": module }],
    });
    let path = std::env::temp_dir().join(format!("lqt-framed-jordan-{}.json", std::process::id()));
    std::fs::write(&path, job.to_string()).unwrap();
    let p = path.to_string_lossy().into_owned();
    for task in ["hh", "hc", "tor", "cycles", "paths", "floop", "fpath", "maps-check"] {
        let (code, out) = lqt(&[task, "--input", &p, "--max-degree", "2", "--max-weight", "3"]);
        assert_eq!(code, 0, "{task}: {out}");
    }
    let (code, out) = lqt(&["lqt-check", "--input", &p, "--max-degree", "2", "--max-weight", "3", "--N", "3"]);
    assert_eq!(code, 0, "{out}");
    let (_, out) = lqt(&["paths", "--input", &p, "--max-weight", "4"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["details"]["count"], 3);
    std::fs::remove_file(path).ok();
}

#[test]
fn hc_of_the_ground_field() {
    let (code, out) = lqt(&["hc", "--input", &fixture("point")]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    let dims: Vec<u64> = report["by_degree"].as_array().unwrap().iter().skip(1).map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 0, 1, 0]);
}

#[test]
fn small_n_is_annotated_not_failed() {
    let (code, out) = lqt(&["lqt-check", "--input", &fixture("point"), "--N", "1", "--max-degree", "3"]);
    assert_eq!(code, 0, "{out}");
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(report["cells"].as_array().unwrap().iter().any(|c| c["verdict"] == "outside_stable_range"));
}

#[test]
fn flags_override_the_file() {
    let (_, out) = lqt(&["hc", "--input", &fixture("point"), "--max-degree", "5"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["input"]["caps"]["degree"], 5);
    assert_eq!(report["by_degree"].as_array().unwrap().len(), 7);
}

#[test]
fn input_errors_exit_2() {
    let (code, out) = lqt(&["hh", "--input", &fixture("non_associative")]);
    assert_eq!(code, 2);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["error"]["kind"], "validation");
    assert!(report["error"]["message"].as_str().unwrap().contains("(x, x, y)"));
    let (code, _) = lqt(&["hh", "--input", "/nonexistent/job.json"]);
    assert_eq!(code, 2);
    let (code, _) = lqt(&["nonsense", "--input", &fixture("point")]);
    assert_eq!(code, 2);
    let (code, out) = lqt(&["hc", "--input", &fixture("point"), "--N", "2"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn cyclic_tasks_refuse_positive_characteristic() {
    let text = std::fs::read_to_string(fixture("point")).unwrap();
    let mut job: serde_json::Value = serde_json::from_str(&text).unwrap();
    job["field"] = serde_json::json!({ "type": "prime", "p": 7 });
    let path = std::env::temp_dir().join(format!("lqt-prime-{}.json", std::process::id()));
    std::fs::write(&path, job.to_string()).unwrap();
    let (code, out) = lqt(&["hc", "--input", &path.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(out.contains("char_p"));
    let (code, _) = lqt(&["hh", "--input", &path.to_string_lossy()]);
    assert_eq!(code, 0);
    std::fs::remove_file(path).ok();
}

#[test]
fn minimal_job_parses() {
    let job = parse_job(&fixtures().join("point.json")).unwrap();
    assert_eq!(job.vertices.len(), 1);
    assert_eq!(job.problem().unwrap().dq.vertex_algebras.len(), 1);
}

#[test]
fn jordan_job_round_trips() {
    let job = parse_job(&fixtures().join("jordan.json")).unwrap();
    let canonical = job.to_canonical_json();
    assert_eq!(parse_job_str(&canonical).unwrap(), job);
    golden("jordan.job.json", &format!("{canonical}\n"));
}

#[test]
fn parse_errors_carry_a_location() {
    match parse_job_str("{\n  \"vertices\": {\"v\": 3}\n}") {
        Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
    match parse_job_str("{\"vertices\": {\"v\": {\"dim\": 1, \"basis\": [\"1\"], \"unit\": [\"one\"], \"mul\": [[[\"1\"]]]}}, \"caps\": {\"degree\": 1}}").unwrap().problem() {
        Err(CliError::Validation(v)) => assert!(v[0].contains("vertices.v.unit[0]")),
        other => panic!("expected a validation error, got {other:?}"),
    }
}
