use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn topocount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topocount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_examples() {
    for (n, want) in [
        ("0", ["1", "1", "1", "1"]),
        ("2", ["4", "3", "3", "2"]),
        ("3", ["29", "9", "19", "5"]),
    ] {
        let out = topocount(&["--format", "json", "count", n]);
        assert!(out.status.success());
        let doc = json(&out);
        assert_eq!(doc["schema"], "topocount-report");
        assert_eq!(doc["kind"], "count");
        let body = &doc["body"];
        let got = ["labeled", "unlabeled", "labeled_t0", "unlabeled_t0"]
            .map(|k| body[k].as_str().unwrap().to_string());
        assert_eq!(got, want.map(String::from));
    }
    let table = stdout(&topocount(&["count", "2"]));
    assert_eq!(
        table,
        "n  labeled  unlabeled  labeled_t0  unlabeled_t0\n2  4        3          3           2\n"
    );
}

#[test]
fn count_past_the_cap_points_to_ingestion() {
    let out = topocount(&["count", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ingested"));
}

#[test]
fn warm_and_cold_caches_give_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let uncached = topocount(&["--format", "json", "count", "5"]);
    let cold = topocount(&["--cache-dir", cache, "--format", "json", "count", "5"]);
    let cache_file = dir.path().join("reps-n5.txt");
    let text = fs::read_to_string(&cache_file).unwrap();
    assert!(text.starts_with("# topocount reps n=5 count=139\n"));
    assert_eq!(text.lines().count(), 140);
    let warm = topocount(&["--cache-dir", cache, "--format", "json", "count", "5"]);
    assert_eq!(cold.stdout, uncached.stdout);
    assert_eq!(warm.stdout, cold.stdout);
    for format in ["json", "csv", "table"] {
        let a = topocount(&["--cache-dir", cache, "--format", format, "reps", "5"]);
        let b = topocount(&["--format", format, "reps", "5"]);
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn stale_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let file = dir.path().join("reps-n3.txt");
    fs::write(
        &file,
        "# topocount reps n=3 count=2\nn=3;ground=7;opens=0,7\n",
    )
    .unwrap();
    let out = topocount(&["--cache-dir", cache, "--format", "csv", "count", "3"]);
    assert_eq!(
        stdout(&out),
        "n,labeled,unlabeled,labeled_t0,unlabeled_t0\n3,29,9,19,5\n"
    );
    assert!(fs::read_to_string(&file)
        .unwrap()
        .starts_with("# topocount reps n=3 count=9\n"));
}

#[test]
fn reps_lines_are_topologies() {
    let out = topocount(&["reps", "3"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 9);
    assert!(lines.iter().all(|l| l.starts_with("n=3;ground=7;opens=0,")));
}

#[test]
fn verify_examples() {
    let out = topocount(&["--format", "json", "verify", "2", "2"]);
    assert!(out.status.success());
    let body = &json(&out)["body"];
    assert_eq!(body["injectivity"]["distinct_images"], 9);
    assert_eq!(body["injectivity"]["collisions"], serde_json::json!([]));
    assert_eq!(body["injectivity_t0"]["distinct_images"], 4);
    assert_eq!(body["inequalities"]["checks"].as_array().unwrap().len(), 4);
    assert_eq!(body["holds"], true);
    assert!(topocount(&["verify", "1", "1"]).status.success());
    assert_eq!(topocount(&["verify", "4", "3"]).status.code(), Some(2));
}

#[test]
fn bounds_examples() {
    let out = topocount(&["--format", "csv", "bounds", "f", "17", "31"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",derived-bound")));
    let out = topocount(&["--format", "csv", "bounds", "f", "2", "5"]);
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",exact")));
    let out = topocount(&["--format", "csv", "bounds", "T", "19", "35"]);
    assert_eq!(stdout(&out).lines().count(), 18);
    let by_id = topocount(&["--format", "csv", "bounds", "A001930", "17", "31"]);
    assert_eq!(
        by_id.stdout,
        topocount(&["--format", "csv", "bounds", "f", "17", "31"]).stdout
    );
}

#[test]
fn bounds_reads_user_bfiles() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("mine.txt");
    fs::write(&good, "# comment\n1 1\n2 3\n3 9\n").unwrap();
    let out = topocount(&[
        "--format",
        "csv",
        "bounds",
        good.to_str().unwrap(),
        "4",
        "4",
    ]);
    assert_eq!(
        stdout(&out),
        "n,bound,split_k,factor_a,factor_b,source\n4,9,1,1,9,derived-bound\n"
    );

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 1\n3 9\n").unwrap();
    let out = topocount(&["bounds", bad.to_str().unwrap(), "4", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = topocount(&[
        "bounds",
        dir.path().join("none.txt").to_str().unwrap(),
        "4",
        "4",
    ]);
    assert_eq!(missing.status.code(), Some(3));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn wsum_over_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.txt",
        "# indiscrete pair\nn=2;ground=3;opens=0,3\n",
    );
    let b = write(
        dir.path(),
        "b.txt",
        "n=1;ground=4;opens=0,4\n\nn=1;ground=1;opens=0,1\n",
    );
    let out = topocount(&["wsum", &a, &b]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n=3;ground=7;opens=0,3,7\nn=3;ground=7;opens=0,3,7\n"
    );
    let doc = json(&topocount(&["--format", "json", "wsum", &a, &b]));
    assert_eq!(doc["body"][0]["operation"], "w-sum");
    assert_eq!(doc["body"][1]["operation"], "phi");

    let bad = write(
        dir.path(),
        "bad.txt",
        "n=1;ground=1;opens=0,1\nn=2;ground=3;opens=1,3\n",
    );
    let out = topocount(&["wsum", &a, &bad]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn oracle_check_examples() {
    assert!(topocount(&["oracle-check", "3"]).status.success());
    assert!(topocount(&["oracle-check", "0"]).status.success());
    assert_eq!(topocount(&["oracle-check", "5"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        topocount(&["--jobs", "0", "count", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        topocount(&["--budget", "-1", "count", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(topocount(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(topocount(&["bounds", "f", "5", "2"]).status.code(), Some(2));
}

#[test]
fn tiny_budget_stops_enumeration() {
    let out = topocount(&["--jobs", "1", "--budget", "0.000001", "count", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
