//! End-to-end tests against the compiled `qf` binary.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn qf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qf_in(dir: &Path, args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qf"));
    cmd.current_dir(dir).args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

const WORKED_IDEAL: &str = "# degree-3 ideal on 5 variables\nn 5\n1 2 4\n1 2 5\n3 4 5\n1 4 5\n";

#[test]
fn analyze_ideal_reports_type_and_perfect_flags() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "ideal.txt", WORKED_IDEAL);
    let out = qf(&["analyze-ideal", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f_facet: (5,8,4)"));
    assert!(text.contains("f_nonface: (5,10,6)"));
    assert!(text.contains("type: (0,2,2)"));
    assert!(text.contains("upper_perfect: true"));
    assert!(text.contains("lower_perfect: false"));
}

#[test]
fn analyze_ideal_json_carries_the_same_facts() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "ideal.txt", WORKED_IDEAL);
    let text = stdout(&qf(&["analyze-ideal", &path]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&qf(&["analyze-ideal", &path, "--json"]))).unwrap();
    assert_eq!(json["type"], serde_json::json!([0, 2, 2]));
    assert_eq!(json["f_facet"], serde_json::json!([5, 8, 4]));
    assert_eq!(json["f_nonface"], serde_json::json!([5, 10, 6]));
    assert_eq!(json["is_quasi_f"], serde_json::json!(true));
    assert_eq!(json["upper_perfect"], serde_json::json!(true));
    // Every scalar fact in the text output must appear in the JSON too.
    assert_eq!(
        text.contains("quasi_f: true"),
        json["is_quasi_f"].as_bool().unwrap()
    );
    assert_eq!(
        text.contains("f_ideal: false"),
        !json["is_f_ideal"].as_bool().unwrap()
    );
}

#[test]
fn mixed_degree_ideal_has_no_perfect_flags() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "mixed.txt", "n 5\n1 2\n3 4\n3 5\n1 4 5\n");
    let out = qf(&["analyze-ideal", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("type: (0,1,0)"));
    assert!(text.contains("degree: -"));
    assert!(text.contains("upper_perfect: -"));
}

#[test]
fn malformed_ideal_exits_2_with_line_number() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "n 5\n1 x\n");
    let out = qf(&["analyze-ideal", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "stderr was: {err}");
}

#[test]
fn analyze_graph_on_the_disjoint_cliques() {
    let dir = tempdir().unwrap();
    let path = write(
        dir.path(),
        "g.txt",
        "n 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n5 6\n",
    );
    let out = qf(&["analyze-graph", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("type: (0,1)"));
    assert!(text.contains("connected: false"));
    assert!(text.contains("mn_graph: [4:2]"));
    assert!(text.contains("cm_verdict: yes"));
}

#[test]
fn analyze_graph_flags_the_non_quasi_f_example() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "g.txt", "n 5\n1 2\n2 3\n3 4\n3 5\n1 5\n");
    let out = qf(&["analyze-graph", &path]);
    assert_eq!(out.status.code(), Some(0), "a verdict is a success");
    let text = stdout(&out);
    assert!(text.contains("quasi_f_direct: false"));
    assert!(text.contains("failure_reason: dimension_mismatch"));
    assert!(text.contains("complement_triangle: {2,4,5}"));
}

#[test]
fn isolated_vertices_exit_2() {
    let dir = tempdir().unwrap();
    let path = write(dir.path(), "g.txt", "n 3\n1 2\n");
    let out = qf(&["analyze-graph", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts_the_four_vertex_classes() {
    let out = qf(&["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("total: 5"));
}

#[test]
fn enumerate_disconnected_yields_two_clique_graphs_only() {
    let out = qf(&["enumerate", "--n", "6", "--disconnected", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let graphs = json["graphs"].as_array().unwrap();
    assert!(!graphs.is_empty());
    // Every emitted graph must re-parse through analyze-graph as a
    // disconnected [m:n]-graph.
    let dir = tempdir().unwrap();
    for (i, g) in graphs.iter().enumerate() {
        let n = g["n"].as_u64().unwrap();
        let mut file = format!("n {n}\n");
        for e in g["edges"].as_array().unwrap() {
            file.push_str(&format!("{} {}\n", e[0], e[1]));
        }
        let path = write(dir.path(), &format!("g{i}.txt"), &file);
        let text = stdout(&qf(&["analyze-graph", &path]));
        assert!(text.contains("connected: false"), "graph {i}: {text}");
        assert!(text.contains("mn_graph: ["), "graph {i}: {text}");
    }
}

#[test]
fn qf_cap_env_lowers_the_enumeration_cap() {
    let dir = tempdir().unwrap();
    let out = qf_in(dir.path(), &["enumerate", "--n", "5"], &[("QF_CAP", "4")]);
    assert_eq!(out.status.code(), Some(2));
    let out = qf_in(dir.path(), &["enumerate", "--n", "4"], &[("QF_CAP", "4")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn enumerate_complexes_includes_the_worked_complex() {
    let out = qf(&[
        "enumerate-complexes",
        "--n",
        "5",
        "--dim",
        "2",
        "--type",
        "0,2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("type (0,2,2)"));
    assert!(!text.contains("total: 0"));
}

#[test]
fn construct_cm_writes_a_replayable_graph_file() {
    let dir = tempdir().unwrap();
    let graph_path = dir.path().join("out.graph");
    let out = qf(&[
        "construct-cm",
        "--n",
        "7",
        "--b",
        "1",
        "--out",
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("join_count: 1"));
    assert!(text.contains("cm_verdict: yes"));
    // Replay the emitted file.
    let replay = qf(&["analyze-graph", graph_path.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(0));
    assert!(stdout(&replay).contains("type: (0,1)"));
}

#[test]
fn construct_cm_boundary_modes() {
    let strict = qf(&["construct-cm", "--n", "4", "--b", "-2"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("extended mode would accept"));

    let extended = qf(&["construct-cm", "--n", "4", "--b", "-2", "--extended"]);
    assert_eq!(
        extended.status.code(),
        Some(0),
        "a warned verdict is a success"
    );
    let text = stdout(&extended);
    assert!(text.contains("cm_verdict: no"));
    assert!(text.contains("exception: pattern 1"));
    assert!(String::from_utf8_lossy(&extended.stderr).contains("warning"));
}

#[test]
fn construct_nr_builds_the_predicted_type() {
    let out = qf(&["construct-nr", "--n", "5", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("parts: [5:3]"));
    assert!(text.contains("b: 2"));
    assert!(text.contains("cm_verdict: yes"));

    let bad = qf(&["construct-nr", "--n", "5", "--r", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_all_passes_at_default_caps() {
    let out = qf(&["verify", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("suite ") && l.contains(": pass"))
            .count(),
        11
    );
    assert!(text.contains("overall: pass"));
}

#[test]
fn enumerate_complexes_cap_exits_2() {
    let out = qf(&["enumerate-complexes", "--n", "7", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_suites_and_exit_codes() {
    let out = qf(&["verify", "--suite", "census_n4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("suite census_n4: pass"));

    let out = qf(&["verify", "--suite", "thm_3_4", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));

    let out = qf(&["verify", "--suite", "thm_9_9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn workers_flag_is_accepted() {
    let out = qf(&["verify", "--suite", "census_n4", "--workers", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = qf(&["enumerate", "--n", "5", "--json", "--workers", "1"]);
    let two = qf(&["enumerate", "--n", "5", "--json", "--workers", "2"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn verify_json_report_structure() {
    let out = qf(&["verify", "--suite", "n_formula", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["overall"], serde_json::json!(true));
    let suites = json["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["id"], serde_json::json!("n_formula"));
    assert_eq!(suites[0]["pass"], serde_json::json!(true));
    assert!(suites[0]["cases_run"].as_u64().unwrap() > 0);
    assert_eq!(suites[0]["violations"], serde_json::json!([]));
}

#[test]
fn out_flag_redirects_the_document() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("census.json");
    let out = qf(&[
        "enumerate",
        "--n",
        "4",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["total"], serde_json::json!(5));
}
