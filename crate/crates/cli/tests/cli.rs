use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cycle_ei::{verify, Hypergraph};

fn cycle_ei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycle-ei"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_five_uniform_minimal_writes_twelve_edges() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    let o = cycle_ei(&[
        "construct",
        "--k",
        "5",
        "--n",
        "20",
        "--variant",
        "thm9",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("|E| = 12"));
    let h = Hypergraph::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(h.len(), 12);
    assert_eq!(h.uniformity(), Some(5));
}

#[test]
fn construct_k3_to_stdout() {
    let o = cycle_ei(&["construct", "--k", "3", "--n", "5"]);
    assert!(o.status.success());
    let h = Hypergraph::from_json(&stdout(&o)).unwrap();
    assert_eq!(h.len(), 5);
    assert!(stderr(&o).contains("(3) x5"));
}

#[test]
fn construct_k4_below_eleven_is_rejected() {
    let o = cycle_ei(&["construct", "--k", "4", "--n", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n ≥ 11"), "{}", stderr(&o));
    let o = cycle_ei(&["construct", "--k", "4", "--n", "10", "--variant", "k4-thm5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n ≥ 11"));
}

#[test]
fn unknown_variant_and_missing_flags_are_usage_errors() {
    assert_eq!(
        cycle_ei(&["construct", "--k", "5", "--n", "20", "--variant", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cycle_ei(&["construct", "--k", "5"]).status.code(), Some(2));
    assert_eq!(
        cycle_ei(&["search", "--k", "4", "--n", "7"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_reports_triple_generation_at_fourteen() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    let o = cycle_ei(&[
        "construct",
        "--k",
        "4",
        "--n",
        "14",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success());
    let o = cycle_ei(&["verify", path_str(&out), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m = v["multiplicity"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["edge"] == serde_json::json!([8, 9]))
        .unwrap();
    assert_eq!(m["pairs"], 3);
    assert!(stdout(&cycle_ei(&["verify", path_str(&out)])).contains("{8,9} x3"));
}

#[test]
fn verify_eighteen_and_n_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    cycle_ei(&[
        "construct",
        "--k",
        "5",
        "--n",
        "18",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(
        cycle_ei(&["verify", path_str(&out), "--n", "18"])
            .status
            .code(),
        Some(0)
    );
    let o = cycle_ei(&["verify", path_str(&out), "--n", "19"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n = 18"));
}

#[test]
fn verify_empty_edge_list_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    fs::write(&path, r#"{"n": 6, "edges": []}"#).unwrap();
    let o = cycle_ei(&["verify", path_str(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("EI(H) = C_6: no"));
}

#[test]
fn verify_malformed_file_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"n": 6, "edges": [[1, 9]]}"#).unwrap();
    let o = cycle_ei(&["verify", path_str(&path)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid hypergraph file"));
    assert_eq!(
        cycle_ei(&["verify", "/nonexistent/h.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn export_dot_is_deterministic_with_expected_groups() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    cycle_ei(&["construct", "--k", "4", "--n", "12", "--out", path_str(&h)]);
    let a = cycle_ei(&["export", path_str(&h), "--format", "dot"]);
    let b = cycle_ei(&["export", path_str(&h), "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let dot = stdout(&a);
    let cycle_nodes = (1..=12)
        .filter(|i| dot.contains(&format!("  v{i} [label=\"{i}\"")))
        .count();
    assert_eq!(cycle_nodes, 12);
    assert_eq!(dot.matches("subgraph \"cluster_hyperedge_").count(), 9);
}

#[test]
fn export_json_round_trip_preserves_verification() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let again = dir.path().join("again.json");
    cycle_ei(&["construct", "--k", "5", "--n", "21", "--out", path_str(&h)]);
    let o = cycle_ei(&[
        "export",
        path_str(&h),
        "--format",
        "json",
        "--out",
        path_str(&again),
    ]);
    assert!(o.status.success());
    let first = fs::read_to_string(&h).unwrap();
    let second = fs::read_to_string(&again).unwrap();
    assert_eq!(first, second);
    let in_memory = verify(
        &cycle_ei::build(
            cycle_ei::ConstructionSpec::new(5, 21, cycle_ei::Variant::K5ThreeTwo).unwrap(),
        )
        .unwrap(),
    );
    assert_eq!(verify(&Hypergraph::from_json(&second).unwrap()), in_memory);
}

#[test]
fn export_unknown_format() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    cycle_ei(&["construct", "--k", "3", "--n", "6", "--out", path_str(&h)]);
    let o = cycle_ei(&["export", path_str(&h), "--format", "svg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown export format"));
}

#[test]
fn lp_prints_exact_fractions() {
    let o = cycle_ei(&["lp"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("optimum: 3/5"));
    assert!(text.contains("x5 = 1/5"));
    assert!(text.contains("x32 = 2/5"));
    assert!(stdout(&cycle_ei(&["lp", "--no-x5"])).contains("optimum: 2/3"));
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let o = cycle_ei(&[
        "search",
        "--k",
        "3",
        "--n",
        "5",
        "--max-edges",
        "5",
        "--witness",
        path_str(&w),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let h = Hypergraph::from_json(&fs::read_to_string(&w).unwrap()).unwrap();
    assert!(verify(&h).is_cycle);

    let o = cycle_ei(&["search", "--k", "4", "--n", "7", "--max-edges", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not_exists"));

    let o = cycle_ei(&[
        "search",
        "--k",
        "4",
        "--n",
        "13",
        "--max-edges",
        "10",
        "--budget",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("budget_exhausted"));

    let o = cycle_ei(&[
        "search",
        "--k",
        "3",
        "--n",
        "6",
        "--minimum",
        "--threads",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimum |E| = 6"));

    let o = cycle_ei(&["search", "--k", "2", "--n", "6", "--max-edges", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("3 <= k < n"));
}

#[test]
fn analyze_prints_profiles_and_capacity() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    cycle_ei(&[
        "construct",
        "--k",
        "5",
        "--n",
        "20",
        "--variant",
        "k5-thm9",
        "--out",
        path_str(&h),
    ]);
    let o = cycle_ei(&["analyze", path_str(&h)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("(3,2): 8"));
    assert!(text.contains("(5): 4"));
    assert!(text.contains("total half-edge capacity: 40"));
}
