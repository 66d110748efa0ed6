use std::process::{Command, Output};

fn spreadlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spreadlab")).args(args).env_remove("SPREADLAB_QUARANTINE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_k4_text() {
    let o = spreadlab(&["analyze", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("S (adjacency)          4\n"));
    assert!(text.contains("S_line (line graph)    6\n"));
    assert!(text.lines().any(|l| l.contains("gregory_upper") && l.contains("4.732050808")));
}

#[test]
fn analyze_json_schema() {
    let o = spreadlab(&["analyze", "C~", "--json", "--bounds", "gregory_upper"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    let g = &v["graphs"][0];
    assert_eq!(g["graph6"], "C~");
    assert_eq!(g["summary"]["spread"].as_f64().map(|x| (x - 4.0).abs() < 1e-9), Some(true));
    assert_eq!(g["bounds"].as_array().unwrap().len(), 1);
    assert_eq!(g["bounds"][0]["bound_id"], "gregory_upper");
}

#[test]
fn analyze_empty_graph() {
    let o = spreadlab(&["analyze", "B?", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let s = &v["graphs"][0]["summary"];
    assert_eq!(s["spread"], 0.0);
    assert!(s["line_spread"].is_null());
}

#[test]
fn analyze_pendant_cycle_from_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pendant_cycle.txt");
    std::fs::write(&path, "# 5-cycle with a pendant path\n9 9\n0 1\n1 2\n2 3\n3 4\n0 4\n4 5\n5 6\n6 7\n7 8\n").unwrap();
    let o = spreadlab(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("girth=5 h=4 h_global=7 D0=7"));
    assert!(text.contains("condition=holds"));
    assert!(text.contains("S (adjacency)          4.17"));
}

#[test]
fn analyze_reports_the_degree_two_violation() {
    // C₈: the exact total-graph spread formula does not hold for r = 2
    let g6 = stdout(&spreadlab(&["family", "cycle", "8"]));
    let o = spreadlab(&["analyze", g6.trim(), "--bounds", "regular_total_spread"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("VIOLATION"));
}

#[test]
fn parse_errors_exit_two() {
    let o = spreadlab(&["analyze", "C~~~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(spreadlab(&["analyze", "C~", "--bounds", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_writes_ledgers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let o = spreadlab(&[
        "verify",
        "--n-max",
        "6",
        "--connected",
        "--bounds",
        "spread_vs_line_spread",
        "--csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["ledger.json", "ledger.txt", "timings.json", "details.csv"] {
        assert!(out.join(f).exists(), "{f}");
    }
    let ledger: serde_json::Value = serde_json::from_slice(&std::fs::read(out.join("ledger.json")).unwrap()).unwrap();
    assert_eq!(ledger["passed"], true);
    let witnesses = ledger["bounds"][0]["tight_witnesses"].as_array().unwrap();
    // one labeling of K_{3,3}: parts {0,1,2} and {3,4,5}
    assert!(witnesses.iter().any(|w| w == "EFz_"), "{witnesses:?}");
    assert!(stdout(&o).ends_with("violations 0 => PASS\n"));
}

#[test]
fn verify_all_graphs_up_to_five() {
    let o = spreadlab(&["verify", "--n-max", "5", "--bounds", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_capacity_errors() {
    assert_eq!(spreadlab(&["verify", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(spreadlab(&["verify", "--n-max", "7", "--bounds", "regular_total_spread"]).status.code(), Some(2));
}

#[test]
fn verify_quarantine_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tsv");
    std::fs::write(&bad, "not_a_bound\tC~\tnote\n").unwrap();
    // an unreadable quarantine file named on the command line is an error
    let o = spreadlab(&["verify", "--n-max", "3", "--quarantine", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    // the environment variable is honored when no flag is given
    let o = Command::new(env!("CARGO_BIN_EXE_spreadlab"))
        .args(["verify", "--n-max", "3"])
        .env("SPREADLAB_QUARANTINE", &bad)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let good = dir.path().join("good.tsv");
    std::fs::write(&good, "# nothing\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_spreadlab"))
        .args(["verify", "--n-max", "3", "--quarantine", good.to_str().unwrap()])
        .env("SPREADLAB_QUARANTINE", &bad)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn family_graph6_and_errors() {
    let o = spreadlab(&["family", "cycle", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let c5 = stdout(&o);
    assert_eq!(c5.trim().len(), 3);
    assert_eq!(spreadlab(&["family", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(spreadlab(&["family", "join_family", "3", "1", "2"]).status.code(), Some(2));
    assert_eq!(spreadlab(&["family", "wheel", "5"]).status.code(), Some(2));
}

#[test]
fn family_join_comparison() {
    let o = spreadlab(&["family", "join_family", "5", "1", "1", "--emit", "analysis"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("line spectrum: eigensolve vs closed form"));
    assert!(text.contains("spread (closed form) 6.372281323"));
    let o = spreadlab(&["family", "join_family", "6", "1", "2", "--emit", "analysis", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["join_comparison"]["max_deviation"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["family"]["join_family"]["k"], 1);
}

#[test]
fn family_complete_bipartite_gregory_tight() {
    let o = spreadlab(&["family", "complete_bipartite", "3", "3", "--emit", "analysis", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let bounds = v["analysis"]["bounds"].as_array().unwrap();
    let gregory = bounds.iter().find(|b| b["bound_id"] == "gregory_upper").unwrap();
    assert_eq!(gregory["tight"], true);
}

#[test]
fn oracle_exit_codes() {
    let o = spreadlab(&["oracle", "--suite", "join"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("join_spectrum") && !text.contains("regular_total"));
    assert_eq!(spreadlab(&["oracle", "--suite", "join", "--perturb", "1e-3"]).status.code(), Some(1));
    assert_eq!(spreadlab(&["oracle", "--suite", "bogus"]).status.code(), Some(2));
}
