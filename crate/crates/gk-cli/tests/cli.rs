use std::process::{Command, Output};

use gk_cli::GraphDocument;
use gk_core::cocliques::theta_structure;
use gk_core::GroupSpec;

fn gk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gk")).args(args).output().expect("run gk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn suzuki_dot_has_isolated_vertices() {
    let o = gk(&["graph", "2B2:8", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"2B2:8\" {"));
    assert_eq!(dot.matches("shape=").count(), 4);
    assert!(!dot.contains(" -- "));
    assert!(dot.contains("\"S_3\" [label=\"S_3\""));
}

#[test]
fn m11_json_edges() {
    let o = gk(&["graph", "Spor:M11", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = GraphDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.t, 3);
    assert_eq!(doc.theta, vec!["5", "11"]);
    assert_eq!(doc.theta_prime, vec![vec!["2"], vec!["3"]]);
    // element orders of M11 give 2 ~ 3 only
    let edges: Vec<(String, String)> = doc.edges.iter().map(|e| (e.a.clone(), e.b.clone())).collect();
    assert_eq!(edges, vec![("2".to_string(), "3".to_string())]);
}

#[test]
fn json_keys_are_stable() {
    let o = gk(&["graph", "E7:2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["classes", "edges", "group", "t", "theta", "theta_prime", "unresolved", "vertices"]);
}

#[test]
fn json_round_trip() {
    for g in ["B:4:3", "E8:2", "2A:5:4", "Alt:19", "Spor:M23", "2F4:8", "G2:4"] {
        let (graph, report) = theta_structure(&GroupSpec::parse(g).unwrap()).unwrap();
        let doc = GraphDocument::compact(&graph, &report);
        let back = GraphDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{g}");
        let rebuilt = back.to_graph().unwrap();
        assert_eq!(rebuilt.vertices, graph.vertices, "{g}");
        assert_eq!(rebuilt.classes, graph.classes, "{g}");
        assert_eq!(rebuilt.edges(), graph.edges(), "{g}");
        assert_eq!(rebuilt.unresolved(), graph.unresolved(), "{g}");
        let cli = GraphDocument::from_json(&stdout(&gk(&["graph", g, "--format", "json"]))).unwrap();
        assert_eq!(cli, doc, "{g}");
    }
}

#[test]
fn explicit_primes() {
    let o = gk(&["graph", "B:2:3", "--explicit-primes", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = GraphDocument::from_json(&stdout(&o)).unwrap();
    let mut ids: Vec<&str> = doc.vertices.iter().map(|v| v.id.as_str()).collect();
    ids.sort();
    assert_eq!(ids, ["2", "3", "5"]);
    assert!(doc.to_graph().is_err());
}

#[test]
fn factor_budget_exit_code() {
    // a budget of 10 trial steps cannot factor the large class residues
    let o = Command::new(env!("CARGO_BIN_EXE_gk"))
        .args(["graph", "A:13:128", "--explicit-primes"])
        .env("GK_FACTOR_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn coclique_examples() {
    let o = gk(&["coclique", "E8:5"]);
    assert!(stdout(&o).starts_with("E8:5: t = 12\n"));
    let o = gk(&["coclique", "Alt:11", "--all"]);
    let text = stdout(&o);
    assert!(text.contains("maximum cocliques (1):\n  {5,7,11}\n"), "{text}");
    let o = gk(&["coclique", "Tits"]);
    assert_eq!(stdout(&o), "Tits: t = 3\n{3,5,13}\n");
    let o = gk(&["coclique", "Alt:10", "--all"]);
    assert!(stdout(&o).contains("Θ = {7}\nΘ' = {2} {5}\n"));
}

#[test]
fn oracle_examples() {
    for g in ["B:4:3", "D:5:2", "2F4:8"] {
        let o = gk(&["oracle", g]);
        assert_eq!(o.status.code(), Some(0), "{g}");
        assert!(stdout(&o).contains(": agree ("), "{g}");
    }
    assert_eq!(gk(&["oracle", "A:4:3"]).status.code(), Some(2));
}

#[test]
fn input_errors() {
    for args in [&["graph", "B:1:3"][..], &["graph", "A:3:6"], &["coclique", "Spor:M13"], &["graph", "Q:2"]] {
        let o = gk(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(gk(&["verify", "--table", "2", "--q-max", "256"]).status.code(), Some(2));
    assert_eq!(gk(&["verify", "--table", "5"]).status.code(), Some(2));
}

#[test]
fn verify_tables() {
    let o = gk(&["verify", "--table", "4", "--q-max", "16", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass table 4 row 19 [q=8]: 1/1 groups"));

    let o = gk(&["verify", "--table", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("table 1: 26 of 27 groups match"), "{text}");
    assert!(text.ends_with("first counterexample: Spor:M23\n"));

    let o = gk(&["verify", "--table", "alt", "--n-max", "60"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first counterexample: Alt:9"));
    let o = gk(&["verify", "--table", "alt", "--n-max", "60", "--exact"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [&["graph", "E8:3", "--format", "json"][..], &["verify", "--table", "3", "--n-max", "7", "--q-max", "9"]] {
        let a = gk(args);
        let b = gk(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
