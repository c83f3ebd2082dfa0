use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bv-ehrhart")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (String, Value) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    (text, v)
}

#[test]
fn alpha_table_rows() {
    let o = run(&["alpha-table", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["2", "1+2+1", "7/36", "12", "yes"]));
    assert!(!text.contains("computing"), "progress must go to stderr");
}

#[test]
fn alpha_table_json_schema() {
    let (_, v) = json(&["alpha-table", "3", "--json"]);
    assert_eq!(v["n"], 3);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 8);
    let two = entries.iter().find(|e| e["subset"] == serde_json::json!([2])).unwrap();
    assert_eq!(two["alpha"], "7/36");
    assert_eq!(two["composition"], serde_json::json!([1, 2, 1]));
    assert_eq!(two["orbit_size"], "12");
    assert_eq!(two["positive"], true);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["alpha-table", "4", "--json"][..],
        &["ehrhart", "--hypersimplex", "2", "--n", "5", "--dilations", "3", "--json"],
        &["count", "--weights", "1,1,1", "--t", "2", "--json"],
        &["psi2", "--gens", "0,-1;2,-1", "--json"],
        &["psi3", "--gens", "1,0,0;0,1,0;0,0,1", "--json"],
        &["verify", "3", "--json"],
        &["reproduce", "--only", "psi", "--json"],
        &["mcmullen", "--weights", "2,1,3", "--json"],
        &["pick", "--vertices", "0,0;2,0;0,1", "--json"],
    ] {
        let (text, v) = json(args);
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(text, again, "{args:?}");
    }
}

#[test]
fn ehrhart_commands() {
    assert_eq!(stdout(&run(&["ehrhart", "--weights", "0,0,0"])), "1\n");
    assert_eq!(
        stdout(&run(&["ehrhart", "--hypersimplex", "1", "--n", "5"])),
        "1 137/60 15/8 17/24 1/8 1/120\n"
    );
    assert_eq!(stdout(&run(&["ehrhart", "--weights", "1,0,1", "--n", "3"])), "1 11/3 5 10/3\n");
    assert_eq!(run(&["ehrhart", "--weights", "1,-1,0"]).status.code(), Some(2));
    assert_eq!(run(&["ehrhart"]).status.code(), Some(2));
}

#[test]
fn counts_and_cones() {
    assert_eq!(stdout(&run(&["count", "--weights", "1,0,0,0,0", "--t", "3"])), "56\n");
    assert_eq!(stdout(&run(&["count", "--weights", "1,1", "--t", "1", "--brute"])), "7\n");
    assert_eq!(stdout(&run(&["psi2", "--gens", "0,-1;2,-1"])).lines().next(), Some("3/10"));
    assert_eq!(stdout(&run(&["psi3", "--gens", "1,0,0;0,1,0;0,0,1"])), "1/8\n");
    assert_eq!(run(&["psi2", "--gens", "1,1;-1,-1"]).status.code(), Some(2));
    assert_eq!(run(&["psi3", "--gens", "1,0,0;0,1,0;1,1,2"]).status.code(), Some(2));
}

#[test]
fn verify_small() {
    for n in ["1", "3"] {
        let o = run(&["verify", n]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).ends_with("all checks passed\n"));
    }
    assert_eq!(run(&["verify", "9"]).status.code(), Some(2));
}

#[test]
fn reproduce_manifest() {
    let o = run(&["reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("all ") && last.ends_with(" checks passed"), "{last}");
    assert!(!text.contains("FAIL"));

    let subset = stdout(&run(&["reproduce", "--only", "alpha-n5"]));
    assert_eq!(subset.lines().filter(|l| l.starts_with("PASS [alpha-n5]")).count(), 32);
    assert_eq!(subset.lines().last(), Some("all 32 checks passed"));
}

#[test]
fn mcmullen_and_pick() {
    let o = run(&["mcmullen", "--weights", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equal"));
    assert_eq!(run(&["mcmullen", "--weights", "1,0,1"]).status.code(), Some(2));

    let o = run(&["pick", "--vertices", "0,0;3,0;0,3"]);
    assert!(stdout(&o).starts_with("lattice points: 10\n"));
    assert_eq!(run(&["pick", "--vertices", "0,0;1,0;2,0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["alpha-table", "0"]).status.code(), Some(2));
    assert_eq!(run(&["alpha-table", "9"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["reproduce", "--only", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
