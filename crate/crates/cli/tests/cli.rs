use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein336")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["fixed"]).status.code(), Some(2));
    assert_eq!(run(&["fixed", "--element", "g7", "--matrix", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--locus", "T5"]).status.code(), Some(2));
    assert_eq!(run(&["stabilizer", "--point", "xi1", "--in", "K"]).status.code(), Some(2));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["fixed", "--element", "g8"]).status.code(), Some(2));
    assert_eq!(run(&["fixed", "--element", "1"]).status.code(), Some(0));
    assert_eq!(run(&["fixed", "--element", "0"]).status.code(), Some(2));
    assert_eq!(run(&["fixed", "--matrix", "[w,0,0];[0,1,0];[0,0,1]"]).status.code(), Some(2));
    assert_eq!(run(&["stabilizer", "--point", "[1/2,0,0]"]).status.code(), Some(2));
    assert_eq!(run(&["orbit", "--point", "beta2"]).status.code(), Some(2));
}

#[test]
fn fixed_g7_lists_eta_points() {
    let v = json(&["fixed", "--element", "g7"]);
    assert_eq!(v["count"], 7);
    let points = v["points"].as_array().unwrap();
    assert!(points.iter().any(|p| p["point"] == "[0,0,0,0,0,0]"));
    let mut names: Vec<&str> =
        points.iter().filter(|p| p["point"] != "[0,0,0,0,0,0]").map(|p| p["name"].as_str().unwrap()).collect();
    names.sort();
    assert_eq!(names, (1..7).map(|i| format!("eta{i}")).collect::<Vec<_>>());
}

#[test]
fn fixed_by_matrix_agrees_with_name() {
    let by_name = json(&["fixed", "--element", "m1"]);
    let by_matrix = json(&["fixed", "--matrix", "[-1,0,0];[0,-1,0];[0,0,-1]"]);
    assert_eq!(by_name, by_matrix);
    assert_eq!(by_name["count"], 64);
    assert_eq!(json(&["fixed", "--element=-g7"])["count"], 1);
}

#[test]
fn stabilizer_is_consistent_with_orbit() {
    for (p, ambient, order) in [("[1/2,0,0,0,0,0]", "G", 336), ("eta1", "H", 168), ("beta0011", "G", 336)] {
        let s = json(&["stabilizer", "--point", p, "--in", ambient]);
        let o = json(&["orbit", "--point", p, "--in", ambient]);
        let stab = s["order"].as_u64().unwrap();
        assert_eq!(order % stab, 0);
        assert_eq!(stab * o["size"].as_u64().unwrap(), order);
        assert_eq!(s["elements"].as_array().unwrap().len() as u64, stab);
        assert!(!s["label"].as_str().unwrap().is_empty());
    }
}

#[test]
fn points_round_trip_through_text() {
    let o = json(&["orbit", "--point", "omega01", "--in", "G"]);
    for entry in o["orbit"].as_array().unwrap() {
        let text = entry["point"].as_str().unwrap();
        let back = json(&["orbit", "--point", text, "--in", "G"]);
        assert_eq!(back["point"].as_str().unwrap(), text);
        assert_eq!(back["size"], o["size"]);
    }
    let named = json(&["stabilizer", "--point", "kappa3"]);
    let literal = json(&["stabilizer", "--point", named["point"].as_str().unwrap()]);
    assert_eq!(named, literal);
}

#[test]
fn matrices_round_trip_through_text() {
    let table = json(&["group", "build"]);
    let elements = table["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 336);
    for el in elements.iter().step_by(37) {
        let rows: Vec<String> = el["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                let entries: Vec<&str> = r.as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        let fixed = run(&["fixed", "--matrix", &rows.join("; ")]);
        let id = el["id"].as_u64().unwrap();
        if id == 0 {
            assert_eq!(fixed.status.code(), Some(2));
            continue;
        }
        let v: Value = serde_json::from_slice(&fixed.stdout).unwrap();
        assert_eq!(v["element"]["id"].as_u64(), Some(id));
    }
}

#[test]
fn group_build_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = run(&["group", "build", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 336);
    assert_eq!(v["h_order"], 168);
    let refl = v["elements"].as_array().unwrap().iter().filter(|e| e["reflection"] == true).count();
    assert_eq!(refl, 21);
}

#[test]
fn verify_is_deterministic_and_exit_code_reflects_failures() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, t) = (dir.path().join("a.json"), dir.path().join("b.json"), dir.path().join("a.tsv"));
    let first = run(&["verify", "--json", a.to_str().unwrap(), "--tsv", t.to_str().unwrap()]);
    let second = run(&["verify", "--json", b.to_str().unwrap()]);
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    let outcomes = v.as_array().unwrap();
    assert_eq!(outcomes.len(), 14);
    for o in outcomes {
        let keys: Vec<&String> = o.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
    let any_fail = outcomes.iter().any(|o| o["status"] == "fail");
    assert_eq!(first.status.code(), Some(if any_fail { 1 } else { 0 }));
    let class = outcomes.iter().find(|o| o["name"] == "conjugacy-classes").unwrap();
    assert_eq!(class["status"], "discrepancy");
    let tsv = std::fs::read_to_string(&t).unwrap();
    assert_eq!(tsv.lines().count(), 15);
    assert!(tsv.lines().all(|l| l.split('\t').count() == 5));
}
