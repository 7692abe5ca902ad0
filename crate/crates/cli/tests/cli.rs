use std::process::{Command, Output};

use serde_json::Value;

fn vacuum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vacuum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn check_rational_level_not_simple() {
    let out = vacuum(&["check", "--algebra", "B(3|2)", "--level", "1/2"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("not simple"));
}

#[test]
fn check_irrational_level_simple() {
    let out = vacuum(&[
        "check",
        "--algebra",
        "B(3|2)",
        "--level",
        "irrational",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["simple"], true);
    assert!(v["witness"].is_null());
    assert_eq!(v["critical"], false);
}

#[test]
fn check_critical_level() {
    let out = vacuum(&["check", "--algebra", "B(3|2)", "--level", "-1", "--json"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["critical"], true);
    assert_eq!(v["witness"]["ratio"], "0");
}

#[test]
fn check_json_reruns_identically() {
    for (alg, level) in [
        ("B(3|2)", "1/2"),
        ("A(2|1)", "-7/3"),
        ("D(2|3)", "irrational"),
        ("D(5|2)", "-4"),
    ] {
        let first = vacuum(&["check", "--algebra", alg, "--level", level, "--json"]);
        let v = json(&first);
        let again = vacuum(&[
            "check",
            "--algebra",
            v["algebra"].as_str().unwrap(),
            "--level",
            v["level"].as_str().unwrap(),
            "--json",
        ]);
        assert_eq!(first.stdout, again.stdout);
        assert_eq!(code(&first), code(&again));
    }
}

#[test]
fn malformed_input_is_exit_2() {
    assert_eq!(
        code(&vacuum(&["check", "--algebra", "Q(3|2)", "--level", "1"])),
        2
    );
    assert_eq!(
        code(&vacuum(&["check", "--algebra", "B(3|2)", "--level", "0.5"])),
        2
    );
    assert_eq!(code(&vacuum(&["--seed-free", "tables"])), 2);
}

#[test]
fn witness_search() {
    let out = vacuum(&[
        "witness",
        "--algebra",
        "A(2|1)",
        "--level",
        "1",
        "--lmax",
        "2",
        "--mmax",
        "4",
        "--json",
    ]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["witness"]["m"], 2);
    assert_eq!(v["witness"]["a"], -1);

    let out = vacuum(&["witness", "--algebra", "A(2|1)", "--level", "irrational"]);
    assert_eq!(code(&out), 2);

    let out = vacuum(&[
        "witness",
        "--algebra",
        "A(2|1)",
        "--level",
        "1",
        "--lmax",
        "1",
        "--mmax",
        "1",
    ]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn kpi_values() {
    let value = |args: &[&str]| json(&vacuum(args))["value"].as_i64().unwrap();
    assert_eq!(
        value(&["kpi", "--algebra", "A(2|1)", "--eta", "0", "--json"]),
        1
    );
    let sl21 = [
        "kpi",
        "--algebra",
        "A(1|0)",
        "--simple-roots",
        "e1-d1,d1-e2",
        "--eta",
        "e1-d1",
        "--json",
    ];
    assert_eq!(value(&sl21), -1);
    assert_eq!(
        value(&["kpi", "--algebra", "A(2|1)", "--eta", "-e1+e2", "--json"]),
        0
    );
    let off_lattice = json(&vacuum(&[
        "kpi",
        "--algebra",
        "B(3|2)",
        "--eta",
        "1/2e1",
        "--json",
    ]));
    assert_eq!(off_lattice["value"], 0);
    assert_eq!(off_lattice["coords"][0], "1/2");
}

#[test]
fn verify_filtered_sweep() {
    let out = vacuum(&[
        "verify", "--family", "B", "--max-n", "2", "--height", "6", "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["fail"], 0);
    let ids: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["case_id"].as_str().unwrap())
        .collect();
    assert!(ids.iter().all(|id| id.starts_with('B')));
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn verify_detects_injected_fault() {
    let out = vacuum(&[
        "verify",
        "--family",
        "A",
        "--max-n",
        "2",
        "--height",
        "4",
        "--inject-fault",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn tables_list_every_case() {
    let out = vacuum(&["tables", "--max-n", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let special = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["case_id"] == "D(4|2) +special")
        .expect("special row");
    assert_eq!(special["theta_norm"], "0");
    assert_eq!(special["dual_coxeter"], "2");
}
