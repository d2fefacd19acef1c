use std::io::Write;
use std::process::{Command, Stdio};

use edgereg::{emit_graph6_string, GraphFamily};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn g6(f: GraphFamily) -> String {
    emit_graph6_string(&f.build().unwrap())
}

#[test]
fn empty_input_gives_an_empty_json_array() {
    let r = run(&["invariants", "--json"], "");
    assert_eq!(r.stdout, "[]\n");
    assert_eq!(r.code, 0);
}

#[test]
fn cycles_report_the_known_values() {
    let input = format!(
        "{}\n{}\n",
        g6(GraphFamily::Cycle { n: 5 }),
        g6(GraphFamily::Cycle { n: 7 })
    );
    let r = run(&["invariants", "--json"], &input);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let get = |i: usize, k: &str| rows[i]["invariants"][k].clone();
    assert_eq!(get(0, "indmatch"), 1);
    assert_eq!(get(0, "cochord")["value"], 2);
    assert_eq!(get(1, "indmatch"), 2);
    assert_eq!(get(1, "cochord")["value"], 3);
    assert_eq!(get(1, "cochord")["method"], "exact");
    assert_eq!(rows[1]["graph_id"], "stdin:2");
    assert_eq!(rows[0]["runtime_ms"], 0);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let a = run(
        &["verify", "bounds", "--nmax", "5", "--json", "--jobs", "1"],
        "",
    );
    let b = run(
        &["verify", "bounds", "--nmax", "5", "--json", "--jobs", "4"],
        "",
    );
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1 + 1 + 2 + 4 + 11 + 34);
}

#[test]
fn csv_has_a_header_and_one_row_per_graph() {
    let input = format!("{}\n", g6(GraphFamily::Petersen));
    let r = run(&["invariants", "--csv", "--fields", "2,3"], &input);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("graph_id,graph6,n,m,"));
    assert!(lines[1].contains("2:3;3:3"), "{}", lines[1]);
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "# path\nn 4\n0 1\n1 2\n2 3\n").unwrap();
    let r = run(
        &[
            "cochord",
            "--format",
            "edges",
            "--input",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("indmatch=1 cochord=1"), "{}", r.stdout);
}

#[test]
fn parse_errors_become_error_records() {
    let input = format!("{}\nzz\n", g6(GraphFamily::Cycle { n: 4 }));
    let r = run(&["invariants", "--json"], &input);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v[1]["graph_id"], "stdin:2");
    assert_eq!(v[1]["checks"][0]["name"], "parse");
    assert_eq!(v[1]["checks"][0]["status"], "error");
    assert_eq!(v[0]["checks"][0]["status"], "pass");
}

#[test]
fn usage_errors_exit_with_two() {
    let r = run(&["invariants", "--fields", "4"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not prime"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn capacity_limits_are_blocked() {
    let input = format!("{}\n", g6(GraphFamily::Cycle { n: 5 }));
    let r = run(&["regularity", "--vertex-cap", "3"], &input);
    assert_eq!(r.code, 3);
    assert!(
        r.stdout.contains("[blocked] compute_regularity"),
        "{}",
        r.stdout
    );
    let r = run(&["reproduce", "paths-cycles", "--nmax", "40"], "");
    assert_eq!(r.code, 3);
}

#[test]
fn reproductions_pass() {
    for args in [
        &["reproduce", "paths-cycles", "--nmax", "9"][..],
        &["reproduce", "gap", "--r", "1", "--s", "1"],
        &["reproduce", "whisker", "--nmax", "4"],
        &["reproduce", "scm-example"],
        &["reproduce", "petersen-complement"],
        &["cover", "--method", "chain"],
    ] {
        let input = format!("{}\n", g6(GraphFamily::Path { n: 4 }));
        let r = run(args, &input);
        assert_eq!(r.code, 0, "{args:?}: {}{}", r.stdout, r.stderr);
        assert!(!r.stdout.contains("[fail]"));
    }
}

#[test]
fn searches_print_a_tally() {
    let r = run(&["search", "q51", "--nmax", "5"], "");
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stderr.starts_with("searched "), "{}", r.stderr);
    let r = run(&["search", "q52", "--nmax", "5"], "");
    assert!(r.code == 0 || r.code == 3, "{}", r.stdout);
}
