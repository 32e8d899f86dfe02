use std::process::{Command, Output};

fn verlinde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(args)
        .env_remove("VERLINDE_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn qpoly_renders_table_style() {
    let o = verlinde(&["qpoly", "--group", "a2", "--weight", "2,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^2 - y\n");
}

#[test]
fn verify_tables_passes() {
    let o = verlinde(&["verify", "tables", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    for r in v["reports"].as_array().unwrap() {
        assert!(!r["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let o = verlinde(&["qpoly", "--group", "e8", "--weight", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--group"));

    let o = verlinde(&["qpoly", "--group", "a2", "--weight", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--weight"));

    let o = verlinde(&["bratteli", "--group", "a1", "--level", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--format"));

    assert_eq!(verlinde(&["nonsense"]).status.code(), Some(2));
    assert_eq!(verlinde(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(verlinde(&["--precision", "quad", "verify", "tables"]).status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = ["--seed", "11", "--format", "json", "verify", "identities"];
    let a = verlinde(&args);
    let b = verlinde(&["--jobs", "1", "--seed", "11", "--format", "json", "verify", "identities"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn nullity_csv_has_one_row_per_level() {
    let o = verlinde(&["experiment", "nullity", "--group", "sp4", "--kmax", "30", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,h,size,divides_h,rank_10,nullity_10,expected_10,match_10,rank_01,nullity_01,expected_01,match_01,match"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn bratteli_dot() {
    let o = verlinde(&["bratteli", "-g", "a2", "-l", "2", "--rule", "alternating", "--depth", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("digraph bratteli {"));
    assert!(s.contains("\"0:(0,0)\" -> \"1:(1,0)\""));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(["--format", "json", "smatrix", "-g", "a1", "-l", "1"])
        .env("VERLINDE_PRECISION", "double")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(["smatrix", "-g", "a1", "-l", "1"])
        .env("VERLINDE_PRECISION", "bogus")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn other_subcommands_run() {
    for args in [
        &["simples", "-g", "g2", "-l", "2", "--format", "csv"][..],
        &["fuse", "-g", "a2", "-l", "2", "1,0", "0,1"],
        &["ppoly", "-g", "a2", "-w", "1,1"],
        &["ideal", "gb", "-g", "a2", "-l", "3", "--kind", "ik", "--format", "json"],
        &["k0", "-g", "sp4", "-l", "2"],
        &["experiment", "invertibility", "--kmax", "10"],
        &["experiment", "ses", "-g", "a1", "--kmax", "10"],
        &["experiment", "riesz", "--n", "3"],
        &["verify", "--suite", "psi", "--k", "2"],
    ] {
        let o = verlinde(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(stdout(&verlinde(&["fuse", "-g", "a2", "-l", "2", "1,0", "0,1"])), "(0,0) + (1,1)\n");
}

#[test]
fn ses_is_only_for_type_a() {
    let o = verlinde(&["experiment", "ses", "-g", "sp4", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--group"));
}
