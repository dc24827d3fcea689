use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lde"))
        .args(args)
        .output()
        .unwrap()
}

fn lde_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lde"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_lex_single() {
    let o = lde(&["solve", "--algo", "lex", "--no-timing", "1 = 2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2 1\nbasis size: 1\n");
}

#[test]
fn solve_eq6_graph() {
    let o = lde(&[
        "solve",
        "--algo",
        "graph",
        "104 167 = 165 154 148 159 174 150",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5511);
    assert!(lines[5510].starts_with("basis size: 5510, time: "));
}

#[test]
fn every_algorithm_prints_the_same_lines() {
    let mut outputs = Vec::new();
    for algo in [
        "lex",
        "lex-huet-one",
        "completion",
        "graph",
        "slopes",
        "oracle",
    ] {
        let o = lde(&["solve", "--algo", algo, "--no-timing", "3 2 = 4 5"]);
        assert!(o.status.success(), "{algo}");
        outputs.push(stdout(&o));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let o = lde(&[
        "solve",
        "--algo",
        "lex",
        "--bound",
        "huet",
        "--tail",
        "one",
        "--no-timing",
        "3 2 = 4 5",
    ]);
    assert_eq!(stdout(&o), outputs[0]);
}

#[test]
fn repeated_runs_are_identical() {
    let a = lde(&["solve", "--no-timing", "7 5 = 3 4 6"]);
    let b = lde(&["solve", "--no-timing", "7 5 = 3 4 6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_from_stdin_and_file() {
    let o = lde_stdin(&["solve", "--no-timing"], "# comment\n2 = 1 1\n");
    assert_eq!(stdout(&o), "1 0 2\n1 1 1\n1 2 0\nbasis size: 3\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eq.txt");
    std::fs::write(&path, "2 = 1 1\n").unwrap();
    let o = lde(&["solve", "--no-timing", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "1 0 2\n1 1 1\n1 2 0\nbasis size: 3\n");
}

#[test]
fn json_schema() {
    let o = lde(&["solve", "--format", "json", "--no-timing", "2 = 1 1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "lde-basis/1");
    assert_eq!(v["size"], 3);
    assert_eq!(v["basis"][1], serde_json::json!([1, 1, 1]));
    assert!(v.get("seconds").is_none());
}

#[test]
fn verify_reports_agreement() {
    let o = lde(&["verify", "2 1 = 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "AGREE (4 algorithms, oracle), basis size 2\n");
}

#[test]
fn malformed_input_fails_with_position() {
    let o = lde(&["solve", "1 x = 2"]);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("column 3"), "{err}");
}

#[test]
fn timeout_is_an_error() {
    let o = lde(&[
        "solve",
        "--algo",
        "completion",
        "--timeout",
        "0.01",
        "1021 1019 1013 = 1009 997 991 983 977",
    ]);
    assert!(!o.status.success());
}

#[test]
fn variant_flags_need_lex() {
    let o = lde(&["solve", "--algo", "graph", "--bound", "huet", "1 = 2"]);
    assert!(!o.status.success());
}

#[test]
fn emit_graph_and_dump_slopes3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = lde(&[
        "solve",
        "--no-timing",
        "--emit-graph",
        path.to_str().unwrap(),
        "1 = 2",
    ]);
    assert!(o.status.success());
    let graph = std::fs::read_to_string(&path).unwrap();
    assert!(graph.lines().next().unwrap().starts_with("-2:"));
    assert_eq!(graph.lines().count(), 4);

    let o = lde(&["solve", "--dump-slopes3", "5", "3", "2"]);
    assert_eq!(stdout(&o), "1 1 1\n2 0 5\n3 5 0\n");
}

#[test]
fn unify_prints_bindings() {
    let o = lde(&["unify", "2 = 1 1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "# f(2*u1) =? f(u2, u3)\nu1 = z1 + z2 + z3\nu2 = z2 + 2*z3\nu3 = 2*z1 + z2\n"
    );
}

#[test]
fn gen_is_seeded() {
    let a = lde(&["gen", "--classes", "2,3,13;1,2,2", "--seed", "5"]);
    let b = lde(&["gen", "--classes", "2,3,13;1,2,2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with('#')).count(), 2);
    assert_eq!(text.lines().count(), 22);
    assert!(!lde(&["gen", "--classes", "9,9,9"]).status.success());
}

#[test]
fn bench_with_cli_as_external_solver() {
    let dir = tempfile::tempdir().unwrap();
    let solver = dir.path().join("solver.sh");
    std::fs::write(
        &solver,
        format!(
            "#!/bin/sh\nexec '{}' solve --algo slopes\n",
            env!("CARGO_BIN_EXE_lde")
        ),
    )
    .unwrap();
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        std::fs::set_permissions(&solver, std::fs::Permissions::from_mode(0o755)).unwrap();
    }
    let out = dir.path().join("out");
    let o = lde(&[
        "bench",
        "--classes",
        "1,2,5;2,2,3",
        "--tests",
        "3",
        "--runs",
        "2",
        "--seed",
        "1",
        "--exec",
        solver.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("graph wins"));
    for f in [
        "results.csv",
        "corpus.txt",
        "tables.txt",
        "tables.tex",
        "metadata.json",
        "table_totals.csv",
    ] {
        assert!(out.join(f).is_file(), "{f}");
    }
}
