use std::time::Duration;

use lde_bench::report::TableKind;
use lde_bench::timing::TimingPolicy;
use lde_bench::{parse_selection, run, BenchConfig, Competitor};

fn quick_policy() -> TimingPolicy {
    TimingPolicy {
        runs: 3,
        early_stop: Duration::from_secs(1),
        timeout: Duration::from_secs(30),
        epsilon: 0.01,
    }
}

#[test]
fn small_run_writes_every_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = BenchConfig::new(parse_selection("1,2,2;2,3,13;3,3,29").unwrap(), 7);
    config.policy = quick_policy();
    config.tests_per_class = 4;
    config.out_dir = Some(dir.path().to_path_buf());
    let outcome = run(&config).unwrap();

    assert_eq!(outcome.records.len(), 12);
    assert_eq!(outcome.size_mismatches().count(), 0);
    for s in &outcome.summaries {
        assert_eq!(s.score.first_halves + s.score.second_halves, 8);
        assert_eq!(
            s.score_epsilon.first_halves + s.score_epsilon.second_halves,
            8
        );
        assert_eq!(s.timeouts, (0, 0));
    }
    for name in [
        "results.csv",
        "corpus.txt",
        "tables.txt",
        "tables.tex",
        "metadata.json",
    ] {
        assert!(dir.path().join(name).is_file(), "{name} missing");
    }
    for kind in TableKind::ALL {
        let csv =
            std::fs::read_to_string(dir.path().join(format!("table_{}.csv", kind.file_stem())))
                .unwrap();
        assert_eq!(csv.lines().count(), 22);
    }
    let results = std::fs::read_to_string(dir.path().join("results.csv")).unwrap();
    assert_eq!(results.lines().count(), 13);
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("metadata.json")).unwrap())
            .unwrap();
    assert_eq!(meta["seed"], 7);
    assert_eq!(meta["policy"]["runs"], 3);
    assert_eq!(meta["competitors"][0], "graph");
}

#[test]
fn same_seed_same_corpus() {
    let classes = parse_selection("2,2,5").unwrap();
    let mut config = BenchConfig::new(classes, 11);
    config.policy = quick_policy();
    config.policy.runs = 1;
    let a = run(&config).unwrap();
    let b = run(&config).unwrap();
    assert_eq!(a.corpora, b.corpora);
}

#[cfg(unix)]
#[test]
fn external_solver_is_spawned_per_run() {
    use std::os::unix::fs::PermissionsExt;

    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("fake-solver");
    std::fs::write(
        &script,
        "#!/bin/sh\ncat > /dev/null\necho '1 1'\necho 'basis size: 1'\n",
    )
    .unwrap();
    std::fs::set_permissions(&script, std::fs::Permissions::from_mode(0o755)).unwrap();

    let mut config = BenchConfig::new(parse_selection("1,2,2").unwrap(), 3);
    config.policy = quick_policy();
    config.tests_per_class = 2;
    config.second = Competitor::External(script);
    let outcome = run(&config).unwrap();
    assert_eq!(outcome.labels.1, "fake-solver");
    assert!(outcome.records.iter().all(|r| r.second_size == Some(1)));
}
