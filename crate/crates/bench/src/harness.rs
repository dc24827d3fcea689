//! Runs a two-solver comparison over a set of classes and writes the results.

use std::fs;
use std::path::{Path, PathBuf};

use lde_core::{Algorithm, Equation};
use serde::{Deserialize, Serialize};

use crate::corpus::{corpus_text, generate_class_sized, ClassCorpus, TESTS_PER_CLASS};
use crate::error::BenchError;
use crate::grid::BenchClass;
use crate::report::{render_reports, ClassSummary, RenderedReports};
use crate::runner::Competitor;
use crate::score::score_class;
use crate::timing::{measure, TimingPolicy, TimingResult};

pub const METADATA_SCHEMA: &str = "lde-bench-metadata/1";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub classes: Vec<BenchClass>,
    pub seed: u64,
    pub policy: TimingPolicy,
    pub first: Competitor,
    pub second: Competitor,
    pub tests_per_class: usize,
    /// Where result files go; nothing is written when `None`.
    pub out_dir: Option<PathBuf>,
}

impl BenchConfig {
    /// Graph against Slopes, in process.
    pub fn new(classes: Vec<BenchClass>, seed: u64) -> Self {
        Self {
            classes,
            seed,
            policy: TimingPolicy::default(),
            first: Competitor::Internal(Algorithm::Graph),
            second: Competitor::Internal(Algorithm::Slopes),
            tests_per_class: TESTS_PER_CLASS,
            out_dir: None,
        }
    }
}

/// One row of `results.csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestRecord {
    pub class: BenchClass,
    pub index: usize,
    pub equation: Equation,
    pub first: TimingResult,
    pub second: TimingResult,
    pub first_size: Option<usize>,
    pub second_size: Option<usize>,
}

impl TestRecord {
    /// Both solvers finished but disagree on the basis size.
    pub fn size_mismatch(&self) -> bool {
        matches!((self.first_size, self.second_size), (Some(a), Some(b)) if a != b)
    }
}

#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub labels: (String, String),
    pub corpora: Vec<ClassCorpus>,
    pub records: Vec<TestRecord>,
    pub summaries: Vec<ClassSummary>,
    pub reports: RenderedReports,
}

impl BenchOutcome {
    pub fn size_mismatches(&self) -> impl Iterator<Item = &TestRecord> {
        self.records.iter().filter(|r| r.size_mismatch())
    }
}

/// Timing for one test, plus the basis size seen on the last completed run.
fn time_one(
    competitor: &Competitor,
    eq: &Equation,
    policy: &TimingPolicy,
) -> Result<(TimingResult, Option<usize>), BenchError> {
    let mut size = None;
    let timing = measure(policy, |timeout| {
        let (outcome, s) = competitor.run(eq, timeout)?;
        if s.is_some() {
            size = s;
        }
        Ok(outcome)
    })?;
    Ok((timing, size))
}

fn summarize(class: BenchClass, records: &[TestRecord], epsilon: f64) -> ClassSummary {
    let first: Vec<f64> = records.iter().map(|r| r.first.seconds()).collect();
    let second: Vec<f64> = records.iter().map(|r| r.second.seconds()).collect();
    let timeouts = |f: fn(&TestRecord) -> bool| records.iter().filter(|r| f(r)).count() as u32;
    ClassSummary {
        class,
        score: score_class(&first, &second, None),
        score_epsilon: score_class(&first, &second, Some(epsilon)),
        timeouts: (
            timeouts(|r| r.first.timed_out),
            timeouts(|r| r.second.timed_out),
        ),
        seconds: (first.iter().sum(), second.iter().sum()),
    }
}

/// Runs every test of every class, one solve at a time.
pub fn run(config: &BenchConfig) -> Result<BenchOutcome, BenchError> {
    let labels = (config.first.label(), config.second.label());
    let mut corpora = Vec::with_capacity(config.classes.len());
    let mut records = Vec::new();
    let mut summaries = Vec::with_capacity(config.classes.len());
    for class in &config.classes {
        let corpus = generate_class_sized(class, config.seed, config.tests_per_class);
        let start = records.len();
        for (index, eq) in corpus.tests.iter().enumerate() {
            let (first, first_size) = time_one(&config.first, eq, &config.policy)?;
            let (second, second_size) = time_one(&config.second, eq, &config.policy)?;
            records.push(TestRecord {
                class: *class,
                index,
                equation: eq.clone(),
                first,
                second,
                first_size,
                second_size,
            });
        }
        summaries.push(summarize(*class, &records[start..], config.policy.epsilon));
        corpora.push(corpus);
    }
    let reports = render_reports((&labels.0, &labels.1), config.policy.epsilon, &summaries);
    let outcome = BenchOutcome {
        labels,
        corpora,
        records,
        summaries,
        reports,
    };
    if let Some(dir) = &config.out_dir {
        write_outputs(dir, config, &outcome)?;
    }
    Ok(outcome)
}

fn size_cell(size: Option<usize>) -> String {
    size.map(|s| s.to_string()).unwrap_or_default()
}

pub fn results_csv(outcome: &BenchOutcome) -> String {
    let (a, b) = &outcome.labels;
    let mut out = format!(
        "N,M,A,test,equation,{a}_seconds,{b}_seconds,{a}_runs,{b}_runs,{a}_timeout,{b}_timeout,{a}_basis,{b}_basis\n"
    );
    for r in &outcome.records {
        out.push_str(&format!(
            "{},{},{},{},{},{:.9},{:.9},{},{},{},{},{},{}\n",
            r.class.n,
            r.class.m,
            r.class.max_value,
            r.index,
            r.equation,
            r.first.seconds(),
            r.second.seconds(),
            r.first.runs.len(),
            r.second.runs.len(),
            r.first.timed_out,
            r.second.timed_out,
            size_cell(r.first_size),
            size_cell(r.second_size),
        ));
    }
    out
}

#[derive(Debug, Serialize)]
struct Metadata<'a> {
    schema: &'static str,
    seed: u64,
    rng: &'static str,
    policy: PolicyMeta,
    timing: &'static str,
    competitors: [&'a str; 2],
    classes: Vec<String>,
    tests_per_class: usize,
    duplicates_accepted: Vec<(String, usize)>,
    basis_size_mismatches: usize,
    machine: Machine,
}

#[derive(Debug, Serialize)]
struct PolicyMeta {
    runs: usize,
    early_stop_seconds: f64,
    timeout_seconds: f64,
    epsilon_seconds: f64,
}

#[derive(Debug, Serialize)]
struct Machine {
    os: &'static str,
    arch: &'static str,
    cpus: usize,
}

fn write_outputs(
    dir: &Path,
    config: &BenchConfig,
    outcome: &BenchOutcome,
) -> Result<(), BenchError> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("results.csv"), results_csv(outcome))?;
    fs::write(dir.join("corpus.txt"), corpus_text(&outcome.corpora))?;
    fs::write(dir.join("tables.txt"), &outcome.reports.text)?;
    fs::write(dir.join("tables.tex"), &outcome.reports.latex)?;
    for (kind, csv) in &outcome.reports.csv {
        fs::write(dir.join(format!("table_{}.csv", kind.file_stem())), csv)?;
    }
    let meta = Metadata {
        schema: METADATA_SCHEMA,
        seed: config.seed,
        rng: "ChaCha8 (rand_chacha), seed_from_u64(seed), one stream per class",
        policy: PolicyMeta {
            runs: config.policy.runs,
            early_stop_seconds: config.policy.early_stop.as_secs_f64(),
            timeout_seconds: config.policy.timeout.as_secs_f64(),
            epsilon_seconds: config.policy.epsilon,
        },
        timing: "wall clock (std::time::Instant); internal solvers in process, external solvers include process spawn",
        competitors: [&outcome.labels.0, &outcome.labels.1],
        classes: config.classes.iter().map(ToString::to_string).collect(),
        tests_per_class: config.tests_per_class,
        duplicates_accepted: outcome
            .corpora
            .iter()
            .filter(|c| c.duplicates_accepted > 0)
            .map(|c| (c.class.to_string(), c.duplicates_accepted))
            .collect(),
        basis_size_mismatches: outcome.size_mismatches().count(),
        machine: Machine {
            os: std::env::consts::OS,
            arch: std::env::consts::ARCH,
            cpus: std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    fs::write(
        dir.join("metadata.json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    Ok(())
}
