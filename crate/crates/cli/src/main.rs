//! `lde`: solve, cross-check, generate, benchmark and unify.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lde_bench::timing::TimingPolicy;
use lde_bench::{parse_selection, BenchConfig, Competitor};
use lde_core::acu::{basis_to_unifier, verify_unifier, TopMostProblem};
use lde_core::graph::build_defect_graph;
use lde_core::lex::{LexVariant, TailKind};
use lde_core::oracle::{box_size, DEFAULT_ORACLE_CAP};
use lde_core::slopes::slopes3;
use lde_core::{Algorithm, BoundKind, Equation, Limits, Solution};
use serde::Serialize;

const BASIS_SCHEMA: &str = "lde-basis/1";
const VERIFY_SCHEMA: &str = "lde-verify/1";
const UNIFIER_SCHEMA: &str = "lde-unifier/1";

#[derive(Parser)]
#[command(
    name = "lde",
    version,
    about = "Minimal solutions of linear homogeneous Diophantine equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis of one equation.
    Solve(SolveArgs),
    /// Run every algorithm (and the oracle when small enough) and compare.
    Verify(VerifyArgs),
    /// Print the seeded test corpus of some grid classes.
    Gen(GenArgs),
    /// Time two solvers against each other over grid classes.
    Bench(BenchArgs),
    /// Print the ACU unifier built from the basis.
    Unify(UnifyArgs),
}

/// Equation given as arguments, via --file, or on stdin.
#[derive(Args)]
struct Input {
    /// Equation text, e.g. `2 3 = 1 4 5`; may be split over several arguments.
    #[arg(allow_hyphen_values = true)]
    equation: Vec<String>,
    /// Read the equation from a file.
    #[arg(long, conflicts_with = "equation")]
    file: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> Result<Equation> {
        let text = if let Some(path) = &self.file {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        } else if !self.equation.is_empty() {
            self.equation.join(" ")
        } else {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            buf
        };
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        Ok(line.parse()?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Huet,
    Lambert,
}

#[derive(Clone, Copy, ValueEnum)]
enum TailArg {
    One,
    Two,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: Input,
    /// lex, completion, graph, slopes, oracle, or lex-{huet|lambert}-{one|two}.
    #[arg(long, default_value = "graph")]
    algo: Algorithm,
    /// Bound used by the lex algorithm.
    #[arg(long, value_enum)]
    bound: Option<BoundArg>,
    /// Tail handling of the lex algorithm.
    #[arg(long, value_enum)]
    tail: Option<TailArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Leave out the timing so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
    /// Give up after this many seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Also write the defect graph of the equation to FILE.
    #[arg(long, value_name = "FILE")]
    emit_graph: Option<PathBuf>,
    /// Print the minimal solutions of a·x = b·y + c·z instead.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    dump_slopes3: Option<Vec<u64>>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// `all`, or `N,M,A` cells separated by `;`.
    #[arg(long, default_value = "all")]
    classes: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = lde_bench::corpus::TESTS_PER_CLASS)]
    tests: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// `all`, or `N,M,A` cells separated by `;`.
    #[arg(long, default_value = "all")]
    classes: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Times closer than this many seconds tie in the epsilon table.
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value = "bench-out")]
    out: PathBuf,
    #[arg(long, default_value = "graph")]
    first: Algorithm,
    #[arg(long, default_value = "slopes")]
    second: Algorithm,
    /// Use this executable as the second solver. It reads one equation on
    /// stdin and prints basis lines on stdout.
    #[arg(long, value_name = "PATH")]
    exec: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    runs: usize,
    /// Seconds after which no further repetitions are made.
    #[arg(long, default_value_t = 15.0)]
    early_stop: f64,
    /// Seconds after which a run is killed.
    #[arg(long, default_value_t = 600.0)]
    timeout: f64,
    #[arg(long, default_value_t = lde_bench::corpus::TESTS_PER_CLASS)]
    tests: usize,
}

#[derive(Args)]
struct UnifyArgs {
    #[command(flatten)]
    input: Input,
    /// Name of the ACU function symbol.
    #[arg(long, default_value = "f")]
    symbol: String,
    #[arg(long, default_value = "graph")]
    algo: Algorithm,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Serialize)]
struct BasisDoc<'a> {
    schema: &'static str,
    lhs: &'a [u64],
    rhs: &'a [u64],
    algorithm: String,
    size: usize,
    basis: &'a [Solution],
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

fn seconds(s: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(s).with_context(|| format!("invalid duration {s}"))
}

fn resolve_algo(args: &SolveArgs) -> Result<Algorithm> {
    if args.bound.is_none() && args.tail.is_none() {
        return Ok(args.algo);
    }
    let Algorithm::Lex(mut variant) = args.algo else {
        bail!("--bound and --tail only apply to --algo lex");
    };
    if let Some(b) = args.bound {
        variant.bound = match b {
            BoundArg::Huet => BoundKind::Huet,
            BoundArg::Lambert => BoundKind::Lambert,
        };
    }
    if let Some(t) = args.tail {
        variant.tail = match t {
            TailArg::One => TailKind::LastOne,
            TailArg::Two => TailKind::LastTwo,
        };
    }
    Ok(Algorithm::Lex(LexVariant::new(variant.bound, variant.tail)))
}

fn solve(args: SolveArgs, out: &mut impl Write) -> Result<ExitCode> {
    if let Some(abc) = &args.dump_slopes3 {
        let (a, b, c) = (abc[0], abc[1], abc[2]);
        if a == 0 || b == 0 || c == 0 {
            bail!("--dump-slopes3 needs positive coefficients");
        }
        for [x, y, z] in slopes3(a, b, c) {
            writeln!(out, "{x} {y} {z}")?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let algo = resolve_algo(&args)?;
    let eq = args.input.read()?;
    let w = eq.weights();
    if let Some(path) = &args.emit_graph {
        fs::write(path, build_defect_graph(&w).to_text())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut limits = Limits::default();
    if let Some(t) = args.timeout {
        limits = limits.with_time_budget(seconds(t)?);
    }
    let start = Instant::now();
    let basis = algo.solve_weights(&w, &limits)?;
    let elapsed = start.elapsed().as_secs_f64();
    match args.format {
        Format::Text => {
            out.write_all(basis.to_lines().as_bytes())?;
            if args.no_timing {
                writeln!(out, "basis size: {}", basis.len())?;
            } else {
                writeln!(out, "basis size: {}, time: {elapsed:.3}s", basis.len())?;
            }
        }
        Format::Json => {
            let doc = BasisDoc {
                schema: BASIS_SCHEMA,
                lhs: eq.lhs(),
                rhs: eq.rhs(),
                algorithm: algo.to_string(),
                size: basis.len(),
                basis: basis.as_slice(),
                seconds: (!args.no_timing).then_some(elapsed),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyDoc {
    schema: &'static str,
    agree: bool,
    oracle: bool,
    sizes: Vec<(String, usize)>,
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<ExitCode> {
    let eq = args.input.read()?;
    let w = eq.weights();
    let mut algos = Algorithm::SOLVERS.to_vec();
    let oracle = box_size(&w) <= DEFAULT_ORACLE_CAP;
    if oracle {
        algos.push(Algorithm::Oracle);
    }
    let mut results = Vec::with_capacity(algos.len());
    for algo in &algos {
        results.push((*algo, algo.solve_weights(&w, &Limits::default())?));
    }
    let reference = &results[0].1;
    let agree = results.iter().all(|(_, b)| b == reference);
    match args.format {
        Format::Text => {
            let with = if oracle { ", oracle" } else { "" };
            if agree {
                writeln!(
                    out,
                    "AGREE (4 algorithms{with}), basis size {}",
                    reference.len()
                )?;
            } else {
                writeln!(out, "DISAGREE (4 algorithms{with})")?;
                for (algo, basis) in &results {
                    writeln!(out, "  {algo}: basis size {}", basis.len())?;
                }
            }
        }
        Format::Json => {
            let doc = VerifyDoc {
                schema: VERIFY_SCHEMA,
                agree,
                oracle,
                sizes: results
                    .iter()
                    .map(|(a, b)| (a.to_string(), b.len()))
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn gen(args: GenArgs, out: &mut impl Write) -> Result<ExitCode> {
    let corpora: Vec<_> = parse_selection(&args.classes)?
        .iter()
        .map(|c| lde_bench::corpus::generate_class_sized(c, args.seed, args.tests))
        .collect();
    out.write_all(lde_bench::corpus::corpus_text(&corpora).as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn bench(args: BenchArgs, out: &mut impl Write) -> Result<ExitCode> {
    let mut config = BenchConfig::new(parse_selection(&args.classes)?, args.seed);
    config.policy = TimingPolicy {
        runs: args.runs,
        early_stop: seconds(args.early_stop)?,
        timeout: seconds(args.timeout)?,
        epsilon: args.epsilon,
    };
    config.first = Competitor::Internal(args.first);
    config.second = match args.exec {
        Some(path) => Competitor::External(path),
        None => Competitor::Internal(args.second),
    };
    config.tests_per_class = args.tests;
    config.out_dir = Some(args.out.clone());
    let outcome = lde_bench::run(&config)?;
    out.write_all(outcome.reports.text.as_bytes())?;
    writeln!(out, "results written to {}", args.out.display())?;
    let mismatches = outcome.size_mismatches().count();
    if mismatches > 0 {
        writeln!(out, "basis size mismatches: {mismatches}")?;
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct UnifierDoc<'a> {
    schema: &'static str,
    problem: String,
    unifier: &'a lde_core::acu::Unifier,
}

fn unify(args: UnifyArgs, out: &mut impl Write) -> Result<ExitCode> {
    let eq = args.input.read()?;
    let problem = TopMostProblem::from_equation(&args.symbol, &eq);
    let basis = args.algo.solve(&eq)?;
    let unifier = basis_to_unifier(&problem, &basis)?;
    if !verify_unifier(&problem, &unifier) {
        bail!("constructed unifier does not solve {problem}");
    }
    match args.format {
        Format::Text => {
            writeln!(out, "# {problem}")?;
            write!(out, "{unifier}")?;
        }
        Format::Json => {
            let doc = UnifierDoc {
                schema: UNIFIER_SCHEMA,
                problem: problem.to_string(),
                unifier: &unifier,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Solve(a) => solve(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Gen(a) => gen(a, &mut out),
        Command::Bench(a) => bench(a, &mut out),
        Command::Unify(a) => unify(a, &mut out),
    };
    let flushed = out.flush();
    match result.and_then(|code| flushed.map(|_| code).map_err(Into::into)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
