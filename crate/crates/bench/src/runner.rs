//! Running one solve, in process or as an external executable.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use lde_core::{Algorithm, Equation, Error as SolveError, Limits};
use serde::{Deserialize, Serialize};
use wait_timeout::ChildExt;

use crate::error::BenchError;
use crate::timing::RunOutcome;

/// A solver taking part in a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Competitor {
    /// Called in process; no spawn cost in the measurement.
    Internal(Algorithm),
    /// Reads the equation text on stdin, prints basis lines on stdout.
    External(PathBuf),
}

impl Competitor {
    pub fn label(&self) -> String {
        match self {
            Competitor::Internal(a) => a.to_string(),
            Competitor::External(p) => p
                .file_name()
                .map(|f| f.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string()),
        }
    }

    /// One timed run. Also returns the basis size when the run completed.
    pub fn run(
        &self,
        eq: &Equation,
        timeout: Duration,
    ) -> Result<(RunOutcome, Option<usize>), BenchError> {
        match self {
            Competitor::Internal(algo) => run_internal(*algo, eq, timeout),
            Competitor::External(path) => run_external(path, eq, timeout),
        }
    }
}

fn run_internal(
    algo: Algorithm,
    eq: &Equation,
    timeout: Duration,
) -> Result<(RunOutcome, Option<usize>), BenchError> {
    let w = eq.weights();
    let limits = Limits::default().with_time_budget(timeout);
    let start = Instant::now();
    match algo.solve_weights(&w, &limits) {
        Ok(basis) => Ok((RunOutcome::Completed(start.elapsed()), Some(basis.len()))),
        Err(SolveError::Timeout(_)) => Ok((RunOutcome::TimedOut, None)),
        Err(e) => Err(e.into()),
    }
}

fn run_external(
    path: &PathBuf,
    eq: &Equation,
    timeout: Duration,
) -> Result<(RunOutcome, Option<usize>), BenchError> {
    let start = Instant::now();
    let mut child = Command::new(path)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|source| BenchError::Spawn {
            path: path.clone(),
            source,
        })?;

    let mut stdin = child.stdin.take().expect("piped stdin");
    let input = format!("{eq}\n");
    let writer = std::thread::spawn(move || stdin.write_all(input.as_bytes()));
    let mut stdout = child.stdout.take().expect("piped stdout");
    let reader = std::thread::spawn(move || {
        let mut buf = String::new();
        stdout.read_to_string(&mut buf).map(|_| buf)
    });
    let mut stderr = child.stderr.take().expect("piped stderr");
    let err_reader = std::thread::spawn(move || {
        let mut buf = String::new();
        let _ = stderr.read_to_string(&mut buf);
        buf
    });

    let status = match child.wait_timeout(timeout)? {
        Some(status) => status,
        None => {
            child.kill()?;
            child.wait()?;
            return Ok((RunOutcome::TimedOut, None));
        }
    };
    let elapsed = start.elapsed();
    // a solver may exit without reading its input
    let _ = writer.join();
    let output = reader.join().expect("stdout reader")?;
    let stderr = err_reader.join().unwrap_or_default();
    if !status.success() {
        return Err(BenchError::ExternalFailed {
            path: path.clone(),
            status: status.to_string(),
            stderr: stderr.trim().to_string(),
        });
    }
    Ok((
        RunOutcome::Completed(elapsed),
        Some(count_basis_lines(&output)),
    ))
}

/// Lines consisting only of digits and spaces; anything else (summary lines,
/// comments) is ignored.
pub fn count_basis_lines(output: &str) -> usize {
    output
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && l.chars().all(|c| c.is_ascii_digit() || c == ' '))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_run_reports_size() {
        let eq: Equation = "5 = 3 2".parse().unwrap();
        let (outcome, size) = Competitor::Internal(Algorithm::Graph)
            .run(&eq, Duration::from_secs(10))
            .unwrap();
        assert!(matches!(outcome, RunOutcome::Completed(_)));
        assert_eq!(size, Some(3));
    }

    #[test]
    fn internal_timeout() {
        let eq: Equation = "1021 1019 1013 = 1009 997 991 983 977".parse().unwrap();
        let (outcome, _) = Competitor::Internal(Algorithm::Slopes)
            .run(&eq, Duration::from_millis(20))
            .unwrap();
        assert_eq!(outcome, RunOutcome::TimedOut);
    }

    #[test]
    fn spawn_failure_is_distinct() {
        let eq: Equation = "1 = 1".parse().unwrap();
        let err = Competitor::External("/nonexistent/solver".into())
            .run(&eq, Duration::from_secs(1))
            .unwrap_err();
        assert!(matches!(err, BenchError::Spawn { .. }));
    }

    #[test]
    fn basis_line_filter() {
        assert_eq!(
            count_basis_lines("1 2 3\n4 5 6\nbasis size: 2, time: 0.1\n\n"),
            2
        );
    }
}
