//! Repetition, early-stop and timeout policy for one (test, solver) pair.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimingPolicy {
    /// Repetitions per test.
    pub runs: usize,
    /// Stop repeating once a run takes longer than this.
    pub early_stop: Duration,
    /// A run is killed and counted as a timeout after this long.
    pub timeout: Duration,
    /// Times closer than this count as a tie in the epsilon tables.
    pub epsilon: f64,
}

impl Default for TimingPolicy {
    fn default() -> Self {
        Self {
            runs: 5,
            early_stop: Duration::from_secs(15),
            timeout: Duration::from_secs(600),
            epsilon: 0.01,
        }
    }
}

/// What a single run produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunOutcome {
    Completed(Duration),
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingResult {
    /// Durations of the completed runs, in order.
    pub runs: Vec<Duration>,
    /// Aggregated time charged to this test.
    pub time: Duration,
    pub early_stopped: bool,
    pub timed_out: bool,
}

impl TimingResult {
    pub fn seconds(&self) -> f64 {
        self.time.as_secs_f64()
    }
}

/// Mean of the middle values when every repetition ran, the plain mean
/// otherwise. Works in whole nanoseconds.
pub fn aggregate(runs: &[Duration], policy: &TimingPolicy) -> Duration {
    if runs.is_empty() {
        return Duration::ZERO;
    }
    let mut nanos: Vec<u128> = runs.iter().map(Duration::as_nanos).collect();
    if runs.len() == policy.runs && runs.len() >= 3 {
        nanos.sort_unstable();
        nanos.pop();
        nanos.remove(0);
    }
    let mean = nanos.iter().sum::<u128>() / nanos.len() as u128;
    Duration::from_nanos(mean as u64)
}

/// Applies the policy around `run`, which receives the per-run timeout.
pub fn measure<F>(policy: &TimingPolicy, mut run: F) -> Result<TimingResult, BenchError>
where
    F: FnMut(Duration) -> Result<RunOutcome, BenchError>,
{
    let mut runs = Vec::with_capacity(policy.runs);
    let mut early_stopped = false;
    for _ in 0..policy.runs {
        match run(policy.timeout)? {
            RunOutcome::TimedOut => {
                return Ok(TimingResult {
                    runs,
                    time: policy.timeout,
                    early_stopped: true,
                    timed_out: true,
                });
            }
            RunOutcome::Completed(d) => {
                runs.push(d);
                if d > policy.early_stop {
                    early_stopped = runs.len() < policy.runs;
                    break;
                }
            }
        }
    }
    Ok(TimingResult {
        time: aggregate(&runs, policy),
        runs,
        early_stopped,
        timed_out: false,
    })
}
