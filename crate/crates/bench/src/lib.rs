//! Benchmark harness: a seeded corpus over the experiment grid, repeated
//! timing with early stop and timeouts, per-class scoring and table output.

pub mod corpus;
pub mod error;
pub mod grid;
pub mod harness;
pub mod report;
pub mod runner;
pub mod score;
pub mod timing;

pub use error::BenchError;
pub use grid::{all_classes, parse_selection, BenchClass};
pub use harness::{run, BenchConfig, BenchOutcome, TestRecord};
pub use report::{ClassSummary, TableKind};
pub use runner::Competitor;
pub use score::{score_class, ScorePair};
pub use timing::{TimingPolicy, TimingResult};
