//! Grid-shaped tables: wins, epsilon-tie wins, timeouts, and total seconds.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::grid::{rows, BenchClass, MAX_VALUES};
use crate::score::{ScorePair, Winner};

/// Columns below this MaxValue are left out of the totals table.
pub const TOTALS_MIN_COLUMN: u64 = 13;

/// Everything the tables need about one class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub class: BenchClass,
    pub score: ScorePair,
    pub score_epsilon: ScorePair,
    pub timeouts: (u32, u32),
    pub seconds: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Wins,
    EpsilonWins,
    Timeouts,
    Totals,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [
        TableKind::Wins,
        TableKind::EpsilonWins,
        TableKind::Timeouts,
        TableKind::Totals,
    ];

    pub fn file_stem(&self) -> &'static str {
        match self {
            TableKind::Wins => "wins",
            TableKind::EpsilonWins => "wins_epsilon",
            TableKind::Timeouts => "timeouts",
            TableKind::Totals => "totals",
        }
    }

    fn columns(&self) -> Vec<u64> {
        match self {
            TableKind::Totals => MAX_VALUES
                .iter()
                .copied()
                .filter(|&a| a >= TOTALS_MIN_COLUMN)
                .collect(),
            _ => MAX_VALUES.to_vec(),
        }
    }
}

/// Seconds with one decimal and no leading zero: `0.049 -> ".0"`,
/// `2.9 -> "2.9"`.
pub fn format_seconds(seconds: f64) -> String {
    let s = format!("{seconds:.1}");
    match s.strip_prefix('0') {
        Some(rest) if rest.starts_with('.') => rest.to_string(),
        _ => s,
    }
}

/// Rendered tables in the three output formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedReports {
    pub text: String,
    pub csv: Vec<(TableKind, String)>,
    pub latex: String,
}

pub struct Report<'a> {
    labels: (&'a str, &'a str),
    epsilon: f64,
    cells: HashMap<BenchClass, &'a ClassSummary>,
    summaries: &'a [ClassSummary],
}

impl<'a> Report<'a> {
    pub fn new(labels: (&'a str, &'a str), epsilon: f64, summaries: &'a [ClassSummary]) -> Self {
        let cells = summaries.iter().map(|s| (s.class, s)).collect();
        Self {
            labels,
            epsilon,
            cells,
            summaries,
        }
    }

    fn title(&self, kind: TableKind) -> String {
        let (a, b) = self.labels;
        match kind {
            TableKind::Wins => format!("Faster-test counts {a}:{b} out of the tests of each class"),
            TableKind::EpsilonWins => format!(
                "Faster-test counts {a}:{b}, tests within {} s counted as ties",
                self.epsilon
            ),
            TableKind::Timeouts => format!("Timeouts {a}:{b} per class"),
            TableKind::Totals => format!(
                "Total seconds {a}:{b} per class (columns with A < {TOTALS_MIN_COLUMN} omitted)"
            ),
        }
    }

    /// Cell text, `None` for cells outside the grid and `-` for grid cells
    /// that were not run.
    fn cell(&self, kind: TableKind, n: u8, m: u8, column: u64, populated: bool) -> Option<String> {
        if !populated {
            return None;
        }
        let class = BenchClass {
            n,
            m,
            max_value: column,
        };
        let Some(s) = self.cells.get(&class) else {
            return Some("-".to_string());
        };
        Some(match kind {
            TableKind::Wins => s.score.to_string(),
            TableKind::EpsilonWins => s.score_epsilon.to_string(),
            TableKind::Timeouts => format!("{}:{}", s.timeouts.0, s.timeouts.1),
            TableKind::Totals => format!(
                "{}:{}",
                format_seconds(s.seconds.0),
                format_seconds(s.seconds.1)
            ),
        })
    }

    /// Rows of `(N, M, cells)`.
    fn grid(&self, kind: TableKind) -> Vec<(u8, u8, Vec<Option<String>>)> {
        let columns = kind.columns();
        rows()
            .map(|(n, m, count)| {
                let cells = columns
                    .iter()
                    .map(|&a| {
                        let populated = MAX_VALUES[..count].contains(&a);
                        self.cell(kind, n, m, a, populated)
                    })
                    .collect();
                (n, m, cells)
            })
            .collect()
    }

    pub fn class_wins(&self, epsilon: bool) -> (usize, usize) {
        self.summaries.iter().fold((0, 0), |(a, b), s| {
            let score = if epsilon { s.score_epsilon } else { s.score };
            match score.winner() {
                Some(Winner::First) => (a + 1, b),
                Some(Winner::Second) => (a, b + 1),
                None => (a, b),
            }
        })
    }

    pub fn total_seconds(&self) -> (f64, f64) {
        self.summaries
            .iter()
            .fold((0.0, 0.0), |(a, b), s| (a + s.seconds.0, b + s.seconds.1))
    }

    pub fn total_timeouts(&self) -> (u32, u32) {
        self.summaries
            .iter()
            .fold((0, 0), |(a, b), s| (a + s.timeouts.0, b + s.timeouts.1))
    }

    fn footer(&self, kind: TableKind) -> String {
        let (a, b) = self.labels;
        match kind {
            TableKind::Wins | TableKind::EpsilonWins => {
                let (wa, wb) = self.class_wins(kind == TableKind::EpsilonWins);
                format!(
                    "{a} wins {wa} classes, {b} wins {wb} classes (of {})",
                    self.summaries.len()
                )
            }
            TableKind::Timeouts => {
                let (ta, tb) = self.total_timeouts();
                format!("timeouts: {a} {ta}, {b} {tb}")
            }
            TableKind::Totals => {
                let (sa, sb) = self.total_seconds();
                format!("total seconds over all classes: {a} {sa:.2}, {b} {sb:.2}")
            }
        }
    }

    pub fn text(&self, kind: TableKind) -> String {
        let columns = kind.columns();
        let grid = self.grid(kind);
        let width = grid
            .iter()
            .flat_map(|(_, _, cells)| cells.iter().flatten().map(String::len))
            .chain(columns.iter().map(|a| a.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        writeln!(out, "{}", self.title(kind)).unwrap();
        let mut header = format!("{:<2} {:<2} {:>1}", "", "A", "");
        for a in &columns {
            write!(header, "  {a:>width$}").unwrap();
        }
        let rule = "-".repeat(header.len());
        writeln!(
            out,
            "{rule}\n{}\n{:<2} {:<2}\n{rule}",
            header.trim_end(),
            "N",
            "M"
        )
        .unwrap();
        let mut last_n = None;
        for (n, m, cells) in grid {
            if last_n.is_some_and(|l| l != n) {
                writeln!(out, "{rule}").unwrap();
            }
            last_n = Some(n);
            let mut line = format!("{n:<2} {m:<2}  ");
            for cell in cells {
                write!(line, "  {:>width$}", cell.unwrap_or_default()).unwrap();
            }
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
        writeln!(out, "{rule}\n{}", self.footer(kind)).unwrap();
        out
    }

    pub fn csv(&self, kind: TableKind) -> String {
        let mut out = String::from("N,M");
        for a in kind.columns() {
            write!(out, ",{a}").unwrap();
        }
        out.push('\n');
        for (n, m, cells) in self.grid(kind) {
            write!(out, "{n},{m}").unwrap();
            for cell in cells {
                write!(out, ",{}", cell.unwrap_or_default()).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn latex(&self, kind: TableKind) -> String {
        let columns = kind.columns();
        let mut out = String::new();
        writeln!(out, "% {}", self.title(kind)).unwrap();
        writeln!(
            out,
            "\\begin{{tabular}}{{{}}}",
            "c".repeat(columns.len() + 2)
        )
        .unwrap();
        writeln!(out, "\\hline").unwrap();
        let header: Vec<String> = columns.iter().map(u64::to_string).collect();
        writeln!(out, "& A & {} \\\\", header.join(" & ")).unwrap();
        writeln!(out, "N & M \\\\\n\\hline").unwrap();
        let mut last_n = None;
        for (n, m, cells) in self.grid(kind) {
            if last_n.is_some_and(|l| l != n) {
                writeln!(out, "\\hline").unwrap();
            }
            last_n = Some(n);
            let cells: Vec<String> = cells.into_iter().map(Option::unwrap_or_default).collect();
            writeln!(out, "{n} & {m} & {} \\\\", cells.join(" & ")).unwrap();
        }
        writeln!(out, "\\hline\n\\end{{tabular}}").unwrap();
        out
    }

    pub fn render(&self) -> RenderedReports {
        let text = TableKind::ALL
            .iter()
            .map(|k| self.text(*k))
            .collect::<Vec<_>>()
            .join("\n");
        let csv = TableKind::ALL.iter().map(|k| (*k, self.csv(*k))).collect();
        let latex = TableKind::ALL
            .iter()
            .map(|k| self.latex(*k))
            .collect::<Vec<_>>()
            .join("\n");
        RenderedReports { text, csv, latex }
    }
}

pub fn render_reports(
    labels: (&str, &str),
    epsilon: f64,
    summaries: &[ClassSummary],
) -> RenderedReports {
    Report::new(labels, epsilon, summaries).render()
}
