//! Solution vectors, componentwise dominance, and the minimal-solution set.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A natural-number vector, one entry per unknown.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Solution(Vec<u64>);

impl Solution {
    pub fn new(x: Vec<u64>) -> Self {
        Self(x)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// Coordinate sum, i.e. the completion level at which it is found.
    pub fn level(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::ops::Deref for Solution {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Solution {
    fn from(x: Vec<u64>) -> Self {
        Self(x)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `s ≤ t` componentwise. Slices must have equal length.
#[inline]
pub fn le(s: &[u64], t: &[u64]) -> bool {
    debug_assert_eq!(s.len(), t.len());
    s.iter().zip(t).all(|(a, b)| a <= b)
}

/// Strict componentwise dominance: `s ≤ t` and `s ≠ t`.
pub fn dominates(s: &[u64], t: &[u64]) -> bool {
    le(s, t) && s != t
}

/// Outcome of [`Basis::insert_minimal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    /// Added; `evicted` previously stored solutions were dominated by it.
    Added { evicted: usize },
    /// Already present, or dominated by a stored solution.
    Rejected,
}

/// A set of pairwise incomparable solutions, kept in lexicographic order.
///
/// Since `z ≤ s` componentwise implies `z ≤ s` lexicographically, solutions
/// that could dominate `s` all sort before it and solutions it could dominate
/// all sort after it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basis {
    solutions: Vec<Solution>,
}

impl Basis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Solution> {
        self.solutions.iter()
    }

    pub fn as_slice(&self) -> &[Solution] {
        &self.solutions
    }

    pub fn contains(&self, s: &[u64]) -> bool {
        self.position(s).is_ok()
    }

    fn position(&self, s: &[u64]) -> Result<usize, usize> {
        self.solutions
            .binary_search_by(|probe| probe.as_ref().cmp(s))
    }

    /// Whether some stored solution is `≤ s` (including equal).
    pub fn covers(&self, s: &[u64]) -> bool {
        let end = match self.position(s) {
            Ok(_) => return true,
            Err(end) => end,
        };
        self.solutions[..end].iter().any(|z| le(z, s))
    }

    /// Adds `s` unless a stored solution is `≤ s`; drops stored solutions that
    /// `s` dominates.
    pub fn insert_minimal(&mut self, s: Solution) -> Insertion {
        let at = match self.position(&s) {
            Ok(_) => return Insertion::Rejected,
            Err(at) => at,
        };
        if self.solutions[..at].iter().any(|z| le(z, &s)) {
            return Insertion::Rejected;
        }
        let before = self.solutions.len();
        let mut index = at;
        self.solutions.retain(|t| {
            let keep = index > 0 || !le(&s, t);
            index = index.saturating_sub(1);
            keep
        });
        // `retain` visits in order; the first `at` entries are always kept.
        let evicted = before - self.solutions.len();
        self.solutions.insert(at, s);
        Insertion::Added { evicted }
    }

    /// Builds a basis from solutions already known to be pairwise
    /// incomparable, e.g. the output of a solver whose invariants guarantee it.
    pub fn from_incomparable(mut solutions: Vec<Solution>) -> Self {
        solutions.sort_unstable();
        solutions.dedup();
        debug_assert!(
            solutions
                .windows(2)
                .all(|p| p[0].cmp(&p[1]) == Ordering::Less),
            "duplicates after dedup"
        );
        Self { solutions }
    }

    /// Canonical text form: one solution per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.solutions {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn into_vec(self) -> Vec<Solution> {
        self.solutions
    }
}

impl FromIterator<Solution> for Basis {
    fn from_iter<I: IntoIterator<Item = Solution>>(iter: I) -> Self {
        let mut basis = Basis::new();
        for s in iter {
            basis.insert_minimal(s);
        }
        basis
    }
}

impl<'a> IntoIterator for &'a Basis {
    type Item = &'a Solution;
    type IntoIter = std::slice::Iter<'a, Solution>;

    fn into_iter(self) -> Self::IntoIter {
        self.solutions.iter()
    }
}

impl IntoIterator for Basis {
    type Item = Solution;
    type IntoIter = std::vec::IntoIter<Solution>;

    fn into_iter(self) -> Self::IntoIter {
        self.solutions.into_iter()
    }
}
