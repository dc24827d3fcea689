//! The 160-cell experiment grid.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::BenchError;

/// Column values of the grid, i.e. the largest coefficient of a test.
pub const MAX_VALUES: [u64; 9] = [2, 3, 5, 13, 29, 39, 107, 503, 1021];

/// Populated rows: `(N, M, number of MaxValue columns)`. Every row is a prefix
/// of [`MAX_VALUES`].
const ROWS: [(u8, u8, usize); 21] = [
    (1, 2, 9),
    (1, 3, 9),
    (1, 4, 9),
    (1, 5, 9),
    (1, 6, 8),
    (1, 7, 8),
    (1, 8, 7),
    (1, 9, 6),
    (2, 2, 9),
    (2, 3, 9),
    (2, 4, 9),
    (2, 5, 8),
    (2, 6, 7),
    (2, 7, 6),
    (2, 8, 6),
    (3, 3, 8),
    (3, 4, 7),
    (3, 5, 7),
    (3, 6, 6),
    (4, 4, 7),
    (4, 5, 6),
];

/// One grid cell: `N` lhs unknowns, `M` rhs unknowns, largest coefficient `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BenchClass {
    pub n: u8,
    pub m: u8,
    pub max_value: u64,
}

impl BenchClass {
    /// Fails unless the cell is one of the populated grid cells.
    pub fn new(n: u8, m: u8, max_value: u64) -> Result<Self, BenchError> {
        let class = Self { n, m, max_value };
        if all_classes().contains(&class) {
            Ok(class)
        } else {
            Err(BenchError::UnknownClass(class.to_string()))
        }
    }

    /// Stable id used to derive the class's random stream.
    pub fn stream_id(&self) -> u64 {
        let column = MAX_VALUES
            .iter()
            .position(|&a| a == self.max_value)
            .unwrap_or(99) as u64;
        u64::from(self.n) * 10_000 + u64::from(self.m) * 100 + column
    }
}

impl fmt::Display for BenchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.m, self.max_value)
    }
}

impl FromStr for BenchClass {
    type Err = BenchError;

    /// `"N,M,A"`.
    fn from_str(s: &str) -> Result<Self, BenchError> {
        let bad = || BenchError::UnknownClass(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, m, a] = parts.as_slice() else {
            return Err(bad());
        };
        let n = n.parse().map_err(|_| bad())?;
        let m = m.parse().map_err(|_| bad())?;
        let a = a.parse().map_err(|_| bad())?;
        Self::new(n, m, a)
    }
}

/// Row keys `(N, M)` in table order with the number of populated columns.
pub fn rows() -> impl Iterator<Item = (u8, u8, usize)> {
    ROWS.into_iter()
}

pub fn all_classes() -> Vec<BenchClass> {
    ROWS.iter()
        .flat_map(|&(n, m, count)| {
            MAX_VALUES[..count]
                .iter()
                .map(move |&max_value| BenchClass { n, m, max_value })
        })
        .collect()
}

/// `"all"` or a `;`-separated list of `N,M,A` cells.
pub fn parse_selection(selection: &str) -> Result<Vec<BenchClass>, BenchError> {
    if selection.trim() == "all" {
        return Ok(all_classes());
    }
    selection
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_has_160_cells() {
        let classes = all_classes();
        assert_eq!(classes.len(), 160);
        for c in &classes {
            assert!(c.n <= c.m);
            assert!((1..=4).contains(&c.n) && (2..=9).contains(&c.m));
        }
        let mut ids: Vec<_> = classes.iter().map(BenchClass::stream_id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 160);
    }

    #[test]
    fn selection_parsing() {
        assert_eq!(parse_selection("all").unwrap().len(), 160);
        let picked = parse_selection("1,2,2;2,3,1021").unwrap();
        assert_eq!(
            picked[1],
            BenchClass {
                n: 2,
                m: 3,
                max_value: 1021
            }
        );
        // (1, 9, 107) is blank in the grid
        assert!(parse_selection("1,9,107").is_err());
        assert!(parse_selection("1,2").is_err());
    }
}
