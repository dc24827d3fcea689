//! Per-class scoring: one point per test to the faster solver, half a point
//! each on a tie, and a class win at eight points or more.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Points needed out of ten to win a class.
pub const WIN_THRESHOLD: f64 = 8.0;

/// Scores kept in half points so they stay exact.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScorePair {
    pub first_halves: u32,
    pub second_halves: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    First,
    Second,
}

impl ScorePair {
    pub fn first(&self) -> f64 {
        f64::from(self.first_halves) / 2.0
    }

    pub fn second(&self) -> f64 {
        f64::from(self.second_halves) / 2.0
    }

    pub fn winner(&self) -> Option<Winner> {
        if self.first() >= WIN_THRESHOLD {
            Some(Winner::First)
        } else if self.second() >= WIN_THRESHOLD {
            Some(Winner::Second)
        } else {
            None
        }
    }
}

fn points(halves: u32) -> String {
    if halves % 2 == 0 {
        (halves / 2).to_string()
    } else {
        format!("{}.5", halves / 2)
    }
}

impl fmt::Display for ScorePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}",
            points(self.first_halves),
            points(self.second_halves)
        )
    }
}

/// Scores paired per-test times in seconds. With `epsilon`, times closer
/// than it tie; without, only equal times tie.
pub fn score_class(first: &[f64], second: &[f64], epsilon: Option<f64>) -> ScorePair {
    assert_eq!(first.len(), second.len(), "timings must be paired");
    let mut score = ScorePair::default();
    for (&a, &b) in first.iter().zip(second) {
        let tie = match epsilon {
            Some(eps) => (a - b).abs() < eps,
            None => a == b,
        };
        if tie {
            score.first_halves += 1;
            score.second_halves += 1;
        } else if a < b {
            score.first_halves += 2;
        } else {
            score.second_halves += 2;
        }
    }
    score
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_four_has_no_winner() {
        let first = [1.0; 10];
        let second = [2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 0.5, 0.5, 0.5, 0.5];
        let s = score_class(&first, &second, None);
        assert_eq!(s.to_string(), "6:4");
        assert_eq!(s.winner(), None);
    }

    #[test]
    fn all_within_epsilon_is_five_five() {
        let first = [0.100; 10];
        let second = [0.105; 10];
        assert_eq!(score_class(&first, &second, Some(0.01)).to_string(), "5:5");
        assert_eq!(score_class(&first, &second, None).to_string(), "10:0");
    }

    #[test]
    fn nine_and_a_tie_wins() {
        let mut first = [1.0; 10];
        first[9] = 3.0;
        let mut second = [2.0; 10];
        second[9] = 3.0;
        let s = score_class(&first, &second, None);
        assert_eq!(s.to_string(), "9.5:0.5");
        assert_eq!(s.winner(), Some(Winner::First));
        assert_eq!(s.first_halves + s.second_halves, 20);
    }

    #[test]
    fn eight_points_is_enough() {
        let first = [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0];
        let s = score_class(&first, &[2.0; 10], None);
        assert_eq!(s.winner(), Some(Winner::First));
        let s = score_class(&[2.0; 10], &first, None);
        assert_eq!(s.winner(), Some(Winner::Second));
    }
}
