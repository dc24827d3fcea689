//! Equations, their weight form, and defect arithmetic.
//!
//! An [`Equation`] keeps the two sides apart: `a_1 x_1 + .. + a_l x_l =
//! b_1 y_1 + .. + b_k y_k` over `l + k` distinct unknowns. Solvers work on the
//! flattened [`WeightVector`] `w = (a_1, .., a_l, -b_1, .., -b_k)`, for which a
//! vector `x` is a solution iff its defect `Σ w_i x_i` is zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::Solution;
use crate::error::{Error, Result};

/// Largest coefficient accepted at the API boundary.
pub const MAX_COEFFICIENT: u64 = 1 << 20;

/// A homogeneous linear Diophantine equation with disjoint unknowns per side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Equation {
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

impl Equation {
    pub fn new(lhs: Vec<u64>, rhs: Vec<u64>) -> Result<Self> {
        if lhs.is_empty() {
            return Err(Error::EmptySide("lhs"));
        }
        if rhs.is_empty() {
            return Err(Error::EmptySide("rhs"));
        }
        for (position, &value) in lhs.iter().chain(rhs.iter()).enumerate() {
            if value == 0 || value > MAX_COEFFICIENT {
                return Err(Error::CoefficientOutOfRange {
                    position,
                    value,
                    max: MAX_COEFFICIENT,
                });
            }
        }
        Ok(Self { lhs, rhs })
    }

    pub fn lhs(&self) -> &[u64] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[u64] {
        &self.rhs
    }

    /// Total number of unknowns, `l + k`.
    pub fn unknowns(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    pub fn max_lhs(&self) -> u64 {
        self.lhs.iter().copied().max().unwrap_or(0)
    }

    pub fn max_rhs(&self) -> u64 {
        self.rhs.iter().copied().max().unwrap_or(0)
    }

    pub fn weights(&self) -> WeightVector {
        build_weights(self)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |side: &[u64]| {
            side.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} = {}", join(&self.lhs), join(&self.rhs))
    }
}

impl FromStr for Equation {
    type Err = Error;

    /// Parses `"2 3 = 1 4 5"`. Columns in errors are 1-based.
    fn from_str(text: &str) -> Result<Self> {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let mut seen_eq = false;
        let mut eq_column = 0;

        for (start, token) in tokens(text) {
            let column = start + 1;
            if token == "=" {
                if seen_eq {
                    return Err(parse_error(column, "second `=`"));
                }
                seen_eq = true;
                eq_column = column;
                continue;
            }
            let value: u64 = token.parse().map_err(|_| {
                parse_error(
                    column,
                    format!("expected a positive integer, found `{token}`"),
                )
            })?;
            if value == 0 || value > MAX_COEFFICIENT {
                return Err(parse_error(
                    column,
                    format!("coefficient {value} is outside [1, {MAX_COEFFICIENT}]"),
                ));
            }
            if seen_eq { &mut rhs } else { &mut lhs }.push(value);
        }

        if !seen_eq {
            return Err(parse_error(text.len() + 1, "missing `=`"));
        }
        if lhs.is_empty() {
            return Err(parse_error(eq_column, "no coefficients before `=`"));
        }
        if rhs.is_empty() {
            return Err(parse_error(text.len() + 1, "no coefficients after `=`"));
        }
        Equation::new(lhs, rhs)
    }
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their byte offsets. `=` is its own token
/// even without surrounding spaces.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() || ch == '=' {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
            if ch == '=' {
                out.push((i, &text[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

/// Signed weights `w_i`; a vector solves the equation iff `Σ w_i x_i = 0`.
///
/// `max_a` is the largest positive weight and `max_b` the magnitude of the most
/// negative one. Positive positions play the role of the left-hand side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    w: Vec<i64>,
    max_a: i64,
    max_b: i64,
}

impl WeightVector {
    /// Builds a weight vector from arbitrary signed weights. Zero weights are
    /// allowed here; see [`normalize_zero_weights`].
    pub fn new(w: Vec<i64>) -> Self {
        let max_a = w.iter().copied().filter(|&x| x > 0).max().unwrap_or(0);
        let max_b = w
            .iter()
            .copied()
            .filter(|&x| x < 0)
            .map(|x| -x)
            .max()
            .unwrap_or(0);
        Self { w, max_a, max_b }
    }

    /// Weights for the shared-unknown form `Σ a_i x_i = Σ b_i x_i`, i.e.
    /// `w_i = a_i - b_i`. Positions with `a_i = b_i` get weight zero.
    pub fn from_shared_unknowns(a: &[u64], b: &[u64]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        let w = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| {
                if x > MAX_COEFFICIENT || y > MAX_COEFFICIENT {
                    Err(Error::Overflow("shared-unknown weights"))
                } else {
                    Ok(x as i64 - y as i64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(w))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn max_a(&self) -> i64 {
        self.max_a
    }

    pub fn max_b(&self) -> i64 {
        self.max_b
    }

    pub fn has_zero(&self) -> bool {
        self.w.contains(&0)
    }

    /// Whether both signs occur; otherwise the only solution is zero.
    pub fn is_mixed(&self) -> bool {
        self.max_a > 0 && self.max_b > 0
    }

    /// Upper bound on a single coordinate of a minimal solution.
    pub fn huet_bound(&self, position: usize) -> u64 {
        if self.w[position] > 0 {
            self.max_b as u64
        } else {
            self.max_a as u64
        }
    }

    pub fn negated(&self) -> Self {
        Self::new(self.w.iter().map(|&x| -x).collect())
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = i64;

    fn index(&self, index: usize) -> &i64 {
        &self.w[index]
    }
}

/// `(a_1, .., a_l, -b_1, .., -b_k)`.
pub fn build_weights(eq: &Equation) -> WeightVector {
    let w = eq
        .lhs
        .iter()
        .map(|&a| a as i64)
        .chain(eq.rhs.iter().map(|&b| -(b as i64)))
        .collect();
    WeightVector::new(w)
}

/// `Σ w_i x_i` with overflow detection.
pub fn defect(w: &WeightVector, x: &[u64]) -> Result<i64> {
    if w.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: x.len(),
        });
    }
    w.as_slice()
        .iter()
        .zip(x)
        .try_fold(0i64, |acc, (&wi, &xi)| {
            let xi = i64::try_from(xi).map_err(|_| Error::Overflow("defect"))?;
            wi.checked_mul(xi)
                .and_then(|term| acc.checked_add(term))
                .ok_or(Error::Overflow("defect"))
        })
}

/// Result of removing zero-weight positions before a solver runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    /// Weights over the nonzero positions only.
    pub residual: WeightVector,
    /// Original index of each residual position.
    pub positions: Vec<usize>,
    /// Unit vectors `e_i` for every zero-weight position `i`.
    pub units: Vec<Solution>,
    unknowns: usize,
}

impl Normalized {
    /// Embeds a residual solution back into the original coordinates.
    pub fn lift(&self, residual: &[u64]) -> Solution {
        let mut full = vec![0; self.unknowns];
        for (&pos, &v) in self.positions.iter().zip(residual) {
            full[pos] = v;
        }
        Solution::new(full)
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }
}

/// Every zero-weight position `i` contributes `e_i` to the basis on its own
/// and cannot occur in any other minimal solution, so it is dropped from the
/// search.
pub fn normalize_zero_weights(w: &WeightVector) -> Normalized {
    let mut kept = Vec::new();
    let mut positions = Vec::new();
    let mut units = Vec::new();
    for (i, &wi) in w.as_slice().iter().enumerate() {
        if wi == 0 {
            let mut e = vec![0; w.len()];
            e[i] = 1;
            units.push(Solution::new(e));
        } else {
            kept.push(wi);
            positions.push(i);
        }
    }
    Normalized {
        residual: WeightVector::new(kept),
        positions,
        units,
        unknowns: w.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(lhs: &[u64], rhs: &[u64]) -> Equation {
        Equation::new(lhs.to_vec(), rhs.to_vec()).unwrap()
    }

    #[test]
    fn weights_negate_rhs() {
        let w = build_weights(&eq(&[1], &[2]));
        assert_eq!(w.as_slice(), &[1, -2]);
        assert_eq!((w.max_a(), w.max_b()), (1, 2));

        let w = build_weights(&eq(&[2, 3], &[1, 4, 5]));
        assert_eq!(w.as_slice(), &[2, 3, -1, -4, -5]);

        let w = build_weights(&eq(&[104, 167], &[165, 154, 148, 159, 174, 150]));
        assert_eq!(
            w.as_slice(),
            &[104, 167, -165, -154, -148, -159, -174, -150]
        );
        assert_eq!((w.max_a(), w.max_b()), (167, 174));
    }

    #[test]
    fn rejects_empty_and_out_of_range() {
        assert_eq!(Equation::new(vec![], vec![1]), Err(Error::EmptySide("lhs")));
        assert_eq!(Equation::new(vec![1], vec![]), Err(Error::EmptySide("rhs")));
        assert!(matches!(
            Equation::new(vec![0], vec![1]),
            Err(Error::CoefficientOutOfRange { position: 0, .. })
        ));
        assert!(Equation::new(vec![1], vec![MAX_COEFFICIENT + 1]).is_err());
    }

    #[test]
    fn defect_examples() {
        let w = WeightVector::new(vec![1, -2]);
        assert_eq!(defect(&w, &[2, 1]), Ok(0));
        assert_eq!(defect(&w, &[1, 1]), Ok(-1));
        let w = WeightVector::new(vec![5, -3, -2]);
        assert_eq!(defect(&w, &[1, 1, 1]), Ok(0));
    }

    #[test]
    fn defect_reports_overflow() {
        let w = WeightVector::new(vec![i64::MAX / 2, i64::MAX / 2]);
        assert_eq!(defect(&w, &[2, 2]), Err(Error::Overflow("defect")));
        assert_eq!(defect(&w, &[u64::MAX, 0]), Err(Error::Overflow("defect")));
        assert!(matches!(
            defect(&w, &[1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn parse_round_trip() {
        let e: Equation = "2 3 = 1 4 5".parse().unwrap();
        assert_eq!(e.lhs(), &[2, 3]);
        assert_eq!(e.rhs(), &[1, 4, 5]);
        assert_eq!(e.to_string(), "2 3 = 1 4 5");
        let tight: Equation = "1=2".parse().unwrap();
        assert_eq!(tight, eq(&[1], &[2]));
    }

    #[test]
    fn parse_errors_carry_columns() {
        let err = "1 x = 2".parse::<Equation>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 3, .. }), "{err:?}");
        let err = "1 2 3".parse::<Equation>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 6, .. }), "{err:?}");
        let err = "= 3".parse::<Equation>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 1, .. }), "{err:?}");
        let err = "1 = 2 = 3".parse::<Equation>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 7, .. }), "{err:?}");
        let err = "1 = 0".parse::<Equation>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 5, .. }), "{err:?}");
    }

    #[test]
    fn zero_weights_become_units() {
        let w = WeightVector::from_shared_unknowns(&[2], &[2]).unwrap();
        assert_eq!(w.as_slice(), &[0]);
        let n = normalize_zero_weights(&w);
        assert!(n.residual.is_empty());
        assert_eq!(n.units, vec![Solution::new(vec![1])]);

        let n = normalize_zero_weights(&WeightVector::new(vec![1, 0, -1]));
        assert_eq!(n.residual.as_slice(), &[1, -1]);
        assert_eq!(n.units, vec![Solution::new(vec![0, 1, 0])]);
        assert_eq!(n.lift(&[1, 1]), Solution::new(vec![1, 0, 1]));

        let w = WeightVector::new(vec![3, -2]);
        let n = normalize_zero_weights(&w);
        assert_eq!(n.residual, w);
        assert!(n.units.is_empty());
    }
}
