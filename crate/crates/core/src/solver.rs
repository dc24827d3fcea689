//! Uniform entry point over the four algorithms and the oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::{Basis, Solution};
use crate::bounds::BoundKind;
use crate::equation::{normalize_zero_weights, Equation, WeightVector};
use crate::error::Result;
use crate::lex::{LexVariant, TailKind};
use crate::limits::Limits;
use crate::oracle::{oracle_basis_with_cap, DEFAULT_ORACLE_CAP};
use crate::{completion, graph, lex, slopes};

/// Runs `solve` on the nonzero-weight part of `w` and lifts the result back,
/// adding a unit vector for each zero-weight position.
pub(crate) fn with_normalized<F>(w: &WeightVector, solve: F) -> Result<Basis>
where
    F: FnOnce(&WeightVector) -> Result<Basis>,
{
    if !w.has_zero() {
        return solve(w);
    }
    let normalized = normalize_zero_weights(w);
    let residual = solve(&normalized.residual)?;
    let mut all: Vec<Solution> = normalized.units.clone();
    all.extend(residual.iter().map(|s| normalized.lift(s)));
    Ok(Basis::from_incomparable(all))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Lex(LexVariant),
    Completion,
    Graph,
    Slopes,
    Oracle,
}

impl Algorithm {
    /// The four solvers compared against each other (lex in its default
    /// variant).
    pub const SOLVERS: [Algorithm; 4] = [
        Algorithm::Lex(LexVariant::new(BoundKind::Lambert, TailKind::LastTwo)),
        Algorithm::Completion,
        Algorithm::Graph,
        Algorithm::Slopes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Lex(_) => "lex",
            Algorithm::Completion => "completion",
            Algorithm::Graph => "graph",
            Algorithm::Slopes => "slopes",
            Algorithm::Oracle => "oracle",
        }
    }

    pub fn solve(&self, eq: &Equation) -> Result<Basis> {
        self.solve_weights(&eq.weights(), &Limits::default())
    }

    pub fn solve_weights(&self, w: &WeightVector, limits: &Limits) -> Result<Basis> {
        match *self {
            Algorithm::Lex(variant) => lex::lex_solve_weights(w, variant, limits).map(|(b, _)| b),
            Algorithm::Completion => completion::completion_solve_with(w, limits).map(|(b, _)| b),
            Algorithm::Graph => {
                graph::graph_solve_weights(w, &graph::GraphConfig::from(*limits)).map(|(b, _)| b)
            }
            Algorithm::Slopes => slopes::slopes_solve_weights(w, limits),
            Algorithm::Oracle => oracle_basis_with_cap(w, DEFAULT_ORACLE_CAP),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Lex(v) => {
                let bound = match v.bound {
                    BoundKind::Huet => "huet",
                    BoundKind::Lambert => "lambert",
                };
                let tail = match v.tail {
                    TailKind::LastOne => "one",
                    TailKind::LastTwo => "two",
                };
                write!(f, "lex-{bound}-{tail}")
            }
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    /// Accepts the plain names plus `lex-{huet|lambert}-{one|two}`.
    fn from_str(s: &str) -> Result<Self, String> {
        let lex = |bound, tail| Ok(Algorithm::Lex(LexVariant::new(bound, tail)));
        match s {
            "lex" => Ok(Algorithm::Lex(LexVariant::default())),
            "lex-huet-one" => lex(BoundKind::Huet, TailKind::LastOne),
            "lex-huet-two" => lex(BoundKind::Huet, TailKind::LastTwo),
            "lex-lambert-one" => lex(BoundKind::Lambert, TailKind::LastOne),
            "lex-lambert-two" => lex(BoundKind::Lambert, TailKind::LastTwo),
            "completion" => Ok(Algorithm::Completion),
            "graph" => Ok(Algorithm::Graph),
            "slopes" => Ok(Algorithm::Slopes),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for algo in LexVariant::ALL.into_iter().map(Algorithm::Lex).chain([
            Algorithm::Completion,
            Algorithm::Graph,
            Algorithm::Slopes,
            Algorithm::Oracle,
        ]) {
            assert_eq!(algo.to_string().parse::<Algorithm>(), Ok(algo));
        }
        assert!("simplex".parse::<Algorithm>().is_err());
    }

    #[test]
    fn zero_weights_are_lifted_for_every_solver() {
        let w = WeightVector::new(vec![2, 0, -1, 0]);
        let expected = Basis::from_incomparable(vec![
            Solution::new(vec![0, 1, 0, 0]),
            Solution::new(vec![0, 0, 0, 1]),
            Solution::new(vec![1, 0, 2, 0]),
        ]);
        for algo in Algorithm::SOLVERS.into_iter().chain([Algorithm::Oracle]) {
            assert_eq!(
                algo.solve_weights(&w, &Limits::default()).unwrap(),
                expected,
                "{algo}"
            );
        }
    }
}
