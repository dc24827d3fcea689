//! Top-most ACU unification: `f(u_1^{a_1}, ..) =? f(v_1^{b_1}, ..)` for one
//! associative-commutative symbol with a unit.
//!
//! Each minimal solution `s^j` of `Σ a_i x_i = Σ b_i y_i` contributes a fresh
//! variable `z_j`, and every original variable is mapped to the multiset that
//! holds `z_j` with multiplicity equal to its coordinate in `s^j`. An empty
//! multiset stands for the unit.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::equation::Equation;
use crate::error::{Error, Result};

/// A variable with its multiplicity under the AC symbol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub variable: String,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopMostProblem {
    pub symbol: String,
    pub lhs: Vec<Occurrence>,
    pub rhs: Vec<Occurrence>,
}

impl TopMostProblem {
    /// Problem for the given multiplicities, naming the variables
    /// `u1, u2, ..` across both sides.
    pub fn from_multiplicities(symbol: &str, lhs: &[u64], rhs: &[u64]) -> Self {
        let mut counter = 0;
        let mut side = |ms: &[u64]| {
            ms.iter()
                .map(|&multiplicity| {
                    counter += 1;
                    Occurrence {
                        variable: format!("u{counter}"),
                        multiplicity,
                    }
                })
                .collect()
        };
        let lhs = side(lhs);
        let rhs = side(rhs);
        Self {
            symbol: symbol.to_string(),
            lhs,
            rhs,
        }
    }

    pub fn from_equation(symbol: &str, eq: &Equation) -> Self {
        Self::from_multiplicities(symbol, eq.lhs(), eq.rhs())
    }

    fn variables(&self) -> impl Iterator<Item = &Occurrence> {
        self.lhs.iter().chain(&self.rhs)
    }
}

impl fmt::Display for TopMostProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |occ: &[Occurrence]| {
            occ.iter()
                .map(|o| match o.multiplicity {
                    1 => o.variable.clone(),
                    m => format!("{m}*{}", o.variable),
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{s}({}) =? {s}({})",
            side(&self.lhs),
            side(&self.rhs),
            s = self.symbol
        )
    }
}

pub fn problem_to_equation(p: &TopMostProblem) -> Result<Equation> {
    let side = |occ: &[Occurrence]| occ.iter().map(|o| o.multiplicity).collect::<Vec<_>>();
    Equation::new(side(&p.lhs), side(&p.rhs))
}

/// Substitution from original variables to multisets over `z1 .. zm`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unifier {
    /// Number of fresh variables.
    pub fresh: usize,
    /// Per original variable, in declaration order: `(fresh index, multiplicity)`
    /// pairs with nonzero multiplicity, fresh indices ascending and 0-based.
    pub bindings: Vec<(String, Vec<(usize, u64)>)>,
}

impl Unifier {
    pub fn multiplicity(&self, variable: usize, fresh: usize) -> u64 {
        self.bindings[variable]
            .1
            .iter()
            .find(|&&(z, _)| z == fresh)
            .map_or(0, |&(_, m)| m)
    }
}

impl fmt::Display for Unifier {
    /// One line per variable: `u1 = z3 + 2*z7`, or `u1 = 0` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, terms) in &self.bindings {
            write!(f, "{name} = ")?;
            if terms.is_empty() {
                f.write_str("0")?;
            }
            for (k, &(z, m)) in terms.iter().enumerate() {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                if m == 1 {
                    write!(f, "z{}", z + 1)?;
                } else {
                    write!(f, "{m}*z{}", z + 1)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One fresh variable per basis element, named in basis order.
pub fn basis_to_unifier(p: &TopMostProblem, basis: &Basis) -> Result<Unifier> {
    let n = p.lhs.len() + p.rhs.len();
    let mut bindings: Vec<(String, Vec<(usize, u64)>)> = p
        .variables()
        .map(|o| (o.variable.clone(), Vec::new()))
        .collect();
    for (j, s) in basis.iter().enumerate() {
        if s.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: s.len(),
            });
        }
        for (i, &m) in s.iter().enumerate() {
            if m > 0 {
                bindings[i].1.push((j, m));
            }
        }
    }
    Ok(Unifier {
        fresh: basis.len(),
        bindings,
    })
}

/// Applies the substitution to both sides and compares the flattened
/// multisets of fresh variables.
pub fn verify_unifier(p: &TopMostProblem, u: &Unifier) -> bool {
    if u.bindings.len() != p.lhs.len() + p.rhs.len() {
        return false;
    }
    let flatten = |occ: &[Occurrence], offset: usize| -> Option<BTreeMap<usize, u128>> {
        let mut counts = BTreeMap::new();
        for (k, o) in occ.iter().enumerate() {
            let (name, terms) = &u.bindings[offset + k];
            if *name != o.variable {
                return None;
            }
            for &(z, m) in terms {
                if z >= u.fresh {
                    return None;
                }
                *counts.entry(z).or_insert(0) += o.multiplicity as u128 * m as u128;
            }
        }
        counts.retain(|_, c| *c != 0);
        Some(counts)
    };
    match (flatten(&p.lhs, 0), flatten(&p.rhs, p.lhs.len())) {
        (Some(l), Some(r)) => l == r,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Solution;

    #[test]
    fn equation_from_problem() {
        let p =
            TopMostProblem::from_multiplicities("f", &[104, 167], &[165, 154, 148, 159, 174, 150]);
        let e = problem_to_equation(&p).unwrap();
        assert_eq!(e.lhs(), &[104, 167]);
        assert_eq!(e.rhs(), &[165, 154, 148, 159, 174, 150]);
        assert_eq!(p.rhs[5].variable, "u8");

        let p = TopMostProblem::from_multiplicities("f", &[2], &[1, 1]);
        assert_eq!(problem_to_equation(&p).unwrap().to_string(), "2 = 1 1");
    }

    #[test]
    fn trivial_unifier() {
        let p = TopMostProblem::from_multiplicities("f", &[1], &[1]);
        let basis = Basis::from_incomparable(vec![Solution::new(vec![1, 1])]);
        let u = basis_to_unifier(&p, &basis).unwrap();
        assert_eq!(u.to_string(), "u1 = z1\nu2 = z1\n");
        assert!(verify_unifier(&p, &u));
    }

    #[test]
    fn corrupted_unifier_fails() {
        let p = TopMostProblem::from_multiplicities("f", &[2], &[1, 1]);
        let basis = Basis::from_incomparable(vec![
            Solution::new(vec![1, 0, 2]),
            Solution::new(vec![1, 1, 1]),
            Solution::new(vec![1, 2, 0]),
        ]);
        let mut u = basis_to_unifier(&p, &basis).unwrap();
        assert!(verify_unifier(&p, &u));
        assert_eq!(
            u.to_string(),
            "u1 = z1 + z2 + z3\nu2 = z2 + 2*z3\nu3 = 2*z1 + z2\n"
        );
        u.bindings[1].1[0].1 += 1;
        assert!(!verify_unifier(&p, &u));
    }

    #[test]
    fn unit_is_printed_for_empty_multiset() {
        let p = TopMostProblem::from_multiplicities("f", &[1], &[1]);
        let u = basis_to_unifier(&p, &Basis::new()).unwrap();
        assert_eq!(u.to_string(), "u1 = 0\nu2 = 0\n");
        assert!(verify_unifier(&p, &u));
    }
}
