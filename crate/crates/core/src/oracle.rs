//! Brute-force reference basis: scan the whole Huet box, keep the minimal
//! nonzero zero-defect vectors.

use crate::basis::{Basis, Solution};
use crate::equation::{Equation, WeightVector};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_CAP: u128 = 100_000_000;

/// Number of candidate vectors in the Huet box of `w`.
pub fn box_size(w: &WeightVector) -> u128 {
    (0..w.len())
        .map(|i| w.huet_bound(i) as u128 + 1)
        .try_fold(1u128, |acc, side| acc.checked_mul(side))
        .unwrap_or(u128::MAX)
}

pub fn oracle_basis(eq: &Equation) -> Result<Basis> {
    oracle_basis_with_cap(&eq.weights(), DEFAULT_ORACLE_CAP)
}

/// Exhaustive enumeration in lexicographic order. Works for any signed
/// weights; zero-weight positions are bounded by 1 so their unit vectors show
/// up as solutions.
pub fn oracle_basis_with_cap(w: &WeightVector, cap: u128) -> Result<Basis> {
    let n = w.len();
    let limits: Vec<u64> = (0..n)
        .map(|i| if w[i] == 0 { 1 } else { w.huet_bound(i) })
        .collect();
    let size = limits
        .iter()
        .try_fold(1u128, |acc, &l| acc.checked_mul(l as u128 + 1))
        .unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::OracleCapExceeded { size, cap });
    }

    let weights = w.as_slice();
    let mut x = vec![0u64; n];
    let mut defect: i64 = 0;
    let mut basis = Basis::new();
    loop {
        // odometer step, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(basis);
            }
            i -= 1;
            if x[i] < limits[i] {
                x[i] += 1;
                defect += weights[i];
                break;
            }
            defect -= weights[i] * x[i] as i64;
            x[i] = 0;
        }
        if defect == 0 {
            basis.insert_minimal(Solution::new(x.clone()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(lhs: &[u64], rhs: &[u64]) -> Vec<Vec<u64>> {
        let eq = Equation::new(lhs.to_vec(), rhs.to_vec()).unwrap();
        oracle_basis(&eq)
            .unwrap()
            .into_iter()
            .map(Solution::into_inner)
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve(&[1], &[1]), vec![vec![1, 1]]);
        assert_eq!(solve(&[2], &[1]), vec![vec![1, 2]]);
        assert_eq!(solve(&[1], &[2]), vec![vec![2, 1]]);
        assert_eq!(solve(&[2, 1], &[1]), vec![vec![0, 1, 1], vec![1, 0, 2]]);
        assert_eq!(
            solve(&[5], &[3, 2]),
            vec![vec![1, 1, 1], vec![2, 0, 5], vec![3, 5, 0]]
        );
    }

    #[test]
    fn zero_weight_positions_are_units() {
        let w = WeightVector::new(vec![1, 0, -1]);
        let b = oracle_basis_with_cap(&w, 1000).unwrap();
        let got: Vec<_> = b.into_iter().map(Solution::into_inner).collect();
        assert_eq!(got, vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn cap_is_enforced() {
        let eq = Equation::new(vec![1000, 1000], vec![1000, 1000]).unwrap();
        let w = eq.weights();
        assert_eq!(box_size(&w), 1001u128.pow(4));
        assert_eq!(
            oracle_basis_with_cap(&w, 1000),
            Err(Error::OracleCapExceeded {
                size: 1001u128.pow(4),
                cap: 1000
            })
        );
    }
}
