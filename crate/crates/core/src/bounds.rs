//! Upper bounds on the coordinates of minimal solutions.
//!
//! For a minimal solution every left-hand unknown is at most `max b` and every
//! right-hand unknown at most `max a` (Huet). The sums over each side obey the
//! same limits (Lambert), which is strictly stronger.

use serde::{Deserialize, Serialize};

use crate::equation::{Equation, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub huet_lhs: u64,
    pub huet_rhs: u64,
    pub lambert_lhs_sum: u64,
    pub lambert_rhs_sum: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    Huet,
    Lambert,
}

impl Bounds {
    pub fn for_weights(w: &WeightVector) -> Self {
        let max_a = w.max_a() as u64;
        let max_b = w.max_b() as u64;
        Self {
            huet_lhs: max_b,
            huet_rhs: max_a,
            lambert_lhs_sum: max_b,
            lambert_rhs_sum: max_a,
        }
    }

    /// Per-coordinate check; positive weights count as left-hand side.
    pub fn satisfies_huet(&self, w: &WeightVector, x: &[u64]) -> bool {
        w.as_slice().iter().zip(x).all(|(&wi, &xi)| {
            if wi > 0 {
                xi <= self.huet_lhs
            } else {
                xi <= self.huet_rhs
            }
        })
    }

    pub fn satisfies_lambert(&self, w: &WeightVector, x: &[u64]) -> bool {
        let (lhs, rhs) = side_sums(w, x);
        lhs <= self.lambert_lhs_sum && rhs <= self.lambert_rhs_sum
    }
}

/// Coordinate sums over the positive-weight and negative-weight positions.
pub fn side_sums(w: &WeightVector, x: &[u64]) -> (u64, u64) {
    w.as_slice()
        .iter()
        .zip(x)
        .fold((0, 0), |(lhs, rhs), (&wi, &xi)| {
            if wi > 0 {
                (lhs + xi, rhs)
            } else if wi < 0 {
                (lhs, rhs + xi)
            } else {
                (lhs, rhs)
            }
        })
}

pub fn bounds(eq: &Equation) -> Bounds {
    Bounds::for_weights(&eq.weights())
}
