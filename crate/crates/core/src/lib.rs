//! Solvers for the minimal natural-number solutions of homogeneous linear
//! Diophantine equations `a_1 x_1 + .. + a_l x_l = b_1 y_1 + .. + b_k y_k`.
//!
//! Four algorithms compute the same basis:
//!
//! - [`lex`]: bounded lexicographic enumeration, in four variants;
//! - [`completion`]: the completion procedure over proposals;
//! - [`graph`]: the completion search over a precomputed defect digraph;
//! - [`slopes`]: direct generation for three unknowns, wrapped by enumeration.
//!
//! [`oracle`] is the exhaustive reference and [`acu`] turns a basis into an
//! ACU unifier.

pub mod acu;
pub mod arith;
pub mod basis;
pub mod bounds;
pub mod completion;
mod dominance;
pub mod equation;
pub mod error;
pub mod graph;
pub mod lex;
pub mod limits;
pub mod oracle;
pub mod slopes;
pub mod solver;

pub use basis::{dominates, Basis, Insertion, Solution};
pub use bounds::{bounds, BoundKind, Bounds};
pub use equation::{build_weights, defect, normalize_zero_weights, Equation, WeightVector};
pub use error::{Error, Result};
pub use limits::Limits;
pub use oracle::oracle_basis;
pub use solver::Algorithm;
