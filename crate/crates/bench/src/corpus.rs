//! Seeded test generation per grid class.
//!
//! Each class draws from its own ChaCha8 stream (`rand_chacha`), seeded with
//! the run seed and selected by [`BenchClass::stream_id`], so a class's tests
//! do not depend on which other classes are generated.

use std::collections::HashSet;

use lde_core::Equation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::grid::BenchClass;

pub const TESTS_PER_CLASS: usize = 10;

/// Redraws allowed per test before an exact duplicate is accepted.
const REDRAWS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCorpus {
    pub class: BenchClass,
    pub tests: Vec<Equation>,
    /// Tests that repeat an earlier one because the class has too few
    /// distinct equations.
    pub duplicates_accepted: usize,
}

/// Draws one equation: `N` lhs and `M - 1` rhs coefficients uniform in
/// `[1, A]`, plus one rhs coefficient fixed to `A`; lhs sorted descending,
/// rhs ascending.
fn draw(class: &BenchClass, rng: &mut ChaCha8Rng) -> Equation {
    let a = class.max_value;
    let mut lhs: Vec<u64> = (0..class.n).map(|_| rng.random_range(1..=a)).collect();
    let mut rhs: Vec<u64> = (1..class.m).map(|_| rng.random_range(1..=a)).collect();
    rhs.push(a);
    lhs.sort_unstable_by(|x, y| y.cmp(x));
    rhs.sort_unstable();
    Equation::new(lhs, rhs).expect("coefficients lie in [1, A]")
}

pub fn generate_class(class: &BenchClass, seed: u64) -> ClassCorpus {
    generate_class_sized(class, seed, TESTS_PER_CLASS)
}

pub fn generate_class_sized(class: &BenchClass, seed: u64, count: usize) -> ClassCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(class.stream_id());
    let mut seen = HashSet::new();
    let mut tests = Vec::with_capacity(count);
    let mut duplicates_accepted = 0;
    for _ in 0..count {
        let mut eq = draw(class, &mut rng);
        let mut redraws = 0;
        while seen.contains(&eq) && redraws < REDRAWS {
            eq = draw(class, &mut rng);
            redraws += 1;
        }
        if !seen.insert(eq.clone()) {
            duplicates_accepted += 1;
        }
        tests.push(eq);
    }
    ClassCorpus {
        class: *class,
        tests,
        duplicates_accepted,
    }
}

/// Text form: a `# N,M,A` header per class followed by one equation per line.
pub fn corpus_text(corpora: &[ClassCorpus]) -> String {
    let mut out = String::new();
    for c in corpora {
        out.push_str(&format!("# {}\n", c.class));
        for eq in &c.tests {
            out.push_str(&eq.to_string());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::all_classes;

    #[test]
    fn structural_postconditions() {
        for class in all_classes() {
            let corpus = generate_class(&class, 7);
            assert_eq!(corpus.tests.len(), TESTS_PER_CLASS);
            for eq in &corpus.tests {
                assert_eq!(eq.lhs().len(), class.n as usize);
                assert_eq!(eq.rhs().len(), class.m as usize);
                assert!(eq
                    .lhs()
                    .iter()
                    .chain(eq.rhs())
                    .all(|&c| (1..=class.max_value).contains(&c)));
                assert!(eq.rhs().contains(&class.max_value));
                assert!(eq.lhs().windows(2).all(|p| p[0] >= p[1]));
                assert!(eq.rhs().windows(2).all(|p| p[0] <= p[1]));
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let classes = all_classes();
        let a: Vec<_> = classes.iter().map(|c| generate_class(c, 42)).collect();
        let b: Vec<_> = classes.iter().map(|c| generate_class(c, 42)).collect();
        assert_eq!(corpus_text(&a), corpus_text(&b));
        let c: Vec<_> = classes.iter().map(|c| generate_class(c, 43)).collect();
        assert_ne!(corpus_text(&a), corpus_text(&c));
    }

    #[test]
    fn duplicates_only_when_class_is_tiny() {
        // N = 1, M = 2, A = 2 has only four distinct equations
        let tiny = generate_class(&BenchClass::new(1, 2, 2).unwrap(), 1);
        assert_eq!(tiny.duplicates_accepted, 6);
        let large = generate_class(&BenchClass::new(2, 3, 1021).unwrap(), 1);
        assert_eq!(large.duplicates_accepted, 0);
    }
}
