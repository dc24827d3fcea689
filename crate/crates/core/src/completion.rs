//! Completion procedure with the single-computation position rule.
//!
//! Proposals start as the unit vectors. Each step increments every proposal at
//! one position whose weight has the sign opposite to its defect; a proposal
//! with negative (positive) defect is never incremented at a position `i` when
//! a later position with positive (negative) weight is present, which is
//! realized by scanning positions downward and stopping after the first
//! increment at a nonzero coordinate. Each minimal solution is then produced
//! by exactly one increment sequence.
//!
//! The zero vector has defect zero, so either sign could be taken first and
//! every solution would be reachable twice. The search therefore starts from
//! the unit vectors of the positive-weight positions only, which fixes the
//! first increment as positive.

use std::collections::HashSet;

use crate::basis::{Basis, Insertion, Solution};
use crate::dominance::SolutionIndex;
use crate::equation::WeightVector;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::solver::with_normalized;

/// A candidate vector with its cached defect.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Proposal {
    pub x: Vec<u64>,
    pub d: i64,
}

/// Proposals of one completion level, deduplicated.
#[derive(Debug, Clone, Default)]
pub struct ProposalSet {
    proposals: Vec<Proposal>,
    seen: HashSet<Vec<u64>>,
    duplicates: u64,
}

impl ProposalSet {
    /// Unit vectors of the positive-weight positions.
    pub fn initial(w: &WeightVector) -> Self {
        Self::units(w, (0..w.len()).filter(|&i| w[i] > 0))
    }

    /// All unit vectors `e_0 .. e_{n-1}`. Starting from this set reaches each
    /// solution once from each side.
    pub fn all_units(w: &WeightVector) -> Self {
        Self::units(w, 0..w.len())
    }

    fn units(w: &WeightVector, positions: impl Iterator<Item = usize>) -> Self {
        let mut set = Self::default();
        for i in positions {
            let mut x = vec![0; w.len()];
            x[i] = 1;
            set.push(Proposal { x, d: w[i] });
        }
        set
    }

    fn push(&mut self, p: Proposal) {
        if self.seen.insert(p.x.clone()) {
            self.proposals.push(p);
        } else {
            debug_assert!(false, "proposal {:?} generated twice", p.x);
            self.duplicates += 1;
        }
    }

    pub fn len(&self) -> usize {
        self.proposals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proposals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Proposal> {
        self.proposals.iter()
    }

    /// Identical proposals merged so far; nonzero means the position rule was
    /// violated.
    pub fn duplicates(&self) -> u64 {
        self.duplicates
    }
}

/// Output of one completion step.
#[derive(Debug, Clone, Default)]
pub struct Step {
    pub solutions: Vec<Solution>,
    pub next: ProposalSet,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub levels: u64,
    pub proposals: u64,
    /// Every zero-defect child produced, including any repeats.
    pub emissions: u64,
    /// Emissions equal to an earlier emission.
    pub duplicate_emissions: u64,
    pub duplicate_proposals: u64,
    pub evictions: u64,
    pub min_defect: i64,
    pub max_defect: i64,
}

pub fn completion_solve(w: &WeightVector) -> Result<Basis> {
    completion_solve_with(w, &Limits::default()).map(|(b, _)| b)
}

pub fn completion_solve_with(
    w: &WeightVector,
    limits: &Limits,
) -> Result<(Basis, CompletionStats)> {
    let mut stats = CompletionStats::default();
    let basis = with_normalized(w, |residual| {
        let (b, s) = run(residual, limits)?;
        stats = s;
        Ok(b)
    })?;
    Ok((basis, stats))
}

fn run(w: &WeightVector, limits: &Limits) -> Result<(Basis, CompletionStats)> {
    let mut stats = CompletionStats::default();
    let mut basis = Basis::new();
    if !w.is_mixed() {
        return Ok((basis, stats));
    }
    let watch = limits.start();
    let mut index = SolutionIndex::new(w.len());
    let mut emitted = HashSet::new();
    let mut pset = ProposalSet::initial(w);
    while !pset.is_empty() {
        watch.check()?;
        stats.levels += 1;
        stats.proposals += pset.len() as u64;
        for p in pset.iter() {
            stats.min_defect = stats.min_defect.min(p.d);
            stats.max_defect = stats.max_defect.max(p.d);
        }
        let step = step_indexed(w, &pset, &index);
        stats.duplicate_proposals += step.next.duplicates();
        if step.next.len() > limits.frontier_cap {
            return Err(Error::FrontierCapExceeded {
                size: step.next.len(),
                cap: limits.frontier_cap,
            });
        }
        for s in step.solutions {
            stats.emissions += 1;
            if !emitted.insert(s.clone()) {
                stats.duplicate_emissions += 1;
                continue;
            }
            index.insert(&s);
            match basis.insert_minimal(s) {
                Insertion::Added { evicted } => stats.evictions += evicted as u64,
                Insertion::Rejected => debug_assert!(false, "emitted solution is not minimal"),
            }
        }
        pset = step.next;
    }
    Ok((basis, stats))
}

/// One completion step against an explicit set of found solutions.
pub fn completion_step(w: &WeightVector, pset: &ProposalSet, found: &Basis) -> Step {
    let mut index = SolutionIndex::new(w.len());
    for s in found {
        index.insert(s);
    }
    step_indexed(w, pset, &index)
}

fn step_indexed(w: &WeightVector, pset: &ProposalSet, found: &SolutionIndex) -> Step {
    let n = w.len();
    let mut step = Step::default();
    for p in pset.iter() {
        debug_assert!(p.d != 0);
        for i in (0..n).rev() {
            let wi = w[i];
            if (p.d < 0 && wi < 0) || (p.d > 0 && wi > 0) {
                continue;
            }
            let mut child = p.x.clone();
            child[i] += 1;
            let d = p.d + wi;
            if d == 0 {
                step.solutions.push(Solution::new(child));
            } else if !found.dominates_child(&child, i) {
                step.next.push(Proposal { x: child, d });
            }
            if p.x[i] > 0 {
                break;
            }
        }
    }
    step
}

/// Completion without the position rule: every sign-admissible increment is
/// taken and repeats are merged. Exponentially slower; kept for debugging the
/// rule itself.
pub fn completion_solve_unrestricted(w: &WeightVector) -> Result<Basis> {
    with_normalized(w, |w| {
        let n = w.len();
        let mut basis = Basis::new();
        if !w.is_mixed() {
            return Ok(basis);
        }
        let mut index = SolutionIndex::new(n);
        let mut level: Vec<Proposal> = ProposalSet::all_units(w).proposals;
        while !level.is_empty() {
            let mut next = HashSet::new();
            let mut found = Vec::new();
            for p in &level {
                for i in 0..n {
                    if (p.d < 0) == (w[i] < 0) {
                        continue;
                    }
                    let mut child = p.x.clone();
                    child[i] += 1;
                    let d = p.d + w[i];
                    if d == 0 {
                        found.push(child);
                    } else if !index.dominates_any(&child) {
                        next.insert(Proposal { x: child, d });
                    }
                }
            }
            for s in found {
                if !basis.contains(&s) {
                    index.insert(&s);
                    basis.insert_minimal(Solution::new(s));
                }
            }
            let mut sorted: Vec<_> = next.into_iter().collect();
            sorted.sort_by(|a, b| a.x.cmp(&b.x));
            level = sorted;
        }
        Ok(basis)
    })
}
