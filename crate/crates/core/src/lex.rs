//! Lexicographic enumeration with bound pruning.
//!
//! Unknowns are assigned in input order, each ranging over `0..=bound`; the
//! last one (or last two) are solved directly instead of enumerated. Because
//! componentwise dominance implies lexicographic order, a solution emitted
//! later can never dominate one already stored.

use serde::{Deserialize, Serialize};

use crate::arith::solve_linear_pair;
use crate::basis::{Basis, Insertion, Solution};
use crate::bounds::BoundKind;
use crate::equation::{Equation, WeightVector};
use crate::error::{Error, Result};
use crate::limits::{Limits, Watch};
use crate::solver::with_normalized;

/// How many trailing unknowns are solved without enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TailKind {
    LastOne,
    LastTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LexVariant {
    pub bound: BoundKind,
    pub tail: TailKind,
}

impl LexVariant {
    pub const ALL: [LexVariant; 4] = [
        LexVariant::new(BoundKind::Huet, TailKind::LastOne),
        LexVariant::new(BoundKind::Huet, TailKind::LastTwo),
        LexVariant::new(BoundKind::Lambert, TailKind::LastOne),
        LexVariant::new(BoundKind::Lambert, TailKind::LastTwo),
    ];

    pub const fn new(bound: BoundKind, tail: TailKind) -> Self {
        Self { bound, tail }
    }
}

impl Default for LexVariant {
    fn default() -> Self {
        Self::new(BoundKind::Lambert, TailKind::LastTwo)
    }
}

/// Instrumentation for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LexStats {
    /// Recursive calls, i.e. prefixes visited.
    pub nodes: u64,
    /// Stored solutions removed by a later one. Always zero.
    pub evictions: u64,
}

pub fn lex_solve(eq: &Equation, variant: LexVariant) -> Result<Basis> {
    lex_solve_weights(&eq.weights(), variant, &Limits::default()).map(|(b, _)| b)
}

pub fn lex_solve_weights(
    w: &WeightVector,
    variant: LexVariant,
    limits: &Limits,
) -> Result<(Basis, LexStats)> {
    let mut stats = LexStats::default();
    let basis = with_normalized(w, |residual| {
        let (b, s) = solve_nonzero(residual, variant, limits)?;
        stats = s;
        Ok(b)
    })?;
    Ok((basis, stats))
}

fn solve_nonzero(
    w: &WeightVector,
    variant: LexVariant,
    limits: &Limits,
) -> Result<(Basis, LexStats)> {
    let n = w.len();
    let mut search = Search {
        w,
        variant,
        x: vec![0; n],
        sums: [0, 0],
        budgets: [w.max_b() as u64, w.max_a() as u64],
        basis: Basis::new(),
        stats: LexStats::default(),
        watch: limits.start(),
    };
    if !w.is_mixed() {
        return Ok((search.basis, search.stats));
    }
    let tail = match variant.tail {
        TailKind::LastOne => 1,
        TailKind::LastTwo => 2,
    };
    search.enumerate(0, n - tail.min(n), 0)?;
    Ok((search.basis, search.stats))
}

struct Search<'a> {
    w: &'a WeightVector,
    variant: LexVariant,
    x: Vec<u64>,
    /// Running coordinate sums of the positive and negative sides.
    sums: [u64; 2],
    /// Lambert budgets for the positive and negative sides.
    budgets: [u64; 2],
    basis: Basis,
    stats: LexStats,
    watch: Watch,
}

fn side(weight: i64) -> usize {
    usize::from(weight < 0)
}

impl Search<'_> {
    /// Largest value position `p` may take given the current prefix.
    fn cap(&self, p: usize) -> u64 {
        match self.variant.bound {
            BoundKind::Huet => self.w.huet_bound(p),
            BoundKind::Lambert => {
                let s = side(self.w[p]);
                self.budgets[s] - self.sums[s]
            }
        }
    }

    fn enumerate(&mut self, p: usize, free: usize, defect: i64) -> Result<()> {
        self.stats.nodes += 1;
        self.watch.tick()?;
        if p == free {
            return self.solve_tail(p, defect);
        }
        let wp = self.w[p];
        let s = side(wp);
        for v in 0..=self.cap(p) {
            self.x[p] = v;
            self.sums[s] += v;
            let d = defect
                .checked_add(wp * v as i64)
                .ok_or(Error::Overflow("lexicographic prefix defect"))?;
            let r = self.enumerate(p + 1, free, d);
            self.sums[s] -= v;
            r?;
        }
        self.x[p] = 0;
        Ok(())
    }

    fn solve_tail(&mut self, p: usize, defect: i64) -> Result<()> {
        let n = self.w.len();
        let residual = -defect;
        match n - p {
            1 => {
                if let Some(v) = tail_solve_one(self.w.as_slice(), p, residual, self.cap(p)) {
                    self.x[p] = v;
                    self.emit();
                    self.x[p] = 0;
                }
            }
            2 => {
                let (wy, wz) = (self.w[p], self.w[p + 1]);
                let (cy, cz) = (self.cap(p), self.cap(p + 1));
                let joint = (side(wy) == side(wz) && self.variant.bound == BoundKind::Lambert)
                    .then(|| self.budgets[side(wy)] - self.sums[side(wy)]);
                for (y, z) in solve_linear_pair(wy, wz, residual, cy, cz) {
                    if joint.is_some_and(|budget| y + z > budget) {
                        continue;
                    }
                    self.x[p] = y;
                    self.x[p + 1] = z;
                    self.emit();
                }
                self.x[p] = 0;
                self.x[p + 1] = 0;
            }
            _ => unreachable!("tail covers one or two unknowns"),
        }
        Ok(())
    }

    fn emit(&mut self) {
        if self.x.iter().all(|&v| v == 0) {
            return;
        }
        if self.basis.covers(&self.x) {
            return;
        }
        if let Insertion::Added { evicted } =
            self.basis.insert_minimal(Solution::new(self.x.clone()))
        {
            self.stats.evictions += evicted as u64;
        }
    }
}

/// Completes the last unknown: `w_p · v = residual` with `0 ≤ v ≤ cap`.
///
/// Returns `None` when the residual is not a nonnegative multiple of `w_p`.
/// Whether the completed vector is zero is for the caller to check.
pub fn tail_solve_one(w: &[i64], p: usize, residual: i64, cap: u64) -> Option<u64> {
    let wp = w[p];
    if residual % wp != 0 {
        return None;
    }
    let q = residual / wp;
    (q >= 0 && q as u64 <= cap).then_some(q as u64)
}

/// Completes a prefix `x[..n-1]` into a full solution, if one exists within
/// the Huet bound of the last unknown.
pub fn complete_last(w: &WeightVector, prefix: &[u64]) -> Result<Option<Solution>> {
    let n = w.len();
    if prefix.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            found: prefix.len(),
        });
    }
    let mut full = prefix.to_vec();
    full.push(0);
    let residual = -crate::equation::defect(w, &full)?;
    Ok(
        tail_solve_one(w.as_slice(), n - 1, residual, w.huet_bound(n - 1))
            .map(|v| {
                full[n - 1] = v;
                Solution::new(full)
            })
            .filter(|s| !s.is_zero()),
    )
}

/// Completes a prefix `x[..n-2]` with every admissible pair for the last two
/// unknowns under their Huet bounds, in lexicographic order.
pub fn complete_last_two(w: &WeightVector, prefix: &[u64]) -> Result<Vec<Solution>> {
    let n = w.len();
    if n < 2 || prefix.len() + 2 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(2),
            found: prefix.len(),
        });
    }
    let mut full = prefix.to_vec();
    full.extend([0, 0]);
    let residual = -crate::equation::defect(w, &full)?;
    Ok(solve_linear_pair(
        w[n - 2],
        w[n - 1],
        residual,
        w.huet_bound(n - 2),
        w.huet_bound(n - 1),
    )
    .into_iter()
    .map(|(y, z)| {
        full[n - 2] = y;
        full[n - 1] = z;
        Solution::new(full.clone())
    })
    .filter(|s| !s.is_zero())
    .collect())
}
