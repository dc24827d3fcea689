//! Graph algorithm: the completion search run over a precomputed defect
//! digraph.
//!
//! Nodes are the defect values `-max_b ..= max_a`; an edge labelled `i` goes
//! from `d` to `d + w_i` whenever the target is a node. A minimal solution is a
//! walk from 0 back to 0, and a walk is pruned as soon as some shorter walk
//! already closed at 0 is bounded by it coordinatewise. Walks are grown one
//! edge per level, so all solution lookups use the adjacency tables and no
//! defect arithmetic happens during the search.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::basis::{Basis, Solution};
use crate::dominance::SolutionIndex;
use crate::equation::{Equation, WeightVector};
use crate::error::{Error, Result};
use crate::limits::{Limits, DEFAULT_FRONTIER_CAP};
use crate::solver::with_normalized;

/// Labelled digraph over admissible defect values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectGraph {
    min: i64,
    max: i64,
    /// Every edge `(label, target index)` leaving each node, labels ascending.
    edges: Vec<Vec<(u32, u32)>>,
    /// Edges the search may follow, labels descending: from a negative node
    /// only positive labels, from a positive node only negative labels, from
    /// node 0 only positive labels.
    moves: Vec<Vec<(u32, u32)>>,
}

impl DefectGraph {
    pub fn node_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn min_defect(&self) -> i64 {
        self.min
    }

    pub fn max_defect(&self) -> i64 {
        self.max
    }

    pub fn index_of(&self, defect: i64) -> Option<usize> {
        (self.min..=self.max)
            .contains(&defect)
            .then(|| (defect - self.min) as usize)
    }

    pub fn defect_of(&self, index: usize) -> i64 {
        self.min + index as i64
    }

    /// Outgoing edges of `defect` as `(label, target defect)`; labels are
    /// 0-based positions.
    pub fn edges_from(&self, defect: i64) -> Vec<(usize, i64)> {
        self.index_of(defect)
            .map(|at| {
                self.edges[at]
                    .iter()
                    .map(|&(label, target)| (label as usize, self.defect_of(target as usize)))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Text dump, one node per line: `d: (label->target) ...` with 1-based
    /// labels.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (at, edges) in self.edges.iter().enumerate() {
            write!(out, "{}:", self.defect_of(at)).unwrap();
            for &(label, target) in edges {
                write!(out, " ({}->{})", label + 1, self.defect_of(target as usize)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn build_defect_graph(w: &WeightVector) -> DefectGraph {
    let (min, max) = (-w.max_b(), w.max_a());
    let count = (max - min + 1) as usize;
    let mut edges = vec![Vec::new(); count];
    let mut moves = vec![Vec::new(); count];
    for (at, (out, admissible)) in edges.iter_mut().zip(moves.iter_mut()).enumerate() {
        let d = min + at as i64;
        for (label, &wi) in w.as_slice().iter().enumerate() {
            let target = d + wi;
            if !(min..=max).contains(&target) {
                continue;
            }
            let entry = (label as u32, (target - min) as u32);
            out.push(entry);
            if (d <= 0 && wi > 0) || (d > 0 && wi < 0) {
                admissible.push(entry);
            }
        }
        admissible.reverse();
    }
    DefectGraph {
        min,
        max,
        edges,
        moves,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphConfig {
    pub limits: Limits,
    /// Expand each level with rayon; the result is identical.
    pub parallel: bool,
    /// Merge walks with equal step counts (asserting in debug builds).
    pub dedup_frontier: bool,
}

impl Default for GraphConfig {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            parallel: false,
            dedup_frontier: true,
        }
    }
}

impl From<Limits> for GraphConfig {
    fn from(limits: Limits) -> Self {
        Self {
            limits,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphStats {
    pub levels: u64,
    pub walks: u64,
    pub max_frontier: usize,
    pub duplicate_walks: u64,
    pub duplicate_solutions: u64,
}

pub fn graph_solve(eq: &Equation) -> Result<Basis> {
    graph_solve_weights(&eq.weights(), &GraphConfig::default()).map(|(b, _)| b)
}

pub fn graph_solve_weights(w: &WeightVector, config: &GraphConfig) -> Result<(Basis, GraphStats)> {
    let mut stats = GraphStats::default();
    let basis = with_normalized(w, |residual| {
        let (b, s) = search(residual, config)?;
        stats = s;
        Ok(b)
    })?;
    Ok((basis, stats))
}

/// Walks of one level in struct-of-arrays form.
#[derive(Default)]
struct Frontier {
    n: usize,
    nodes: Vec<u32>,
    steps: Vec<u64>,
}

impl Frontier {
    fn new(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    fn len(&self) -> usize {
        self.nodes.len()
    }

    fn steps(&self, k: usize) -> &[u64] {
        &self.steps[k * self.n..(k + 1) * self.n]
    }

    fn push(&mut self, node: u32, steps: &[u64]) {
        self.nodes.push(node);
        self.steps.extend_from_slice(steps);
    }

    fn append(&mut self, other: Frontier) {
        self.nodes.extend(other.nodes);
        self.steps.extend(other.steps);
    }
}

struct Level {
    next: Frontier,
    solutions: Vec<Vec<u64>>,
}

fn expand(
    graph: &DefectGraph,
    zero: u32,
    walks: &Frontier,
    range: std::ops::Range<usize>,
    found: &SolutionIndex,
) -> Level {
    let n = walks.n;
    let mut level = Level {
        next: Frontier::new(n),
        solutions: Vec::new(),
    };
    let mut child = vec![0u64; n];
    for k in range {
        let steps = walks.steps(k);
        for &(label, target) in &graph.moves[walks.nodes[k] as usize] {
            let i = label as usize;
            child.copy_from_slice(steps);
            child[i] += 1;
            if target == zero {
                level.solutions.push(child.clone());
            } else if !found.dominates_child(&child, i) {
                level.next.push(target, &child);
            }
            if steps[i] > 0 {
                break;
            }
        }
    }
    level
}

fn search(w: &WeightVector, config: &GraphConfig) -> Result<(Basis, GraphStats)> {
    let mut stats = GraphStats::default();
    if !w.is_mixed() {
        return Ok((Basis::new(), stats));
    }
    let n = w.len();
    let graph = build_defect_graph(w);
    let zero = graph.index_of(0).expect("0 lies between -max_b and max_a") as u32;
    let watch = config.limits.start();
    let cap = if config.limits.frontier_cap == 0 {
        DEFAULT_FRONTIER_CAP
    } else {
        config.limits.frontier_cap
    };

    let mut found = SolutionIndex::new(n);
    let mut solutions: Vec<Solution> = Vec::new();
    let mut frontier = Frontier::new(n);
    frontier.push(zero, &vec![0; n]);

    while frontier.len() > 0 {
        watch.check()?;
        stats.levels += 1;
        stats.walks += frontier.len() as u64;
        stats.max_frontier = stats.max_frontier.max(frontier.len());

        let level = if config.parallel && frontier.len() >= 4096 {
            let chunk = frontier.len().div_ceil(rayon::current_num_threads() * 4);
            let parts: Vec<Level> = (0..frontier.len())
                .step_by(chunk)
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|start| {
                    expand(
                        &graph,
                        zero,
                        &frontier,
                        start..(start + chunk).min(frontier.len()),
                        &found,
                    )
                })
                .collect();
            let mut merged = Level {
                next: Frontier::new(n),
                solutions: Vec::new(),
            };
            for part in parts {
                merged.next.append(part.next);
                merged.solutions.extend(part.solutions);
            }
            merged
        } else {
            expand(&graph, zero, &frontier, 0..frontier.len(), &found)
        };

        let mut next = level.next;
        if next.len() > cap {
            return Err(Error::FrontierCapExceeded {
                size: next.len(),
                cap,
            });
        }
        if config.dedup_frontier {
            let removed = dedup(&mut next);
            debug_assert_eq!(removed, 0, "walk generated twice");
            stats.duplicate_walks += removed as u64;
        }
        let mut seen: HashSet<&[u64]> = HashSet::new();
        for s in &level.solutions {
            if !seen.insert(s) {
                stats.duplicate_solutions += 1;
                continue;
            }
            found.insert(s);
            solutions.push(Solution::new(s.clone()));
        }
        frontier = next;
    }
    debug_assert_eq!(stats.duplicate_solutions, 0);
    Ok((Basis::from_incomparable(solutions), stats))
}

fn dedup(frontier: &mut Frontier) -> usize {
    let n = frontier.n;
    let mut seen: HashSet<&[u64]> = HashSet::with_capacity(frontier.len());
    let mut keep = Vec::with_capacity(frontier.len());
    for k in 0..frontier.len() {
        keep.push(seen.insert(&frontier.steps[k * n..(k + 1) * n]));
    }
    drop(seen);
    let removed = keep.iter().filter(|&&k| !k).count();
    if removed == 0 {
        return 0;
    }
    let mut out = Frontier::new(n);
    for (k, keep) in keep.into_iter().enumerate() {
        if keep {
            out.push(frontier.nodes[k], frontier.steps(k));
        }
    }
    *frontier = out;
    removed
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_of_one_minus_two() {
        let g = build_defect_graph(&WeightVector::new(vec![1, -2]));
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edges_from(-2), vec![(0, -1)]);
        assert_eq!(g.edges_from(-1), vec![(0, 0)]);
        assert_eq!(g.edges_from(0), vec![(0, 1), (1, -2)]);
        assert_eq!(g.edges_from(1), vec![(1, -1)]);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(
            g.to_text(),
            "-2: (1->-1)\n-1: (1->0)\n0: (1->1) (2->-2)\n1: (2->-1)\n"
        );
    }

    #[test]
    fn graph_of_one_minus_one() {
        let g = build_defect_graph(&WeightVector::new(vec![1, -1]));
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn eq6_node_count() {
        let eq = Equation::new(vec![104, 167], vec![165, 154, 148, 159, 174, 150]).unwrap();
        assert_eq!(build_defect_graph(&eq.weights()).node_count(), 342);
    }

    #[test]
    fn small_examples() {
        let solve = |l: &[u64], r: &[u64]| -> Vec<Vec<u64>> {
            graph_solve(&Equation::new(l.to_vec(), r.to_vec()).unwrap())
                .unwrap()
                .into_iter()
                .map(Solution::into_inner)
                .collect()
        };
        assert_eq!(solve(&[1], &[2]), vec![vec![2, 1]]);
        assert_eq!(solve(&[2, 1], &[1]), vec![vec![0, 1, 1], vec![1, 0, 2]]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let w = Equation::new(vec![104, 167], vec![165, 154, 148, 159, 174, 150])
            .unwrap()
            .weights();
        let (seq, stats) = graph_solve_weights(&w, &GraphConfig::default()).unwrap();
        let par_config = GraphConfig {
            parallel: true,
            ..GraphConfig::default()
        };
        let (par, _) = graph_solve_weights(&w, &par_config).unwrap();
        assert_eq!(seq, par);
        assert_eq!(stats.duplicate_walks, 0);
        assert!(
            stats.max_frontier >= 4096,
            "parallel path not exercised: {}",
            stats.max_frontier
        );
    }
}
