//! Index over found solutions for the "is this proposal still minimal" test.
//!
//! A child `p + e_i` of a proposal `p` that was not dominated can only be
//! dominated by a solution `z` with `z_i = p_i + 1`, so solutions are bucketed
//! by (position, value) and only one bucket is scanned per child.

use crate::basis::le;

pub(crate) struct SolutionIndex {
    n: usize,
    coords: Vec<u64>,
    buckets: Vec<Vec<Vec<u32>>>,
}

impl SolutionIndex {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            coords: Vec::new(),
            buckets: vec![Vec::new(); n],
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.coords.len() / self.n.max(1)
    }

    pub(crate) fn insert(&mut self, s: &[u64]) {
        debug_assert_eq!(s.len(), self.n);
        let id = self.len() as u32;
        self.coords.extend_from_slice(s);
        for (i, &v) in s.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let column = &mut self.buckets[i];
            let v = v as usize;
            if column.len() <= v {
                column.resize_with(v + 1, Vec::new);
            }
            column[v].push(id);
        }
    }

    fn get(&self, id: u32) -> &[u64] {
        let start = id as usize * self.n;
        &self.coords[start..start + self.n]
    }

    /// Whether a stored solution is `≤ child`, given that `child` was obtained
    /// by incrementing position `i` of an undominated parent.
    pub(crate) fn dominates_child(&self, child: &[u64], i: usize) -> bool {
        let v = child[i] as usize;
        self.buckets[i]
            .get(v)
            .is_some_and(|ids| ids.iter().any(|&id| le(self.get(id), child)))
    }

    /// Full check without the single-increment shortcut.
    pub(crate) fn dominates_any(&self, x: &[u64]) -> bool {
        (0..self.len()).any(|id| le(self.get(id as u32), x))
    }
}
