use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default cap on the number of live walks or proposals in one level.
pub const DEFAULT_FRONTIER_CAP: usize = 1 << 26;

/// Resource limits shared by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Wall-clock budget for one solve; `None` means unlimited.
    pub time_budget: Option<Duration>,
    pub frontier_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            time_budget: None,
            frontier_cap: DEFAULT_FRONTIER_CAP,
        }
    }
}

impl Limits {
    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_frontier_cap(mut self, cap: usize) -> Self {
        self.frontier_cap = cap;
        self
    }

    pub(crate) fn start(&self) -> Watch {
        Watch {
            deadline: self.time_budget.map(|b| (Instant::now() + b, b)),
            ticks: 0,
        }
    }
}

/// Deadline tracker polled from inner loops.
pub(crate) struct Watch {
    deadline: Option<(Instant, Duration)>,
    ticks: u32,
}

impl Watch {
    pub(crate) fn check(&self) -> Result<()> {
        match self.deadline {
            Some((at, budget)) if Instant::now() >= at => Err(Error::Timeout(budget)),
            _ => Ok(()),
        }
    }

    /// Cheap variant for hot loops: reads the clock every 4096 calls.
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 0 {
            self.check()
        } else {
            Ok(())
        }
    }
}
