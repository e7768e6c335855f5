//! Deterministic dovetailing of several strategies.
//!
//! Strategies advance in round-robin order. In round `r` every unfinished
//! strategy may run until its cumulative work reaches `2^{r+1} − 1` units;
//! a step that overshoots is charged against later rounds. The first
//! strategy to finish wins. If the fastest strategy needs `W` units, every
//! strategy has done at most `2W + max_step` by then.

/// Outcome of one step of a strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step<T> {
    /// The step used this many work units and the strategy is not done.
    Continue(u64),
    /// The step used this many work units and produced a result.
    Finished(u64, T),
}

#[derive(Debug, Clone)]
pub struct Race {
    work: Vec<u64>,
    max_step: u64,
    winner: Option<usize>,
    budget: Option<u64>,
}

/// Returned when the total work budget runs out before any strategy
/// finishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted {
    pub total_work: u64,
}

impl Race {
    pub fn new(strategies: usize) -> Self {
        assert!(strategies > 0, "a race needs a strategy");
        Race {
            work: vec![0; strategies],
            max_step: 0,
            winner: None,
            budget: None,
        }
    }

    /// Caps the total work over all strategies.
    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// Runs to completion; panics if a budget was set and is exhausted.
    pub fn run<T>(&mut self, step: impl FnMut(usize) -> Step<T>) -> T {
        self.try_run(step).expect("no budget set")
    }

    pub fn try_run<T>(
        &mut self,
        mut step: impl FnMut(usize) -> Step<T>,
    ) -> Result<T, BudgetExhausted> {
        let mut allowance: u64 = 1;
        loop {
            for i in 0..self.work.len() {
                while self.work[i] < allowance {
                    if self.budget.is_some_and(|b| self.total_work() >= b) {
                        return Err(BudgetExhausted {
                            total_work: self.total_work(),
                        });
                    }
                    let (used, done) = match step(i) {
                        Step::Continue(w) => (w, None),
                        Step::Finished(w, t) => (w, Some(t)),
                    };
                    self.work[i] += used;
                    self.max_step = self.max_step.max(used);
                    if let Some(t) = done {
                        self.winner = Some(i);
                        return Ok(t);
                    }
                }
            }
            allowance = allowance.saturating_mul(2).saturating_add(1);
        }
    }

    pub fn total_work(&self) -> u64 {
        self.work.iter().sum()
    }

    pub fn work(&self) -> &[u64] {
        &self.work
    }

    pub fn max_step(&self) -> u64 {
        self.max_step
    }

    pub fn winner(&self) -> Option<usize> {
        self.winner
    }
}
