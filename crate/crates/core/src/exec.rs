//! Range sweeps with a sequential fallback.
//!
//! The exhaustive checks and censuses all reduce to "run a pure
//! function over `0..len` and collect what it returns". With the
//! `parallel` feature (on by default) the range is split across a rayon
//! pool; the sequential variants are always compiled and the two paths
//! produce identical output in identical order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Per-index outcome of a verification sweep.
pub enum Outcome<V> {
    /// The index does not belong to the examined population.
    Skipped,
    /// Examined, no violation.
    Pass,
    /// Examined, counterexample found.
    Fail(V),
}

/// Aggregate of a sweep: how many indices were examined and every
/// counterexample, in index order.
pub struct SweepResult<V> {
    pub cases: u64,
    pub violations: Vec<V>,
}

impl<V> SweepResult<V> {
    fn empty() -> Self {
        SweepResult {
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn absorb(mut self, outcome: Outcome<V>) -> Self {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Pass => self.cases += 1,
            Outcome::Fail(v) => {
                self.cases += 1;
                self.violations.push(v);
            }
        }
        self
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, mut other: Self) -> Self {
        self.cases += other.cases;
        self.violations.append(&mut other.violations);
        self
    }
}

pub fn sweep_seq<V, F>(len: u64, check: F) -> SweepResult<V>
where
    F: Fn(u64) -> Outcome<V>,
{
    (0..len).fold(SweepResult::empty(), |acc, i| acc.absorb(check(i)))
}

#[cfg(feature = "parallel")]
pub fn sweep_par<V, F>(len: u64, check: F) -> SweepResult<V>
where
    F: Fn(u64) -> Outcome<V> + Sync + Send,
    V: Send,
{
    (0..len)
        .into_par_iter()
        .fold(SweepResult::empty, |acc, i| acc.absorb(check(i)))
        .reduce(SweepResult::empty, SweepResult::merge)
}

/// Sweeps `0..len`, dispatching on the `parallel` feature.
pub fn sweep<V, F>(len: u64, check: F) -> SweepResult<V>
where
    F: Fn(u64) -> Outcome<V> + Sync + Send,
    V: Send,
{
    #[cfg(feature = "parallel")]
    {
        sweep_par(len, check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_seq(len, check)
    }
}

pub fn filter_map_collect_seq<T, F>(len: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T>,
{
    (0..len).filter_map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn filter_map_collect_par<T, F>(len: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T> + Sync + Send,
    T: Send,
{
    (0..len).into_par_iter().filter_map(f).collect()
}

/// Maps `0..len` and keeps the `Some` results in index order.
pub fn filter_map_collect<T, F>(len: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T> + Sync + Send,
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        filter_map_collect_par(len, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        filter_map_collect_seq(len, f)
    }
}
