//! Ordered data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature the [`Execution::Parallel`] mode runs on the
//! rayon pool; without it every mode is sequential. Results always come back
//! in input order, so callers stay deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Parallel,
    Sequential,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Index of the first item for which `f` returns `Some`, with its value.
    /// Every item is evaluated in parallel mode; the earliest hit wins.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<(usize, R)>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items
                .par_iter()
                .enumerate()
                .filter_map(|(i, x)| f(x).map(|r| (i, r)))
                .min_by_key(|(i, _)| *i),
            _ => items.iter().enumerate().find_map(|(i, x)| f(x).map(|r| (i, r))),
        }
    }

    /// Runs two closures, concurrently in parallel mode.
    pub fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => rayon::join(a, b),
            _ => (a(), b()),
        }
    }
}
