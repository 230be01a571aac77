//! Execution strategy for the data-parallel loops (trace sums, table
//! columns, verification sweeps).
//!
//! With the `parallel` feature disabled every strategy runs sequentially.

/// How an embarrassingly parallel loop is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Map `f` over `items`, preserving order.
pub fn map_collect<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Fold `f(i)` for `i in 0..len` with an associative, commutative `combine`.
pub fn map_reduce_range<R, F, I, C>(exec: Execution, len: usize, identity: I, f: F, combine: C) -> R
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec.is_parallel() {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).reduce(identity, combine);
        }
    }
    let _ = exec;
    (0..len).map(f).fold(identity(), combine)
}
