/// How data-parallel loops are executed.
///
/// `Parallel` uses the rayon thread pool when the `rayon` feature is enabled
/// and silently runs sequentially otherwise. Results never depend on the
/// choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "rayon") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    #[inline]
    pub(crate) fn is_parallel(self) -> bool {
        cfg!(feature = "rayon") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub(crate) fn map_ordered<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "rayon")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Maps `f` over `0..len` and folds the results with an associative,
/// commutative `merge`.
pub(crate) fn map_reduce<R, F, M>(exec: Execution, len: usize, identity: R, f: F, merge: M) -> R
where
    R: Send + Sync + Clone,
    F: Fn(usize) -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "rayon")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len)
            .into_par_iter()
            .map(&f)
            .reduce(|| identity.clone(), &merge);
    }
    let _ = exec;
    (0..len).map(f).fold(identity, merge)
}
