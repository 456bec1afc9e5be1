use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the data-parallel loops.
///
/// `Parallel` falls back to the sequential path when the crate is built
/// without the `parallel` feature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Folds over an index range, reducing per-thread accumulators with `reduce`.
    pub fn fold_range<T, I, F, R>(self, range: Range<u64>, identity: I, fold: F, reduce: R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().fold(&identity, &fold).reduce(&identity, &reduce);
        }
        let _ = &reduce;
        range.fold(identity(), fold)
    }

    /// Order-preserving map over a slice.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving map over an index range.
    pub fn map_range<T, F>(self, range: Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }
}

/// Caps and execution settings shared by every enumerating operation.
///
/// Operations refuse with [`crate::Error::CapExceeded`] instead of truncating.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest family, word scan or polynomial scan that may be enumerated.
    pub enumeration_cap: u64,
    /// Largest number of words a code may be materialized with.
    pub materialize_cap: u64,
    /// Largest vertex count handed to the maximum-clique search.
    pub clique_vertex_cap: usize,
    /// Largest `q^n` for which exhaustive code optima are attempted.
    pub exhaustive_word_cap: u64,
    /// Optional node budget for a single clique search; `None` searches to completion.
    pub clique_node_budget: Option<u64>,
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_cap: 10_000_000,
            materialize_cap: 1_000_000,
            clique_vertex_cap: 8192,
            exhaustive_word_cap: 4096,
            clique_node_budget: None,
            exec: Exec::default(),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Exec::Sequential,
            ..Config::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Self {
        self.enumeration_cap = cap;
        self
    }

    pub fn with_node_budget(mut self, budget: Option<u64>) -> Self {
        self.clique_node_budget = budget;
        self
    }

    pub(crate) fn check_enumeration(&self, what: &'static str, size: &crate::Count) -> crate::Result<u64> {
        use num_traits::ToPrimitive;
        match size.to_u64() {
            Some(s) if s <= self.enumeration_cap => Ok(s),
            _ => Err(crate::Error::cap(what, size, self.enumeration_cap)),
        }
    }
}
