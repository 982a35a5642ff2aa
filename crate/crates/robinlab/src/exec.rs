//! Execution strategy for data-parallel loops.
//!
//! The hot loops of this crate (raster scans, element assembly, corpus
//! sweeps) are embarrassingly parallel over independent items. Each of them
//! accepts a [`Parallelism`] value so callers can pick the rayon-backed path
//! or the plain sequential one at runtime; with the `parallel` feature
//! disabled only the sequential path exists. Both paths produce results in
//! input order, so outputs are identical bit for bit.

/// Runtime choice between the sequential loop and the rayon thread pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

impl Parallelism {
    /// Map `f` over `0..n` and collect the results in index order.
    pub fn map_indexed<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Parallelism::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Parallelism::Rayon => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
        }
    }

    /// Map `f` over a slice and collect the results in input order.
    pub fn map_slice<'a, T, U, F>(self, items: &'a [T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&'a T) -> U + Sync + Send,
    {
        match self {
            Parallelism::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Parallelism::Rayon => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
        }
    }
}
