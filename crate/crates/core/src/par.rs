//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature (default) the loops run on the rayon pool;
//! without it only [`Strategy::Sequential`] exists. Both produce identical,
//! order-preserving results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The default is the parallel strategy when it is compiled in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Strategy::Parallel => "parallel",
        }
    }

    /// Every strategy compiled into this build.
    pub fn available() -> &'static [Strategy] {
        #[cfg(feature = "parallel")]
        {
            &[Strategy::Sequential, Strategy::Parallel]
        }
        #[cfg(not(feature = "parallel"))]
        {
            &[Strategy::Sequential]
        }
    }

    /// `(0..n).map(f).collect()`, in index order.
    pub fn map_indices<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    /// Like [`Strategy::map_indices`] but concatenates the per-index outputs.
    pub fn flat_map_indices<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> Vec<R> + Sync + Send,
    {
        self.map_indices(n, f).into_iter().flatten().collect()
    }
}
