//! Batch execution helpers: rayon when the `parallel` feature is on,
//! plain iterators otherwise.
//!
//! Both paths collect in input order and run the same per-item closure, so
//! results are bit-identical regardless of scheduling. The `_seq` variants
//! are always sequential; benches use them as the baseline.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting in index order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential counterpart of [`map_range`].
pub fn map_range_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Map `f` over a slice, collecting in input order.
pub fn map_slice<'a, T, U, F>(items: &'a [T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&'a T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential counterpart of [`map_slice`].
pub fn map_slice_seq<'a, T, U, F>(items: &'a [T], f: F) -> Vec<U>
where
    F: Fn(&'a T) -> U,
{
    items.iter().map(f).collect()
}
