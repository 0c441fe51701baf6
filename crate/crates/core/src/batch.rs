//! Data-parallel batch evaluation.
//!
//! With the `parallel` feature (default) batches run on the rayon pool;
//! without it they run sequentially. Output order always matches input
//! order, so results are deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items` using the configured backend.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

pub fn filter_map_range_sequential<R, F>(len: u64, f: F) -> Vec<R>
where
    F: Fn(u64) -> Option<R>,
{
    (0..len).filter_map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn filter_map_range_parallel<R, F>(len: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    (0..len).into_par_iter().filter_map(f).collect()
}

/// `(0..len).filter_map(f)` using the configured backend, in index order.
pub fn filter_map_range<R, F>(len: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        filter_map_range_parallel(len, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        filter_map_range_sequential(len, f)
    }
}

/// Counts the items for which `pred` fails.
pub fn count_failures<T, F>(items: &[T], pred: F) -> usize
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    map(items, |t| !pred(t)).into_iter().filter(|&b| b).count()
}
