//! Execution of independent work items.
//!
//! All data parallelism in this crate goes through [`map_indexed`]: apply a
//! function to indices `0..n` and collect the results in index order. With
//! the `parallel` feature (default) the items run on the rayon pool; without
//! it they run sequentially. Collection is by index, never by a floating
//! point reduction, so the output is bit-identical across thread counts and
//! feature settings.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every index in `0..n`, in parallel when enabled.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

/// Sequential counterpart of [`map_indexed`]. This is the exact code path
/// used when the `parallel` feature is disabled; it is always compiled so
/// benchmarks can compare the two on the same build.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sin() * (i as f64 + 1.0).ln();
        let a = map_indexed(1000, f);
        let b = map_indexed_seq(1000, f);
        assert_eq!(a, b);
    }
}
