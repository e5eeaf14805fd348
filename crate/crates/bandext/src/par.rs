//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (the default) these fan out over rayon;
//! without it they degrade to plain loops. Both paths produce identical
//! results: outputs are collected in input order and no floating-point
//! reduction crosses a task boundary.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Splits `buf` into contiguous chunks of `chunk_len` and runs `f` on each,
/// passing the chunk index. Each chunk is written by exactly one task.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_chunk_mut<F>(buf: &mut [f64], chunk_len: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    buf.par_chunks_mut(chunk_len)
        .enumerate()
        .for_each(|(i, c)| f(i, c));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_chunk_mut<F>(buf: &mut [f64], chunk_len: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    for (i, c) in buf.chunks_mut(chunk_len).enumerate() {
        f(i, c);
    }
}

/// Runs `f` inside a thread pool of `workers` threads when the `parallel`
/// feature is on and `workers` is set; otherwise runs it directly. A worker
/// count of 1 still goes through a pool so that the code path matches.
#[cfg(feature = "parallel")]
pub fn with_workers<R, F>(workers: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match workers {
        Some(n) if n >= 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool construction");
            pool.install(f)
        }
        _ => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R, F>(_workers: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    f()
}
