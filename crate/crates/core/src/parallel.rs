//! Shared rayon pool sized by `FIBSUM_THREADS` (unset or `0` = one per core).

use rayon::{ThreadPool, ThreadPoolBuilder};
use std::sync::OnceLock;

pub const THREADS_ENV: &str = "FIBSUM_THREADS";

fn thread_count() -> usize {
    std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).unwrap_or(0)
}

pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        ThreadPoolBuilder::new()
            .num_threads(thread_count())
            .thread_name(|i| format!("fibsum-{i}"))
            .build()
            .expect("rayon pool")
    })
}

/// Maps `f` over `items` in parallel, preserving input order.
pub fn ordered_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    pool().install(|| items.par_iter().map(&f).collect())
}
