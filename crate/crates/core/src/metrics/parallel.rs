use rayon::prelude::*;

/// Environment variable capping the worker count; `0` or unset means automatic.
pub const THREADS_ENV: &str = "COLLABNET_THREADS";

/// Worker-count setting for the parallel kernels.
///
/// Work is always split into the same fixed chunks and merged in chunk order, so
/// results do not depend on the number of workers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Parallelism {
    threads: usize,
}

impl Parallelism {
    /// `0` selects the number of available cores.
    pub fn new(threads: usize) -> Self {
        Parallelism { threads }
    }

    pub fn single() -> Self {
        Parallelism { threads: 1 }
    }

    /// Reads [`THREADS_ENV`]; unparseable values fall back to automatic.
    pub fn from_env() -> Self {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(0);
        Parallelism { threads }
    }

    pub fn threads(&self) -> usize {
        if self.threads == 0 {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        } else {
            self.threads
        }
    }

    /// Maps `f` over `0..count` and returns results in index order.
    pub(crate) fn map_ordered<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        let threads = self.threads();
        if threads <= 1 || count <= 1 {
            return (0..count).map(f).collect();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| (0..count).into_par_iter().map(&f).collect()),
            Err(_) => (0..count).map(f).collect(),
        }
    }
}

/// Fixed partition of `0..n` into contiguous chunks, independent of worker count.
pub(crate) fn chunk_bounds(n: usize) -> Vec<(usize, usize)> {
    const MIN_CHUNK: usize = 16;
    const MAX_CHUNKS: usize = 256;
    if n == 0 {
        return Vec::new();
    }
    let size = MIN_CHUNK.max(n.div_ceil(MAX_CHUNKS));
    (0..n).step_by(size).map(|s| (s, (s + size).min(n))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range() {
        for n in [0, 1, 15, 16, 17, 1000, 5000, 100_000] {
            let chunks = chunk_bounds(n);
            let mut next = 0;
            for (s, e) in &chunks {
                assert_eq!(*s, next);
                assert!(e > s);
                next = *e;
            }
            assert_eq!(next, n);
            assert!(chunks.len() <= 256);
        }
    }

    #[test]
    fn ordered_map_independent_of_threads() {
        let a = Parallelism::new(1).map_ordered(100, |i| i * i);
        let b = Parallelism::new(4).map_ordered(100, |i| i * i);
        assert_eq!(a, b);
    }
}
