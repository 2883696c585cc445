//! Deterministic thread-chunked work. The thread count is capped by the
//! `RECIPROCITY_THREADS` environment variable (default: all cores); results
//! are identical regardless of the cap because chunks are reduced in order.

use std::env;
use std::thread;

/// Number of worker threads to use.
pub fn configured_threads() -> usize {
    if let Ok(v) = env::var("RECIPROCITY_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Applies `f` to every item and returns the results in input order,
/// splitting the slice into at most `configured_threads()` contiguous chunks.
pub fn map_chunked<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = configured_threads().min(items.len().max(1));
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk_size = items.len().div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        let mut out = Vec::with_capacity(items.len());
        for h in handles {
            out.extend(h.join().expect("worker thread panicked"));
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_map_preserves_order() {
        let items: Vec<u32> = (0..100).collect();
        let out = map_chunked(&items, |x| x * 2);
        assert_eq!(out, (0..100).map(|x| x * 2).collect::<Vec<_>>());
    }
}
