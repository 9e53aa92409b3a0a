//! Sequential / data-parallel execution of per-poset work.
//!
//! With the `parallel` feature (default) the scans fan out over rayon;
//! without it, or with `jobs == 1`, they run sequentially. Output order is
//! the input order either way, so results are identical for any job count.

/// Map `f` over `items`, preserving order. `jobs == 1` forces the sequential
/// path; `jobs == 0` uses the default thread count.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        1 => items.into_iter().map(f).collect(),
        0 => items.into_par_iter().map(f).collect(),
        n => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool");
            pool.install(|| items.into_par_iter().map(f).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: Vec<T>, _jobs: usize, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u32> = (0..100).collect();
        let seq = map_ordered(items.clone(), 1, |x| x * 2);
        let par = map_ordered(items, 4, |x| x * 2);
        assert_eq!(seq, par);
        assert_eq!(seq[3], 6);
    }
}
