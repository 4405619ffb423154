//! Data-parallel inner loops with a sequential fallback.
//!
//! Built with the default `parallel` feature these dispatch to rayon;
//! without it they run single-threaded with identical results. Every helper
//! is order-respecting, so verdicts and reported counterexamples do not
//! depend on thread scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First index in `0..n` satisfying `pred`, in sequence order.
pub fn find_first_index<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_first(|&i| pred(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find(|&i| pred(i))
    }
}

/// Position of the first item satisfying `pred`, in slice order.
pub fn position_first<T, F>(items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().position_first(|it| pred(it))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().position(pred)
    }
}

/// Map over a slice, preserving order.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
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

/// Map over `0..n`, preserving order.
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
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

pub fn all_indices<F>(n: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    find_first_index(n, |i| !pred(i)).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_match_is_positional() {
        // Both 3 and 7 match; the earliest index must win regardless of scheduling.
        assert_eq!(find_first_index(100, |i| i == 3 || i == 7), Some(3));
        let v: Vec<usize> = (0..50).collect();
        assert_eq!(position_first(&v, |&x| x >= 10), Some(10));
    }

    #[test]
    fn map_preserves_order() {
        assert_eq!(map_indices(5, |i| i * i), vec![0, 1, 4, 9, 16]);
    }
}
