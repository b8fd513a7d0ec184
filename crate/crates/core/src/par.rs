//! Data-parallel helpers for the exhaustive sweeps.
//!
//! With the `parallel` feature these run on the rayon global pool; without it
//! they are plain sequential iterators. Every helper preserves input order in
//! its output, so results are identical either way.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
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

/// Order-preserving flat map.
pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().flat_map(f).collect()
    }
}

/// Values in `range` satisfying `pred`, ascending.
pub fn filter_range<F>(range: Range<u64>, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().filter(|&x| pred(x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.filter(|&x| pred(x)).collect()
    }
}

/// Fold over `range` with an associative, commutative `merge`.
pub fn fold_range<A, F, M>(range: Range<u64>, identity: impl Fn() -> A + Sync + Send, fold: F, merge: M) -> A
where
    A: Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().fold(&identity, fold).reduce(&identity, merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = &merge;
        range.fold(identity(), fold)
    }
}

/// Fold over a slice with an associative, commutative `merge`.
pub fn fold<T, A, F, M>(items: &[T], identity: impl Fn() -> A + Sync + Send, fold: F, merge: M) -> A
where
    T: Sync,
    A: Send,
    F: Fn(A, &T) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().fold(&identity, fold).reduce(&identity, merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = &merge;
        items.iter().fold(identity(), fold)
    }
}

/// The first item (in slice order) for which `f` returns `Some`.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// Whether the sweeps run on more than one thread.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_preserve_order() {
        let v: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&v, |x| x * 2)[999], 1998);
        assert_eq!(filter_range(0..20, |x| x % 7 == 0), vec![0, 7, 14]);
        assert_eq!(fold_range(0..101, || 0u64, |a, x| a + x, |a, b| a + b), 5050);
        assert_eq!(find_map_first(&v, |&x| (x > 500).then_some(x)), Some(501));
        assert_eq!(flat_map(&v[..3], |&x| vec![x; x as usize]), vec![1, 2, 2]);
    }
}
