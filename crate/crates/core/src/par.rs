//! Switch between rayon and plain iterators depending on the `parallel` feature.

macro_rules! if_rayon {
    ($rayon_value:expr, $else_value:expr) => {{
        #[cfg(feature = "parallel")]
        {
            $rayon_value
        }
        #[cfg(not(feature = "parallel"))]
        {
            $else_value
        }
    }};
}

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over `0..n`, preserving order.
pub(crate) fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if_rayon!(
        (0..n).into_par_iter().map(f).collect(),
        (0..n).map(f).collect()
    )
}

/// Flat-map over `0..n`, preserving order.
pub(crate) fn flat_map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync + Send,
{
    if_rayon!(
        (0..n).into_par_iter().flat_map_iter(f).collect(),
        (0..n).flat_map(f).collect()
    )
}

/// Smallest `i` in `0..n` with `f(i) = Some(_)`.
pub(crate) fn find_first_range<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    if_rayon!((0..n).into_par_iter().find_map_first(f), (0..n).find_map(f))
}
