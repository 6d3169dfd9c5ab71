//! Deterministic parallel kernels.
//!
//! With the `parallel` feature the helpers fan work out through rayon; the
//! sequential fallback runs the same code paths in order. Reductions always
//! follow the same fixed pairwise tree, so sums are bit-identical regardless
//! of feature flags or thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Leaf size of the pairwise summation tree.
const PAIRWISE_LEAF: usize = 128;

/// Minimum slice length before a reduction is worth forking.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 8192;

/// Pairwise sum with a fixed split tree.
///
/// The tree depends only on the slice length, never on the thread schedule,
/// so parallel and sequential builds agree to the last bit.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_LEAF {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    let (lo, hi) = xs.split_at(mid);
    #[cfg(feature = "parallel")]
    {
        if xs.len() >= PAR_THRESHOLD {
            let (a, b) = rayon::join(|| pairwise_sum(lo), || pairwise_sum(hi));
            return a + b;
        }
    }
    pairwise_sum(lo) + pairwise_sum(hi)
}

/// Pairwise sum of `f(i)` over `0..n` without materializing the values.
pub fn pairwise_sum_by<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    sum_range(0, n, &f)
}

fn sum_range<F>(lo: usize, hi: usize, f: &F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let len = hi - lo;
    if len <= PAIRWISE_LEAF {
        let mut acc = 0.0;
        for i in lo..hi {
            acc += f(i);
        }
        return acc;
    }
    let mid = lo + len / 2;
    #[cfg(feature = "parallel")]
    {
        if len >= PAR_THRESHOLD {
            let (a, b) = rayon::join(|| sum_range(lo, mid, f), || sum_range(mid, hi, f));
            return a + b;
        }
    }
    sum_range(lo, mid, f) + sum_range(mid, hi, f)
}

/// Fill `out[i] = f(i)`, in parallel when available.
pub fn fill_with<T, F>(out: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if out.len() >= 1024 {
            out.par_iter_mut()
                .enumerate()
                .for_each(|(i, slot)| *slot = f(i));
            return;
        }
    }
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = f(i);
    }
}

/// Map `f` over `0..n` into a fresh vector.
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send + Default + Clone,
    F: Fn(usize) -> T + Sync,
{
    let mut out = vec![T::default(); n];
    fill_with(&mut out, f);
    out
}

/// Maximum of `f(i)` over `0..n`; empty ranges give `f64::NEG_INFINITY`.
pub fn max_by<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if n >= PAR_THRESHOLD {
            return (0..n)
                .into_par_iter()
                .map(&f)
                .reduce(|| f64::NEG_INFINITY, f64::max);
        }
    }
    (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let xs: Vec<f64> = (0..97).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-12);
    }

    #[test]
    fn pairwise_sum_by_agrees_with_slice_version() {
        let xs: Vec<f64> = (0..50_000).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let a = pairwise_sum(&xs);
        let b = pairwise_sum_by(xs.len(), |i| xs[i]);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn fill_with_writes_every_slot() {
        let mut out = vec![0usize; 5000];
        fill_with(&mut out, |i| i * 2);
        assert!(out.iter().enumerate().all(|(i, &v)| v == 2 * i));
    }
}
