//! Seeded random source for every stochastic operator in the crate.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Cauchy, Distribution, StandardNormal};

/// Deterministic random stream. Equal seeds give equal draw sequences.
#[derive(Debug, Clone)]
pub struct RandomSource {
    inner: ChaCha8Rng,
    cauchy: Cauchy<f64>,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
            cauchy: Cauchy::new(0.0, 1.0).expect("unit Cauchy is valid"),
        }
    }

    /// Uniform in `[0, 1)`.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform in `(0, 1]`.
    #[inline]
    pub fn uniform_open_closed(&mut self) -> f64 {
        1.0 - self.inner.random::<f64>()
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    #[inline]
    pub fn gaussian(&mut self) -> f64 {
        StandardNormal.sample(&mut self.inner)
    }

    #[inline]
    pub fn cauchy(&mut self) -> f64 {
        self.cauchy.sample(&mut self.inner)
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    #[inline]
    pub fn index(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    /// `k` distinct indices drawn uniformly from `0..n`, in draw order.
    pub fn distinct_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        index::sample(&mut self.inner, n, k.min(n)).into_vec()
    }

    /// Roulette-wheel selection over a probability mass function.
    ///
    /// `pmf` need not be normalized; one uniform draw is consumed.
    pub fn roulette(&mut self, pmf: &[f64]) -> usize {
        debug_assert!(!pmf.is_empty());
        let total: f64 = pmf.iter().sum();
        let mut target = self.uniform() * total;
        for (k, &p) in pmf.iter().enumerate() {
            if target < p {
                return k;
            }
            target -= p;
        }
        // rounding left a sliver past the last bucket; land on the last non-zero one
        pmf.iter().rposition(|&p| p > 0.0).unwrap_or(pmf.len() - 1)
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}
