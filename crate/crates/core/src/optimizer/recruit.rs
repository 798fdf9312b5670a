//! Poisson recruitment of ants by prey.

use crate::rng::RandomSource;

use super::config::OptimizerConfig;

/// Average recruits per prey at iteration `t`:
/// `num_ini + (N - num_ini) * t / T_max`.
pub fn avg_recruits(t: usize, config: &OptimizerConfig) -> f64 {
    let n = config.population as f64;
    config.recruit_init + (n - config.recruit_init) * t as f64 / config.max_iters as f64
}

/// `ln P(k)` for a Poisson variable with mean `lambda`.
///
/// `ln k!` is accumulated as a sum of logarithms, which is exact enough for the
/// population sizes used here and never overflows.
pub fn poisson_log_pmf(k: usize, lambda: f64) -> f64 {
    let ln_fact: f64 = (2..=k).map(|i| (i as f64).ln()).sum();
    k as f64 * lambda.ln() - lambda - ln_fact
}

/// Poisson pmf on `0..=n_max`, renormalized over the truncated support.
pub fn truncated_poisson_pmf(lambda: f64, n_max: usize) -> Vec<f64> {
    let ln_lambda = lambda.ln();
    let mut ln_fact = 0.0;
    let logs: Vec<f64> = (0..=n_max)
        .map(|k| {
            if k > 1 {
                ln_fact += (k as f64).ln();
            }
            k as f64 * ln_lambda - lambda - ln_fact
        })
        .collect();
    let peak = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut pmf: Vec<f64> = logs.iter().map(|&l| (l - peak).exp()).collect();
    let total: f64 = pmf.iter().sum();
    pmf.iter_mut().for_each(|p| *p /= total);
    pmf
}

/// Roulette-samples a recruit count from the truncated Poisson pmf.
pub fn sample_recruit_count(lambda: f64, n_max: usize, rng: &mut RandomSource) -> usize {
    let pmf = truncated_poisson_pmf(lambda, n_max);
    rng.roulette(&pmf)
}

/// Ant indices recruited by each active prey, in prey order.
pub type RecruitMap = Vec<Vec<usize>>;

/// Draws the recruitment for `active_prey` prey at iteration `t`.
///
/// Draw order: all recruit counts (prey order), then each prey's index draws.
pub fn recruit(active_prey: usize, config: &OptimizerConfig, t: usize, rng: &mut RandomSource) -> RecruitMap {
    let n = config.population;
    let pmf = truncated_poisson_pmf(avg_recruits(t, config), n);
    let counts: Vec<usize> = (0..active_prey).map(|_| rng.roulette(&pmf)).collect();
    counts.into_iter().map(|k| rng.distinct_indices(n, k)).collect()
}

/// How many prey recruited each ant (`num_forant`).
pub fn recruit_counts(map: &RecruitMap, population: usize) -> Vec<usize> {
    let mut counts = vec![0; population];
    for list in map {
        for &i in list {
            counts[i] += 1;
        }
    }
    counts
}
