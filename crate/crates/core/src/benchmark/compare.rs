//! Repeated seeded runs of several algorithms on several functions.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimizer::{self, OptimizerConfig, RunOutcome};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::functions::BenchmarkFunction;
use super::pso::{pso_run, PsoParams};
use super::random_search::random_search_run;

#[derive(Debug, Clone, PartialEq)]
pub enum Algorithm {
    Aaso(OptimizerConfig),
    Pso(PsoParams),
    RandomSearch { budget: usize },
}

/// A named algorithm configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSpec {
    pub name: String,
    pub algorithm: Algorithm,
}

impl AlgorithmSpec {
    pub fn aaso(config: OptimizerConfig) -> Self {
        Self {
            name: "aaso".into(),
            algorithm: Algorithm::Aaso(config),
        }
    }

    pub fn pso(params: PsoParams) -> Self {
        Self {
            name: "pso".into(),
            algorithm: Algorithm::Pso(params),
        }
    }

    pub fn random_search(budget: usize) -> Self {
        Self {
            name: "random".into(),
            algorithm: Algorithm::RandomSearch { budget },
        }
    }

    /// PSO with `swarm = N` and `iters = T_max`, so both spend `N (T_max + 1)`
    /// evaluations before any bridge extras.
    pub fn pso_matching(config: &OptimizerConfig, v_max: f64) -> Self {
        Self::pso(PsoParams::new(config.population, config.max_iters, v_max))
    }

    /// Random search with the optimizer's base budget `N (T_max + 1)`.
    pub fn random_matching(config: &OptimizerConfig) -> Self {
        Self::random_search(config.population * (config.max_iters + 1))
    }

    /// One run with its own generator seeded from `seed`.
    pub fn run<T, F>(&self, objective: &F, function: &BenchmarkFunction<T>, seed: u64) -> Result<RunOutcome<T>>
    where
        T: Scalar,
        F: Fn(&[T]) -> T + Sync + ?Sized,
    {
        let mut rng = RandomSource::new(seed);
        match &self.algorithm {
            Algorithm::Aaso(config) => optimizer::run(objective, &function.space, config, &mut rng),
            Algorithm::Pso(params) => pso_run(objective, &function.space, params, &mut rng),
            Algorithm::RandomSearch { budget } => random_search_run(objective, &function.space, *budget, &mut rng),
        }
    }
}

/// Best / mean / standard deviation of final fitness over repeated runs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunStatistics<T> {
    pub algorithm: String,
    pub function: String,
    pub runs: usize,
    pub best: T,
    pub mean: T,
    /// Sample standard deviation (`n - 1` denominator).
    pub std: T,
    pub seeds: Vec<u64>,
    /// Best-so-far trace of every run.
    pub histories: Vec<Vec<T>>,
}

impl<T: Scalar> RunStatistics<T> {
    /// Aggregates from per-run traces; the final value of each trace is that
    /// run's result.
    pub fn from_histories(algorithm: &str, function: &str, seeds: Vec<u64>, histories: Vec<Vec<T>>) -> Self {
        let finals: Vec<T> = histories.iter().filter_map(|h| h.last().copied()).collect();
        let (best, mean, std) = summarize(&finals);
        Self {
            algorithm: algorithm.to_string(),
            function: function.to_string(),
            runs: finals.len(),
            best,
            mean,
            std,
            seeds,
            histories,
        }
    }

    pub fn finals(&self) -> Vec<T> {
        self.histories.iter().filter_map(|h| h.last().copied()).collect()
    }
}

/// `(min, mean, sample std)`; std is zero for fewer than two values.
pub fn summarize<T: Scalar>(values: &[T]) -> (T, T, T) {
    if values.is_empty() {
        return (T::nan(), T::nan(), T::nan());
    }
    let n = T::from_count(values.len());
    let best = values.iter().copied().fold(T::infinity(), T::min);
    let mean = values.iter().copied().sum::<T>() / n;
    let std = if values.len() < 2 {
        T::zero()
    } else {
        let ss: T = values.iter().map(|&v| (v - mean) * (v - mean)).sum();
        (ss / (n - T::one())).sqrt()
    };
    (best, mean, std)
}

/// Runs every algorithm on every function `runs` times. Run `r` of every
/// algorithm uses seed `base_seed + r`. Results come back ordered by
/// algorithm, then function.
pub fn compare<T: Scalar>(
    algorithms: &[AlgorithmSpec],
    functions: &[BenchmarkFunction<T>],
    runs: usize,
    base_seed: u64,
) -> Result<Vec<RunStatistics<T>>> {
    if runs < 2 {
        return Err(Error::InvalidConfig(format!(
            "compare needs at least 2 runs, got {runs}"
        )));
    }
    let seeds: Vec<u64> = (0..runs as u64).map(|r| base_seed.wrapping_add(r)).collect();
    let mut out = Vec::with_capacity(algorithms.len() * functions.len());
    for alg in algorithms {
        for func in functions {
            let objective = |x: &[T]| func.eval(x);
            let histories = seeds
                .par_iter()
                .map(|&seed| alg.run(&objective, func, seed).map(|o| o.history))
                .collect::<Result<Vec<_>>>()?;
            out.push(RunStatistics::from_histories(
                &alg.name,
                func.name(),
                seeds.clone(),
                histories,
            ));
        }
    }
    Ok(out)
}
