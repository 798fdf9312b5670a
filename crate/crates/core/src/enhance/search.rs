use std::time::Instant;

use crate::benchmark::{pso_run_with, PsoParams};
use crate::coverage::{count_from_fitness, CoverageEvaluator, CoverageField, DeploymentScheme, Sensor};
use crate::error::{Error, Result};
use crate::optimizer::{self, BoundaryPolicy, IterationReport, OptimizerConfig, RunOutcome, SearchSpace};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::EnhancementRun;

/// `[0, 2π)` per sensor, wrapped.
pub fn angle_space<T: Scalar>(sensors: usize) -> Result<SearchSpace<T>> {
    SearchSpace::uniform(sensors, T::zero(), T::TAU(), BoundaryPolicy::Wrap)
}

fn prepare<T: Scalar>(sensors: &[Sensor<T>], field: &CoverageField<T>) -> Result<(CoverageEvaluator<T>, Vec<T>, f64)> {
    if sensors.is_empty() {
        return Err(Error::Domain("coverage enhancement needs at least one sensor".into()));
    }
    let evaluator = CoverageEvaluator::new(sensors, field);
    let deployed: Vec<T> = sensors.iter().map(|s| s.deviation()).collect();
    let initial_rate = evaluator.coverage(&deployed)?.rate;
    Ok((evaluator, deployed, initial_rate))
}

fn finish<T: Scalar>(
    evaluator: &CoverageEvaluator<T>,
    initial_rate: f64,
    outcome: RunOutcome<T>,
    started: Instant,
) -> Result<EnhancementRun<T>> {
    let m = evaluator.grid_count();
    let rate = |f: T| count_from_fitness(f, m) as f64 / m as f64;
    let mut curve = Vec::with_capacity(outcome.history.len() + 1);
    curve.push(rate(outcome.initial_best));
    curve.extend(outcome.history.iter().map(|&f| rate(f)));
    let best_angles = DeploymentScheme::new(outcome.best_position);
    let final_rate = evaluator.coverage(best_angles.angles())?.rate;
    Ok(EnhancementRun {
        initial_rate,
        final_rate,
        best_angles,
        curve,
        evaluations: outcome.evaluations,
        elapsed: started.elapsed(),
    })
}

/// Optimizes deviation angles with the army ant search optimizer.
///
/// The as-deployed angle vector is the first individual of the initial
/// population; the other `N - 1` are uniform.
pub fn enhance_aaso<T: Scalar>(
    sensors: &[Sensor<T>],
    field: &CoverageField<T>,
    config: &OptimizerConfig,
    rng: &mut RandomSource,
) -> Result<EnhancementRun<T>> {
    enhance_aaso_observed(sensors, field, config, rng, |_| {})
}

pub fn enhance_aaso_observed<T, O>(
    sensors: &[Sensor<T>],
    field: &CoverageField<T>,
    config: &OptimizerConfig,
    rng: &mut RandomSource,
    observer: O,
) -> Result<EnhancementRun<T>>
where
    T: Scalar,
    O: FnMut(&IterationReport<T>),
{
    let started = Instant::now();
    let (evaluator, deployed, initial_rate) = prepare(sensors, field)?;
    let space = angle_space(sensors.len())?;
    let objective = |angles: &[T]| evaluator.fitness_unchecked(angles);
    let outcome = optimizer::run_with(&objective, &space, config, rng, &[deployed], observer)?;
    finish(&evaluator, initial_rate, outcome, started)
}

/// Optimizes deviation angles with the inertia-weight PSO baseline. The
/// as-deployed angles seed the first particle.
pub fn enhance_pso<T: Scalar>(
    sensors: &[Sensor<T>],
    field: &CoverageField<T>,
    params: &PsoParams,
    rng: &mut RandomSource,
) -> Result<EnhancementRun<T>> {
    let started = Instant::now();
    let (evaluator, deployed, initial_rate) = prepare(sensors, field)?;
    let space = angle_space(sensors.len())?;
    let objective = |angles: &[T]| evaluator.fitness_unchecked(angles);
    let outcome = pso_run_with(&objective, &space, params, rng, &[deployed])?;
    finish(&evaluator, initial_rate, outcome, started)
}
