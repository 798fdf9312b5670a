//! Global-best particle swarm with linearly decreasing inertia.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimizer::{RunOutcome, SearchSpace};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct PsoParams {
    pub swarm: usize,
    pub iters: usize,
    pub c1: f64,
    pub c2: f64,
    pub w_max: f64,
    pub w_min: f64,
    /// Per-dimension velocity limit.
    pub v_max: f64,
}

impl PsoParams {
    /// `c1 = c2 = 2`, inertia from 0.9 down to 0.4.
    pub fn new(swarm: usize, iters: usize, v_max: f64) -> Self {
        Self {
            swarm,
            iters,
            c1: 2.0,
            c2: 2.0,
            w_max: 0.9,
            w_min: 0.4,
            v_max,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.swarm == 0 || self.iters == 0 {
            return Err(Error::InvalidConfig("swarm and iters must be positive".into()));
        }
        if self.c1 < 0.0 || self.c2 < 0.0 || self.w_min < 0.0 || self.w_max < 0.0 {
            return Err(Error::InvalidConfig("PSO coefficients must be non-negative".into()));
        }
        if self.v_max.is_nan() || self.v_max <= 0.0 {
            return Err(Error::InvalidConfig("v_max must be positive".into()));
        }
        Ok(())
    }

    /// Inertia at iteration `t` (1-based).
    pub fn inertia(&self, t: usize) -> f64 {
        if self.iters <= 1 {
            return self.w_max;
        }
        self.w_max - (self.w_max - self.w_min) * (t - 1) as f64 / (self.iters - 1) as f64
    }
}

pub fn pso_run<T, F>(
    objective: &F,
    space: &SearchSpace<T>,
    params: &PsoParams,
    rng: &mut RandomSource,
) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    pso_run_with(objective, space, params, rng, &[])
}

/// PSO with `seeds` occupying the first particle slots. Velocities start at zero.
///
/// Draw order: initial positions, then per iteration, per particle, per
/// dimension `r1` followed by `r2`.
pub fn pso_run_with<T, F>(
    objective: &F,
    space: &SearchSpace<T>,
    params: &PsoParams,
    rng: &mut RandomSource,
    seeds: &[Vec<T>],
) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    params.validate()?;
    let dim = space.dim();
    let mut positions: Vec<Vec<T>> = seeds
        .iter()
        .take(params.swarm)
        .map(|s| {
            let mut x = s.clone();
            space.repair(&mut x);
            x
        })
        .collect();
    while positions.len() < params.swarm {
        positions.push(space.sample(rng));
    }
    let mut velocities = vec![vec![T::zero(); dim]; params.swarm];
    let mut evaluations = 0;
    let mut fitness = evaluate(objective, &positions, 0, &mut evaluations)?;
    let mut pbest = positions.clone();
    let mut pbest_f = fitness.clone();
    let mut g = argmin(&pbest_f);
    let initial_best = pbest_f[g];
    let (c1, c2, v_max) = (T::lit(params.c1), T::lit(params.c2), T::lit(params.v_max));
    let mut history = Vec::with_capacity(params.iters);

    for t in 1..=params.iters {
        let w = T::lit(params.inertia(t));
        let gbest = pbest[g].clone();
        for i in 0..params.swarm {
            let own = space.unwrap_near(&pbest[i], &positions[i]);
            let global = space.unwrap_near(&gbest, &positions[i]);
            for d in 0..dim {
                let r1 = T::lit(rng.uniform());
                let r2 = T::lit(rng.uniform());
                let x = positions[i][d];
                let v = w * velocities[i][d] + c1 * r1 * (own[d] - x) + c2 * r2 * (global[d] - x);
                let v = v.max(-v_max).min(v_max);
                velocities[i][d] = v;
                positions[i][d] = x + v;
            }
            space.repair(&mut positions[i]);
        }
        fitness = evaluate(objective, &positions, t, &mut evaluations)?;
        for i in 0..params.swarm {
            if fitness[i] < pbest_f[i] {
                pbest_f[i] = fitness[i];
                pbest[i].clone_from(&positions[i]);
            }
        }
        g = argmin(&pbest_f);
        history.push(pbest_f[g]);
    }

    Ok(RunOutcome {
        best_position: pbest[g].clone(),
        best_fitness: pbest_f[g],
        initial_best,
        history,
        evaluations,
    })
}

fn evaluate<T, F>(objective: &F, positions: &[Vec<T>], iteration: usize, counter: &mut usize) -> Result<Vec<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    let out: Vec<T> = positions.par_iter().map(|x| objective(x)).collect();
    *counter += out.len();
    match out.iter().find(|f| !f.is_finite()) {
        Some(bad) => Err(Error::NonFiniteObjective {
            iteration,
            value: bad.to_f64_lossy(),
        }),
        None => Ok(out),
    }
}

/// First index of the minimum.
fn argmin<T: Scalar>(values: &[T]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v < values[best] {
            best = i;
        }
    }
    best
}
