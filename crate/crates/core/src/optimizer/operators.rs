//! Move operators. Each has a `*_with` form taking its random draws
//! explicitly and a form that draws from a [`RandomSource`] and applies the
//! search-space boundary policy.

use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::archive::Ant;
use super::space::SearchSpace;

/// Regularizer in the ant-bridge weights `1 / (f_k - f_best + delta)`.
pub const BRIDGE_DELTA: f64 = 1e-12;

/// `prey + (prey - ant) * eps`, element-wise.
pub fn scatter_with<T: Scalar>(prey: &[T], ant: &[T], eps: &[T]) -> Vec<T> {
    prey.iter()
        .zip(ant)
        .zip(eps)
        .map(|((&p, &a), &e)| p + (p - a) * e)
        .collect()
}

/// Gaussian scatter of an ant around a prey. Draws `D` standard normals.
pub fn scatter_position<T: Scalar>(prey: &[T], ant: &[T], space: &SearchSpace<T>, rng: &mut RandomSource) -> Vec<T> {
    let eps: Vec<T> = (0..prey.len()).map(|_| T::lit(rng.gaussian())).collect();
    let mut x = scatter_with(prey, ant, &eps);
    space.repair(&mut x);
    x
}

/// Element-wise mean of the scatter positions an ant received this iteration.
pub fn attack_target<T: Scalar>(scatters: &[Vec<T>]) -> Result<Vec<T>> {
    let first = scatters.first().ok_or(Error::EmptyAttack)?;
    let count = T::from_count(scatters.len());
    let mut mean = first.clone();
    for s in &scatters[1..] {
        for (m, &v) in mean.iter_mut().zip(s) {
            *m += v;
        }
    }
    mean.iter_mut().for_each(|m| *m /= count);
    Ok(mean)
}

/// `ant + a * r * (target - ant)`.
pub fn attack_step_with<T: Scalar>(ant: &[T], target: &[T], attack_coeff: T, r: T) -> Vec<T> {
    let scale = attack_coeff * r;
    ant.iter().zip(target).map(|(&x, &g)| x + scale * (g - x)).collect()
}

/// Attack move. Draws one `r` in `(0, 1]`, shared by every dimension.
pub fn step_attack<T: Scalar>(
    ant: &[T],
    target: &[T],
    attack_coeff: T,
    space: &SearchSpace<T>,
    rng: &mut RandomSource,
) -> Vec<T> {
    let r = T::lit(rng.uniform_open_closed());
    let mut x = attack_step_with(ant, target, attack_coeff, r);
    space.repair(&mut x);
    x
}

/// `((c1 + n1) + (c2 + n2)) / 2`, element-wise.
pub fn follow_with<T: Scalar>(first: &[T], second: &[T], noise1: &[T], noise2: &[T]) -> Vec<T> {
    let two = T::lit(2.0);
    first
        .iter()
        .zip(second)
        .zip(noise1.iter().zip(noise2))
        .map(|((&a, &b), (&na, &nb))| ((a + na) + (b + nb)) / two)
        .collect()
}

/// Companion-follow move with standard Cauchy noise. Draws `D` values for the
/// first companion, then `D` for the second.
pub fn step_follow<T: Scalar>(first: &[T], second: &[T], space: &SearchSpace<T>, rng: &mut RandomSource) -> Vec<T> {
    let dim = first.len();
    let n1: Vec<T> = (0..dim).map(|_| T::lit(rng.cauchy())).collect();
    let n2: Vec<T> = (0..dim).map(|_| T::lit(rng.cauchy())).collect();
    let mut x = follow_with(first, second, &n1, &n2);
    space.repair(&mut x);
    x
}

/// Picks two distinct companion indices from `0..population`, excluding `me`.
pub fn pick_companions(me: usize, population: usize, rng: &mut RandomSource) -> (usize, usize) {
    debug_assert!(population >= 3);
    let skip = |mut i: usize, taken: &[usize]| {
        let mut sorted = taken.to_vec();
        sorted.sort_unstable();
        for t in sorted {
            if i >= t {
                i += 1;
            }
        }
        i
    };
    let first = skip(rng.index(population - 1), &[me]);
    let second = skip(rng.index(population - 2), &[me, first]);
    (first, second)
}

/// Normalized bridge weights `F_k / sum F`, with `F_k = 1 / (f_k - f_best + delta)`.
pub fn bridge_weights<T: Scalar>(fitness: &[T], best: T) -> Result<Vec<T>> {
    if fitness.iter().any(|f| !f.is_finite()) || !best.is_finite() {
        return Err(Error::NonFiniteFitness);
    }
    let delta = T::lit(BRIDGE_DELTA);
    let raw: Vec<T> = fitness
        .iter()
        .map(|&f| T::one() / ((f - best).max(T::zero()) + delta))
        .collect();
    let total: T = raw.iter().copied().sum();
    Ok(raw.into_iter().map(|w| w / total).collect())
}

/// Fitness-weighted centroid of the worse half of the population.
pub fn ant_bridge<T: Scalar>(worse_half: &[&Ant<T>], best: T) -> Result<Vec<T>> {
    let first = worse_half.first().ok_or(Error::NonFiniteFitness)?;
    let fitness: Vec<T> = worse_half.iter().map(|a| a.fitness).collect();
    let weights = bridge_weights(&fitness, best)?;
    let mut bridge = vec![T::zero(); first.position.len()];
    for (ant, &w) in worse_half.iter().zip(&weights) {
        for (b, &x) in bridge.iter_mut().zip(&ant.position) {
            *b += w * x;
        }
    }
    Ok(bridge)
}

/// The `ceil(N/2)` highest-fitness ants, ties broken by index, returned in
/// ascending index order.
pub fn worse_half_indices<T: Scalar>(population: &[Ant<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..population.len()).collect();
    order.sort_by(|&a, &b| {
        population[a]
            .fitness
            .partial_cmp(&population[b].fitness)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let keep = population.len().div_ceil(2);
    let mut worse = order.split_off(population.len() - keep);
    worse.sort_unstable();
    worse
}

/// Replaces coordinate `j` with `2 u bridge[j] - x[j]`.
pub fn bridge_candidate_with<T: Scalar>(position: &[T], bridge: &[T], j: usize, u: T) -> Vec<T> {
    let mut x = position.to_vec();
    x[j] = T::lit(2.0) * u * bridge[j] - position[j];
    x
}

/// Draws the mutation dimension and `u` in `(0, 1]`, returns the repaired candidate.
pub fn bridge_candidate<T: Scalar>(
    position: &[T],
    bridge: &[T],
    space: &SearchSpace<T>,
    rng: &mut RandomSource,
) -> Vec<T> {
    let j = rng.index(position.len());
    let u = T::lit(rng.uniform_open_closed());
    let mut x = bridge_candidate_with(position, bridge, j, u);
    space.repair(&mut x);
    x
}

/// Single-dimension bridge mutation with greedy acceptance. Returns the ant to
/// keep; ties keep the original.
pub fn bridge_mutate<T, F>(
    ant: &Ant<T>,
    bridge: &[T],
    objective: &F,
    space: &SearchSpace<T>,
    rng: &mut RandomSource,
) -> Result<Ant<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + ?Sized,
{
    let candidate = bridge_candidate(&ant.position, bridge, space, rng);
    let fitness = objective(&candidate);
    if !fitness.is_finite() {
        return Err(Error::NonFiniteObjective {
            iteration: 0,
            value: fitness.to_f64_lossy(),
        });
    }
    Ok(if fitness < ant.fitness {
        Ant::new(candidate, fitness)
    } else {
        ant.clone()
    })
}
