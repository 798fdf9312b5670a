//! Virtual-force rotation baseline.
//!
//! Every iteration each sensor (in a freshly shuffled order) feels an
//! attraction toward the mean bearing of uncovered grids in its range and a
//! repulsion away from the mean sensing direction of neighbors within `2R`,
//! then turns one fixed step toward the weighted sum.

use std::time::Instant;

use crate::coverage::{canonical_angle, CoverageCounter, CoverageEvaluator, CoverageField, DeploymentScheme, Sensor};
use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::EnhancementRun;

pub const ATTRACTION_WEIGHT: f64 = 1.0;
pub const REPULSION_WEIGHT: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub struct VfaParams {
    /// Radians turned per sensor per iteration.
    pub rotation_step: f64,
    pub max_iters: usize,
}

impl Default for VfaParams {
    /// π/90 per step, 100 iterations.
    fn default() -> Self {
        Self {
            rotation_step: std::f64::consts::PI / 90.0,
            max_iters: 100,
        }
    }
}

/// Signed angle `to - from` in `(-π, π]`.
fn signed_offset<T: Scalar>(from: T, to: T) -> T {
    let tau = T::TAU();
    let mut d = (to - from) % tau;
    if d > T::PI() {
        d -= tau;
    } else if d <= -T::PI() {
        d += tau;
    }
    d
}

/// Circular mean of unit vectors, `None` when they cancel.
fn mean_bearing<T: Scalar>(sum_cos: T, sum_sin: T) -> Option<T> {
    let norm = (sum_cos * sum_cos + sum_sin * sum_sin).sqrt();
    (norm > T::lit(1e-9)).then(|| sum_sin.atan2(sum_cos))
}

/// Offset from sensor `k`'s direction toward the mean bearing of the
/// uncovered grids within its radius; zero when none are uncovered.
pub fn attraction_torque<T: Scalar>(evaluator: &CoverageEvaluator<T>, counter: &CoverageCounter<'_, T>, k: usize) -> T {
    let (mut sc, mut ss) = (T::zero(), T::zero());
    for cand in evaluator.candidate_offsets(k) {
        if cand.dist > T::zero() && !counter.is_covered(cand.grid as usize) {
            sc += cand.dx / cand.dist;
            ss += cand.dy / cand.dist;
        }
    }
    match mean_bearing(sc, ss) {
        Some(bearing) => signed_offset(counter.angles()[k], bearing),
        None => T::zero(),
    }
}

/// Offset from sensor `k`'s direction toward the opposite of its neighbors'
/// mean sensing direction; zero without neighbors.
pub fn repulsion_torque<T: Scalar>(angles: &[T], neighbors: &[usize], k: usize) -> T {
    let (mut sc, mut ss) = (T::zero(), T::zero());
    for &j in neighbors {
        sc += angles[j].cos();
        ss += angles[j].sin();
    }
    match mean_bearing(sc, ss) {
        Some(mean) => signed_offset(angles[k], mean + T::PI()),
        None => T::zero(),
    }
}

/// `-1`, `0` or `+1`: the sign of the weighted torque sum.
pub fn rotation_direction<T: Scalar>(attraction: T, repulsion: T) -> T {
    let total = T::lit(ATTRACTION_WEIGHT) * attraction + T::lit(REPULSION_WEIGHT) * repulsion;
    if total > T::zero() {
        T::one()
    } else if total < T::zero() {
        -T::one()
    } else {
        T::zero()
    }
}

fn neighbor_lists<T: Scalar>(sensors: &[Sensor<T>]) -> Vec<Vec<usize>> {
    sensors
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let reach = T::lit(2.0) * a.radius;
            sensors
                .iter()
                .enumerate()
                .filter(|&(j, b)| j != i && (a.x - b.x).hypot(a.y - b.y) <= reach)
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Turns every sensor in `order` one step according to its current torques.
fn sweep<T: Scalar>(
    evaluator: &CoverageEvaluator<T>,
    counter: &mut CoverageCounter<'_, T>,
    neighbors: &[Vec<usize>],
    order: &[usize],
    step: T,
) {
    for &k in order {
        let attraction = attraction_torque(evaluator, counter, k);
        let repulsion = repulsion_torque(counter.angles(), &neighbors[k], k);
        let dir = rotation_direction(attraction, repulsion);
        if dir != T::zero() {
            let theta = canonical_angle(counter.angles()[k] + dir * step);
            counter.set_angle(k, theta);
        }
    }
}

/// Rotates sensors by virtual forces, keeping the best angles seen.
pub fn enhance_vfa<T: Scalar>(
    sensors: &[Sensor<T>],
    field: &CoverageField<T>,
    params: &VfaParams,
    rng: &mut RandomSource,
) -> Result<EnhancementRun<T>> {
    if params.rotation_step.is_nan() || params.rotation_step <= 0.0 {
        return Err(Error::InvalidConfig("rotation step must be positive".into()));
    }
    if sensors.is_empty() {
        return Err(Error::Domain("coverage enhancement needs at least one sensor".into()));
    }
    let started = Instant::now();
    let evaluator = CoverageEvaluator::new(sensors, field);
    let deployed: Vec<T> = sensors.iter().map(|s| s.deviation()).collect();
    let neighbors = neighbor_lists(sensors);
    let step = T::lit(params.rotation_step);

    let mut counter = CoverageCounter::new(&evaluator, &deployed)?;
    let initial_rate = counter.rate();
    let mut best_rate = initial_rate;
    let mut best_covered = counter.covered_count();
    let mut best_angles = deployed.clone();
    let mut curve = Vec::with_capacity(params.max_iters + 1);
    curve.push(best_rate);

    let mut order: Vec<usize> = (0..sensors.len()).collect();
    for _ in 0..params.max_iters {
        rng.shuffle(&mut order);
        sweep(&evaluator, &mut counter, &neighbors, &order, step);
        if counter.covered_count() > best_covered {
            best_covered = counter.covered_count();
            best_rate = counter.rate();
            best_angles = counter.angles().to_vec();
        }
        curve.push(best_rate);
    }

    let best_angles = DeploymentScheme::new(best_angles);
    let final_rate = evaluator.coverage(best_angles.angles())?.rate;
    Ok(EnhancementRun {
        initial_rate,
        final_rate,
        best_angles,
        curve,
        evaluations: params.max_iters + 1,
        elapsed: started.elapsed(),
    })
}
