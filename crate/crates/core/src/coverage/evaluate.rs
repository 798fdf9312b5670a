use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::field::{Candidate, CoverageField};
use super::sensor::{is_sensed, sector_contains, Sensor};

/// Per-grid covered flags and the resulting coverage rate.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageResult {
    pub covered: Vec<bool>,
    pub covered_count: usize,
    /// `covered_count / M`.
    pub rate: f64,
}

impl CoverageResult {
    fn from_flags(covered: Vec<bool>) -> Self {
        let covered_count = covered.iter().filter(|&&c| c).count();
        let rate = if covered.is_empty() {
            0.0
        } else {
            covered_count as f64 / covered.len() as f64
        };
        Self {
            covered,
            covered_count,
            rate,
        }
    }
}

/// Coverage of `field` by `sensors`, testing only each sensor's candidate grids.
pub fn coverage<T: Scalar>(sensors: &[Sensor<T>], field: &CoverageField<T>) -> CoverageResult {
    let mut covered = vec![false; field.grid_count()];
    for s in sensors {
        let (c, sn) = s.direction();
        let cos_half = s.cos_half_angle();
        for cand in field.candidates(s) {
            let g = cand.grid as usize;
            if !covered[g] && sector_contains(cand.dx, cand.dy, cand.dist, c, sn, cos_half, s.radius) {
                covered[g] = true;
            }
        }
    }
    CoverageResult::from_flags(covered)
}

/// All-pairs reference computation.
pub fn coverage_naive<T: Scalar>(sensors: &[Sensor<T>], field: &CoverageField<T>) -> CoverageResult {
    let covered = field
        .centroids()
        .iter()
        .map(|&c| sensors.iter().any(|s| is_sensed(s, c)))
        .collect();
    CoverageResult::from_flags(covered)
}

/// Objective value for a coverage rate: `M / covered`, or `M²` when nothing is
/// covered so the objective stays finite.
pub fn fitness_from_count<T: Scalar>(covered: usize, grids: usize) -> T {
    let m = T::from_count(grids);
    if covered == 0 {
        m * m
    } else {
        m / T::from_count(covered)
    }
}

/// Inverts [`fitness_from_count`].
pub fn count_from_fitness<T: Scalar>(fitness: T, grids: usize) -> usize {
    let m = T::from_count(grids);
    if fitness >= m * m {
        0
    } else {
        (m / fitness).round().to_usize().unwrap_or(0)
    }
}

/// Sensors with fixed positions and cached candidate grids; evaluates coverage
/// for any vector of deviation angles.
#[derive(Debug, Clone)]
pub struct CoverageEvaluator<T> {
    sensors: Vec<Sensor<T>>,
    candidates: Vec<Vec<Candidate<T>>>,
    cos_half: Vec<T>,
    grids: usize,
}

impl<T: Scalar> CoverageEvaluator<T> {
    pub fn new(sensors: &[Sensor<T>], field: &CoverageField<T>) -> Self {
        Self {
            candidates: sensors.iter().map(|s| field.candidates(s)).collect(),
            cos_half: sensors.iter().map(|s| s.cos_half_angle()).collect(),
            sensors: sensors.to_vec(),
            grids: field.grid_count(),
        }
    }

    pub fn sensors(&self) -> &[Sensor<T>] {
        &self.sensors
    }

    pub fn grid_count(&self) -> usize {
        self.grids
    }

    fn check_len(&self, angles: &[T]) -> Result<()> {
        if angles.len() != self.sensors.len() {
            return Err(Error::LengthMismatch {
                expected: self.sensors.len(),
                actual: angles.len(),
            });
        }
        Ok(())
    }

    /// Grids sensed by sensor `k` at deviation `theta`, via its candidates.
    pub(crate) fn sensed_by(&self, k: usize, theta: T) -> impl Iterator<Item = usize> + '_ {
        let (c, s) = (theta.cos(), theta.sin());
        let cos_half = self.cos_half[k];
        let radius = self.sensors[k].radius;
        self.candidates[k].iter().filter_map(move |cand| {
            sector_contains(cand.dx, cand.dy, cand.dist, c, s, cos_half, radius).then_some(cand.grid as usize)
        })
    }

    pub(crate) fn candidate_offsets(&self, k: usize) -> &[Candidate<T>] {
        &self.candidates[k]
    }

    pub fn covered_flags(&self, angles: &[T]) -> Result<Vec<bool>> {
        self.check_len(angles)?;
        let mut covered = vec![false; self.grids];
        for (k, &theta) in angles.iter().enumerate() {
            for g in self.sensed_by(k, theta) {
                covered[g] = true;
            }
        }
        Ok(covered)
    }

    pub fn covered_count(&self, angles: &[T]) -> Result<usize> {
        Ok(self.covered_flags(angles)?.iter().filter(|&&c| c).count())
    }

    pub fn coverage(&self, angles: &[T]) -> Result<CoverageResult> {
        Ok(CoverageResult::from_flags(self.covered_flags(angles)?))
    }

    /// Objective for the deviation vector `angles`.
    pub fn fitness(&self, angles: &[T]) -> Result<T> {
        Ok(fitness_from_count(self.covered_count(angles)?, self.grids))
    }

    /// [`Self::fitness`] for callers that already guarantee one angle per sensor.
    pub fn fitness_unchecked(&self, angles: &[T]) -> T {
        debug_assert_eq!(angles.len(), self.sensors.len());
        let mut covered = vec![false; self.grids];
        let mut count = 0;
        for (k, &theta) in angles.iter().enumerate() {
            for g in self.sensed_by(k, theta) {
                if !covered[g] {
                    covered[g] = true;
                    count += 1;
                }
            }
        }
        fitness_from_count(count, self.grids)
    }
}

/// Objective `M / covered` for the given deviation angles.
pub fn cepw_fitness<T: Scalar>(angles: &[T], sensors: &[Sensor<T>], field: &CoverageField<T>) -> Result<T> {
    CoverageEvaluator::new(sensors, field).fitness(angles)
}

/// Per-grid count of covering sensors, updated one sensor at a time.
#[derive(Debug, Clone)]
pub struct CoverageCounter<'a, T> {
    evaluator: &'a CoverageEvaluator<T>,
    angles: Vec<T>,
    counts: Vec<u32>,
    covered: usize,
}

impl<'a, T: Scalar> CoverageCounter<'a, T> {
    pub fn new(evaluator: &'a CoverageEvaluator<T>, angles: &[T]) -> Result<Self> {
        evaluator.check_len(angles)?;
        let mut counter = Self {
            evaluator,
            angles: angles.to_vec(),
            counts: vec![0; evaluator.grid_count()],
            covered: 0,
        };
        for (k, &theta) in angles.iter().enumerate() {
            counter.add(k, theta);
        }
        Ok(counter)
    }

    fn add(&mut self, k: usize, theta: T) {
        for g in self.evaluator.sensed_by(k, theta) {
            if self.counts[g] == 0 {
                self.covered += 1;
            }
            self.counts[g] += 1;
        }
    }

    fn remove(&mut self, k: usize, theta: T) {
        for g in self.evaluator.sensed_by(k, theta) {
            self.counts[g] -= 1;
            if self.counts[g] == 0 {
                self.covered -= 1;
            }
        }
    }

    /// Re-points sensor `k`, touching only its candidate grids.
    pub fn set_angle(&mut self, k: usize, theta: T) {
        let old = self.angles[k];
        self.remove(k, old);
        self.add(k, theta);
        self.angles[k] = theta;
    }

    pub fn angles(&self) -> &[T] {
        &self.angles
    }

    pub fn covered_count(&self) -> usize {
        self.covered
    }

    pub fn is_covered(&self, grid: usize) -> bool {
        self.counts[grid] > 0
    }

    pub fn rate(&self) -> f64 {
        self.covered as f64 / self.counts.len() as f64
    }
}
