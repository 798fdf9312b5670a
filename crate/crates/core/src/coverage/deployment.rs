use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::field::CoverageField;
use super::sensor::{canonical_angle, Sensor};

/// One deviation angle per sensor, each in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeploymentScheme<T>(Vec<T>);

impl<T: Scalar> DeploymentScheme<T> {
    pub fn new(angles: Vec<T>) -> Self {
        Self(angles.into_iter().map(canonical_angle).collect())
    }

    pub fn of(sensors: &[Sensor<T>]) -> Self {
        Self(sensors.iter().map(|s| s.deviation()).collect())
    }

    pub fn angles(&self) -> &[T] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    /// Sensors re-pointed according to this scheme; positions are untouched.
    pub fn apply(&self, sensors: &[Sensor<T>]) -> Result<Vec<Sensor<T>>> {
        if sensors.len() != self.0.len() {
            return Err(Error::LengthMismatch {
                expected: sensors.len(),
                actual: self.0.len(),
            });
        }
        Ok(sensors.iter().zip(&self.0).map(|(s, &a)| s.with_deviation(a)).collect())
    }
}

/// Uniform positions over the field and uniform deviations over `[0, 2π)`.
/// Draws per sensor: x, y, deviation.
pub fn random_deployment<T: Scalar>(
    field: &CoverageField<T>,
    nodes: usize,
    radius: T,
    view_angle: T,
    rng: &mut RandomSource,
) -> Result<Vec<Sensor<T>>> {
    if nodes == 0 {
        return Err(Error::Domain("deployment needs at least one node".into()));
    }
    let (x0, y0) = field.origin();
    (0..nodes)
        .map(|_| {
            let x = x0 + field.length() * T::lit(rng.uniform());
            let y = y0 + field.width() * T::lit(rng.uniform());
            let theta = T::TAU() * T::lit(rng.uniform());
            Sensor::new(x, y, radius, view_angle, theta)
        })
        .collect()
}
