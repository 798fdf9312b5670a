use crate::error::{Error, Result};
use crate::scalar::{wrap_into, Scalar};

/// Directional sensing node: a circular sector of radius `radius` and full
/// apex angle `view_angle`, bisected by the deviation angle from the x-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sensor<T> {
    pub x: T,
    pub y: T,
    pub radius: T,
    pub view_angle: T,
    deviation: T,
}

impl<T: Scalar> Sensor<T> {
    /// Radius must be positive and the view angle in `(0, 2π]`; the deviation
    /// is reduced modulo 2π.
    pub fn new(x: T, y: T, radius: T, view_angle: T, deviation: T) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::InvalidSensor("position must be finite".into()));
        }
        if !(radius > T::zero() && radius.is_finite()) {
            return Err(Error::InvalidSensor(format!("radius must be positive, got {radius}")));
        }
        if !(view_angle > T::zero() && view_angle <= T::TAU()) {
            return Err(Error::InvalidSensor(format!(
                "view angle must lie in (0, 2π], got {view_angle}"
            )));
        }
        if !deviation.is_finite() {
            return Err(Error::InvalidSensor("deviation must be finite".into()));
        }
        Ok(Self {
            x,
            y,
            radius,
            view_angle,
            deviation: canonical_angle(deviation),
        })
    }

    /// Deviation angle in `[0, 2π)`.
    pub fn deviation(&self) -> T {
        self.deviation
    }

    pub fn with_deviation(mut self, deviation: T) -> Self {
        self.deviation = canonical_angle(deviation);
        self
    }

    /// Unit sensing direction.
    pub fn direction(&self) -> (T, T) {
        (self.deviation.cos(), self.deviation.sin())
    }

    pub(crate) fn cos_half_angle(&self) -> T {
        (self.view_angle / T::lit(2.0)).cos()
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn canonical_angle<T: Scalar>(theta: T) -> T {
    wrap_into(theta, T::TAU())
}

/// Offset `(dx, dy, dist)` from the sensor to a point.
#[inline]
pub(crate) fn offset<T: Scalar>(sx: T, sy: T, px: T, py: T) -> (T, T, T) {
    let dx = px - sx;
    let dy = py - sy;
    (dx, dy, (dx * dx + dy * dy).sqrt())
}

/// Sector membership from a precomputed offset and sensing direction.
///
/// Both the disc test and the cone test admit their boundary; the cone test
/// allows a few ulps of slack so points exactly on an edge ray count.
#[inline]
pub(crate) fn sector_contains<T: Scalar>(dx: T, dy: T, dist: T, cos_t: T, sin_t: T, cos_half: T, radius: T) -> bool {
    if dist > radius {
        return false;
    }
    if dist == T::zero() {
        return true;
    }
    dx * cos_t + dy * sin_t >= dist * cos_half - dist * T::boundary_tol()
}

/// Whether `point` lies in the sensing sector.
pub fn is_sensed<T: Scalar>(sensor: &Sensor<T>, point: (T, T)) -> bool {
    let (dx, dy, dist) = offset(sensor.x, sensor.y, point.0, point.1);
    let (c, s) = sensor.direction();
    sector_contains(dx, dy, dist, c, s, sensor.cos_half_angle(), sensor.radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn forward() -> Sensor<f64> {
        Sensor::new(0.0, 0.0, 60.0, FRAC_PI_2, 0.0).unwrap()
    }

    #[test]
    fn sensing_predicate_cases() {
        let s = forward();
        assert!(is_sensed(&s, (30.0, 0.0)));
        assert!(!is_sensed(&s, (0.0, 30.0)));
        assert!(is_sensed(&s, (30.0, 30.0)), "edge ray is inside");
        assert!(is_sensed(&s, (30.0, -30.0)));
        assert!(!is_sensed(&s, (61.0, 0.0)));
        assert!(is_sensed(&s, (60.0, 0.0)), "rim is inside");
        assert!(is_sensed(&s, (0.0, 0.0)), "apex is inside");
    }

    #[test]
    fn single_precision_agrees() {
        let s = Sensor::<f32>::new(0.0, 0.0, 60.0, std::f32::consts::FRAC_PI_2, 0.0).unwrap();
        assert!(is_sensed(&s, (30.0, 30.0)));
        assert!(!is_sensed(&s, (0.0, 30.0)));
    }

    #[test]
    fn omnidirectional_is_a_disc() {
        let s = Sensor::new(0.0, 0.0, 10.0, TAU, 1.0).unwrap();
        assert!(is_sensed(&s, (-10.0, 0.0)));
        assert!(is_sensed(&s, (0.0, -9.0)));
        assert!(!is_sensed(&s, (-10.1, 0.0)));
    }

    #[test]
    fn deviation_is_canonical() {
        let s = Sensor::new(0.0, 0.0, 1.0, 1.0, -FRAC_PI_2).unwrap();
        assert!((s.deviation() - 1.5 * PI).abs() < 1e-12);
        assert_eq!(s.with_deviation(TAU).deviation(), 0.0);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Sensor::new(0.0, 0.0, 0.0, 1.0, 0.0).is_err());
        assert!(Sensor::new(0.0, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(Sensor::new(0.0, 0.0, 1.0, 7.0, 0.0).is_err());
        assert!(Sensor::new(f64::NAN, 0.0, 1.0, 1.0, 0.0).is_err());
    }
}
