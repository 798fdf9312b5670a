//! Closed-form expectations for uniformly random deployments.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn sector_fraction<T: Scalar>(radius: T, view_angle: T, area: T) -> Result<T> {
    if !(radius > T::zero() && view_angle > T::zero() && area > T::zero()) {
        return Err(Error::Domain("radius, view angle and area must be positive".into()));
    }
    let frac = view_angle * radius * radius / (T::lit(2.0) * area);
    if frac > T::one() {
        return Err(Error::Domain(format!(
            "sector area exceeds the monitoring area (αR²/2H = {frac})"
        )));
    }
    Ok(frac)
}

/// Expected coverage of `nodes` uniformly placed and oriented sensors:
/// `1 - (1 - αR²/2H)^D`. Ignores sector area lost past the field border.
pub fn expected_initial_coverage<T: Scalar>(nodes: usize, radius: T, view_angle: T, area: T) -> Result<T> {
    let frac = sector_fraction(radius, view_angle, area)?;
    Ok(T::one() - (T::one() - frac).powi(nodes as i32))
}

/// Smallest node count whose expected coverage reaches `target`:
/// `ceil(ln(1 - P) / (ln(2H - αR²) - ln 2H))`, at least one.
pub fn required_nodes<T: Scalar>(target: T, radius: T, view_angle: T, area: T) -> Result<usize> {
    if !(target > T::zero() && target < T::one()) {
        return Err(Error::Domain(format!(
            "target coverage must lie in (0, 1), got {target}"
        )));
    }
    let frac = sector_fraction(radius, view_angle, area)?;
    let ratio = (T::one() - target).ln() / (-frac).ln_1p();
    // relative slack so a ratio that is an integer up to rounding is not bumped
    let nodes = (ratio - ratio.abs() * T::lit(1e-10)).ceil();
    Ok(nodes.to_usize().unwrap_or(usize::MAX).max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn no_nodes_no_coverage() {
        assert_eq!(expected_initial_coverage(0, 60.0, FRAC_PI_2, 250_000.0).unwrap(), 0.0);
    }

    #[test]
    fn saturated_sector() {
        // αR² = 2H
        let area = FRAC_PI_2 * 100.0 / 2.0;
        assert!((expected_initial_coverage(1, 10.0, FRAC_PI_2, area).unwrap() - 1.0).abs() < 1e-12);
        assert!(expected_initial_coverage(1, 10.1, FRAC_PI_2, area).is_err());
    }

    #[test]
    fn hundred_ten_nodes() {
        let p = expected_initial_coverage(110, 60.0, FRAC_PI_2, 250_000.0).unwrap();
        assert!((p - 0.713_827_139_080_140_5).abs() < 1e-12);
    }

    #[test]
    fn node_requirement() {
        assert_eq!(required_nodes(0.8752, 60.0, FRAC_PI_2, 250_000.0).unwrap(), 183);
        assert_eq!(required_nodes(1e-12, 60.0, FRAC_PI_2, 250_000.0).unwrap(), 1);
        let big = required_nodes(0.9999999, 60.0, FRAC_PI_2, 250_000.0).unwrap();
        assert!(big > 1000 && big < 2000);
        assert!(required_nodes(1.0, 60.0, FRAC_PI_2, 250_000.0).is_err());
        assert!(required_nodes(0.0, 60.0, FRAC_PI_2, 250_000.0).is_err());
    }
}
