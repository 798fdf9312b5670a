use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::sensor::{offset, Sensor};

/// Rectangular monitoring area divided into square grids of side `interval`.
///
/// Grid `(p, q)` has index `q * columns + p`. Its centroid is the geometric
/// center of the cell, so cells clipped by the far edges keep their centroid
/// inside the rectangle.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageField<T> {
    origin: (T, T),
    length: T,
    width: T,
    interval: T,
    columns: usize,
    rows: usize,
    centroids: Vec<(T, T)>,
}

impl<T: Scalar> CoverageField<T> {
    pub fn new(length: T, width: T, interval: T) -> Result<Self> {
        Self::with_origin((T::zero(), T::zero()), length, width, interval)
    }

    /// Field whose lower-left corner sits at `origin`.
    pub fn with_origin(origin: (T, T), length: T, width: T, interval: T) -> Result<Self> {
        for (name, v) in [("length", length), ("width", width), ("interval", interval)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::Domain(format!("field {name} must be positive, got {v}")));
            }
        }
        let columns = cells(length, interval);
        let rows = cells(width, interval);
        let half = T::lit(0.5);
        let axis = |n: usize, extent: T, start: T| -> Vec<T> {
            (0..n)
                .map(|p| {
                    let lo = T::from_count(p) * interval;
                    let hi = T::from_count(p + 1) * interval;
                    let c = if hi <= extent {
                        (T::from_count(p) + half) * interval
                    } else {
                        (lo + extent) * half
                    };
                    start + c
                })
                .collect()
        };
        let xs = axis(columns, length, origin.0);
        let ys = axis(rows, width, origin.1);
        let mut centroids = Vec::with_capacity(columns * rows);
        for &y in &ys {
            for &x in &xs {
                centroids.push((x, y));
            }
        }
        Ok(Self {
            origin,
            length,
            width,
            interval,
            columns,
            rows,
            centroids,
        })
    }

    /// Number of grids (M).
    pub fn grid_count(&self) -> usize {
        self.centroids.len()
    }

    pub fn area(&self) -> T {
        self.length * self.width
    }

    pub fn length(&self) -> T {
        self.length
    }

    pub fn width(&self) -> T {
        self.width
    }

    pub fn interval(&self) -> T {
        self.interval
    }

    pub fn origin(&self) -> (T, T) {
        self.origin
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn centroids(&self) -> &[(T, T)] {
        &self.centroids
    }

    pub fn contains(&self, x: T, y: T) -> bool {
        x >= self.origin.0 && x <= self.origin.0 + self.length && y >= self.origin.1 && y <= self.origin.1 + self.width
    }

    /// Grids whose centroid lies within the sensor radius, in index order.
    ///
    /// Only the bounding box of the sensing disc is scanned. The result does
    /// not depend on the deviation angle.
    pub fn candidate_grids(&self, sensor: &Sensor<T>) -> Vec<usize> {
        self.candidates(sensor).into_iter().map(|c| c.grid as usize).collect()
    }

    pub(crate) fn candidates(&self, sensor: &Sensor<T>) -> Vec<Candidate<T>> {
        let (pmin, pmax) = index_span(sensor.x - self.origin.0, sensor.radius, self.interval, self.columns);
        let (qmin, qmax) = index_span(sensor.y - self.origin.1, sensor.radius, self.interval, self.rows);
        let mut out = Vec::new();
        if pmin > pmax || qmin > qmax {
            return out;
        }
        for q in qmin..=qmax {
            for p in pmin..=pmax {
                let grid = q * self.columns + p;
                let (cx, cy) = self.centroids[grid];
                let (dx, dy, dist) = offset(sensor.x, sensor.y, cx, cy);
                if dist <= sensor.radius {
                    out.push(Candidate {
                        grid: grid as u32,
                        dx,
                        dy,
                        dist,
                    });
                }
            }
        }
        out
    }
}

/// A grid centroid within sensing range, with its offset from the sensor.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Candidate<T> {
    pub grid: u32,
    pub dx: T,
    pub dy: T,
    pub dist: T,
}

fn cells<T: Scalar>(extent: T, interval: T) -> usize {
    // slack keeps exact multiples such as 0.3 / 0.1 from gaining a sliver cell
    let n = (extent / interval - T::lit(1e-9)).ceil();
    n.to_usize().unwrap_or(1).max(1)
}

/// Inclusive cell-index range that can hold centroids within `radius` of
/// coordinate `c` (relative to the field origin). One cell of margin on each side.
fn index_span<T: Scalar>(c: T, radius: T, interval: T, n: usize) -> (usize, usize) {
    let lo = ((c - radius) / interval).floor() - T::one();
    let hi = ((c + radius) / interval).ceil() + T::one();
    let last = T::from_count(n - 1);
    if hi < T::zero() || lo > last {
        return (1, 0);
    }
    let lo = lo.max(T::zero()).to_usize().unwrap_or(0);
    let hi = hi.min(last).to_usize().unwrap_or(n - 1);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts_and_centroids() {
        let f = CoverageField::new(500.0, 500.0, 5.0).unwrap();
        assert_eq!(f.grid_count(), 10_000);
        assert_eq!(f.centroids()[0], (2.5, 2.5));
        assert_eq!(f.centroids()[101], (7.5, 7.5));
        assert_eq!(f.area(), 250_000.0);
    }

    #[test]
    fn clipped_cells_keep_geometric_centers() {
        let f = CoverageField::new(10.0, 4.0, 3.0).unwrap();
        assert_eq!((f.columns(), f.rows()), (4, 2));
        let xs: Vec<f64> = f.centroids()[..4].iter().map(|c| c.0).collect();
        assert_eq!(xs, vec![1.5, 4.5, 7.5, 9.5]);
        assert_eq!(f.centroids()[4].1, 3.5);
        assert!(f.centroids().iter().all(|&(x, y)| f.contains(x, y)));
    }

    #[test]
    fn exact_multiples_do_not_grow() {
        let f = CoverageField::new(0.3, 0.3, 0.1).unwrap();
        assert_eq!(f.grid_count(), 9);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(CoverageField::new(10.0, 10.0, 0.0).is_err());
        assert!(CoverageField::new(-1.0, 10.0, 1.0).is_err());
    }

    #[test]
    fn tiny_radius_at_centroid_has_one_candidate() {
        let f = CoverageField::new(50.0, 50.0, 5.0).unwrap();
        let s = Sensor::new(12.5, 27.5, 2.0, 1.0, 0.3).unwrap();
        assert_eq!(f.candidate_grids(&s), vec![5 * 10 + 2]);
    }

    #[test]
    fn candidates_match_brute_force_distance_filter() {
        let f = CoverageField::new(73.0, 41.0, 3.0).unwrap();
        for &(x, y, r) in &[
            (0.0, 0.0, 10.0),
            (73.0, 41.0, 25.0),
            (30.1, 20.7, 7.3),
            (5.0, 40.0, 100.0),
        ] {
            let s = Sensor::new(x, y, r, 1.0, 0.0).unwrap();
            let brute: Vec<usize> = f
                .centroids()
                .iter()
                .enumerate()
                .filter(|(_, &(cx, cy))| offset(x, y, cx, cy).2 <= r)
                .map(|(j, _)| j)
                .collect();
            assert_eq!(f.candidate_grids(&s), brute);
        }
    }
}
