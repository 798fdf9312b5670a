use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::{wrap_into, Scalar};

/// How out-of-box coordinates are brought back after a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryPolicy {
    /// Clamp each coordinate into `[lower, upper]`.
    Clamp,
    /// Reduce each coordinate modulo the interval width into `[lower, upper)`.
    /// Use for circular variables such as angles.
    Wrap,
}

/// Box-bounded continuous search space.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace<T> {
    lower: Vec<T>,
    upper: Vec<T>,
    policy: BoundaryPolicy,
}

impl<T: Scalar> SearchSpace<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>, policy: BoundaryPolicy) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be positive".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::LengthMismatch {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidSpace(format!(
                    "bounds of dimension {j} must satisfy lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper, policy })
    }

    /// Same `[lo, hi]` interval in every one of `dim` dimensions.
    pub fn uniform(dim: usize, lo: T, hi: T, policy: BoundaryPolicy) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim], policy)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn policy(&self) -> BoundaryPolicy {
        self.policy
    }

    /// Applies the boundary policy in place.
    pub fn repair(&self, x: &mut [T]) {
        debug_assert_eq!(x.len(), self.dim());
        for ((v, &lo), &hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = match self.policy {
                BoundaryPolicy::Clamp => {
                    if v.is_nan() {
                        lo
                    } else {
                        v.max(lo).min(hi)
                    }
                }
                BoundaryPolicy::Wrap => {
                    if !v.is_finite() {
                        lo
                    } else {
                        lo + wrap_into(*v - lo, hi - lo)
                    }
                }
            };
        }
    }

    /// Expresses `x` in a chart centered on `reference`: unchanged for
    /// clamped spaces; for wrapped spaces each coordinate becomes
    /// `reference + shortest signed offset`.
    pub fn unwrap_near(&self, x: &[T], reference: &[T]) -> Vec<T> {
        match self.policy {
            BoundaryPolicy::Clamp => x.to_vec(),
            BoundaryPolicy::Wrap => x
                .iter()
                .zip(reference)
                .zip(self.lower.iter().zip(&self.upper))
                .map(|((&v, &r), (&lo, &hi))| {
                    let w = hi - lo;
                    let mut d = wrap_into(v - r, w);
                    if d > w / T::lit(2.0) {
                        d -= w;
                    }
                    r + d
                })
                .collect(),
        }
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((&v, &lo), &hi)| match self.policy {
                    BoundaryPolicy::Clamp => lo <= v && v <= hi,
                    BoundaryPolicy::Wrap => lo <= v && v < hi,
                })
    }

    /// One uniform draw per coordinate, in coordinate order.
    pub fn sample(&self, rng: &mut RandomSource) -> Vec<T> {
        let mut x: Vec<T> = self
            .lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| lo + (hi - lo) * T::lit(rng.uniform()))
            .collect();
        // f32 narrowing can round a draw up onto the open upper end
        self.repair(&mut x);
        x
    }
}
