//! Floating-point scalar abstraction shared by the optimizer, the benchmark
//! functions and the coverage geometry.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar the library computes with: `f32` or `f64`.
///
/// Random draws are always produced in `f64` and narrowed with [`Scalar::lit`],
/// so both precisions consume the same draw sequence for a given seed.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant or draw into this scalar type.
    #[inline]
    fn lit(value: f64) -> Self {
        // never fails for float targets; out-of-range values saturate to inf
        Self::from_f64(value).unwrap_or_else(Self::nan)
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).unwrap_or_else(Self::infinity)
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Relative slack used by geometric predicates that must admit exact
    /// boundary points despite rounding in `sqrt`/`cos`.
    #[inline]
    fn boundary_tol() -> Self {
        Self::epsilon() * Self::lit(64.0)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Reduces `x` into `[0, period)`.
///
/// `rem_euclid` can round up to exactly `period` for tiny negative inputs; that
/// case is folded back to zero.
#[inline]
pub(crate) fn wrap_into<T: Scalar>(x: T, period: T) -> T {
    let r = x - period * (x / period).floor();
    if r >= period || r < T::zero() {
        T::zero()
    } else {
        r
    }
}
