//! Scalar abstraction shared by every geometric routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the geometry kernel is generic over.
///
/// `rel_eps` is the relative tolerance used for convexity, merge and
/// feasibility decisions; it is scaled by the polygon diameter (or its
/// square) at every call site so decisions stay scale invariant.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative geometric tolerance.
    fn rel_eps() -> Self;

    /// Converts an `f64` literal. Panics only if the target type cannot
    /// represent finite `f64` values at all, which no supported type does.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    #[inline]
    fn rel_eps() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    #[inline]
    fn rel_eps() -> Self {
        2e-6
    }
}

/// `3 + sqrt(pi * sqrt(3))`: the width-Cheeger product of any equilateral triangle.
pub fn equilateral_wh<T: Scalar>() -> T {
    let three = T::lit(3.0);
    three + (T::PI() * three.sqrt()).sqrt()
}

/// `3^(1/4) * pi^(1/2)`, the deficit of the degenerate rectangle limit above 1.
pub fn pal_root<T: Scalar>() -> T {
    (T::PI() * T::lit(3.0).sqrt()).sqrt()
}
