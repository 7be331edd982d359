//! Scalar abstractions.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Exact rational scalar, used to check kernel coefficients without rounding.
pub type Exact = Ratio<i128>;

/// Field arithmetic required by the reconstruction kernels.
///
/// Implemented for `f32`, `f64` and exact rationals.
pub trait Scalar: Copy + Debug + PartialOrd + Num + Neg<Output = Self> + FromPrimitive {
    /// Absolute value.
    fn magnitude(self) -> Self;

    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("integer constant must be representable")
    }

    fn min_of(a: Self, b: Self) -> Self {
        if a < b {
            a
        } else {
            b
        }
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            #[inline(always)]
            fn magnitude(self) -> Self {
                self.abs()
            }
            #[inline(always)]
            fn int(v: i64) -> Self {
                v as $t
            }
        }
    )*};
}
impl_float_scalar!(f32, f64);

macro_rules! impl_ratio_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn magnitude(self) -> Self {
                if self < Ratio::from_integer(0) {
                    -self
                } else {
                    self
                }
            }
        }
    )*};
}
impl_ratio_scalar!(i64, i128);

/// Floating-point scalar used by the solvers.
pub trait Real: Scalar + Float + FloatConst + Display + Sum + Send + Sync + 'static {}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal into `T`.
#[inline(always)]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable")
}
