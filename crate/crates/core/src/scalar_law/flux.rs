use crate::scalar::{lit, Real};

/// Physical flux `f(u)` and its derivative.
pub trait FluxFunction<T>: Sync {
    fn flux(&self, u: T) -> T;
    fn speed(&self, u: T) -> T;
}

/// `f(u) = c u`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearAdvection<T> {
    pub c: T,
}

impl<T: Real> FluxFunction<T> for LinearAdvection<T> {
    #[inline(always)]
    fn flux(&self, u: T) -> T {
        self.c * u
    }
    #[inline(always)]
    fn speed(&self, _u: T) -> T {
        self.c
    }
}

/// Inviscid Burgers flux `f(u) = u^2 / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Burgers;

impl<T: Real> FluxFunction<T> for Burgers {
    #[inline(always)]
    fn flux(&self, u: T) -> T {
        lit::<T>(0.5) * u * u
    }
    #[inline(always)]
    fn speed(&self, u: T) -> T {
        u
    }
}

/// Global Lax–Friedrichs splitting `f^± = (f ± alpha u) / 2`.
#[inline(always)]
pub fn lf_split<T: Real>(f_value: T, u: T, alpha: T) -> (T, T) {
    let half = lit::<T>(0.5);
    let au = alpha * u;
    (half * (f_value + au), half * (f_value - au))
}
