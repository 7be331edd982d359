use crate::scalar::{lit, Real};

/// Jiang–Shu composite profile on `[-1, 1]`: Gaussians, a square wave, a sharp
/// triangle and a half ellipse, left to right.
pub fn composite_wave_initial<T: Real>(x: T) -> T {
    let (a, z, delta, alpha) = (lit::<T>(0.5), lit::<T>(-0.7), lit::<T>(0.005), lit::<T>(10.0));
    let beta = T::LN_2() / (lit::<T>(36.0) * delta * delta);
    let g = |c: T| (-beta * (x - c) * (x - c)).exp();
    let f = |c: T| (T::one() - alpha * alpha * (x - c) * (x - c)).max(T::zero()).sqrt();
    let six = lit::<T>(6.0);
    let four = lit::<T>(4.0);
    let within = |lo: f64, hi: f64| x >= lit(lo) && x <= lit(hi);
    if within(-0.8, -0.6) {
        (g(z - delta) + four * g(z) + g(z + delta)) / six
    } else if within(-0.4, -0.2) {
        T::one()
    } else if within(0.0, 0.2) {
        T::one() - lit::<T>(10.0) * (x - lit(0.1)).abs()
    } else if within(0.4, 0.6) {
        (f(a - delta) + four * f(a) + f(a + delta)) / six
    } else {
        T::zero()
    }
}

/// Average (`l1`) and maximum (`linf`) absolute error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorNorms<T> {
    pub l1: T,
    pub linf: T,
}

/// Error norms over equal-length point sets.
pub fn error_norms<T: Real>(computed: &[T], exact: &[T]) -> ErrorNorms<T> {
    assert_eq!(computed.len(), exact.len(), "error_norms: length mismatch");
    assert!(!computed.is_empty(), "error_norms: empty input");
    let mut sum = T::zero();
    let mut max = T::zero();
    for (c, e) in computed.iter().zip(exact) {
        let d = (*c - *e).abs();
        sum = sum + d;
        max = max.max(d);
    }
    ErrorNorms {
        l1: sum / T::from_usize(computed.len()).unwrap(),
        linf: max,
    }
}
