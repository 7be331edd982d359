//! Third-order TVD (Shu–Osher) Runge–Kutta integration.
//!
//! ```text
//! u1      = u + dt L(u)
//! u2      = 3/4 u + 1/4 u1 + 1/4 dt L(u1)
//! u^{n+1} = 1/3 u + 2/3 u2 + 2/3 dt L(u2)
//! ```
//!
//! Stage times are `t`, `t + dt` and `t + dt/2`. Unrolled, `u^{n+1} = u + dt
//! (L0/6 + L1/6 + 2 L2/3)`, so any quantity that is linear in the rates (for
//! instance boundary fluxes feeding a conservation budget) accumulates with
//! [`STAGE_WEIGHTS`].

use crate::scalar::Scalar;

/// Effective weight of each stage rate in the completed step, as `(num, den)`.
pub const STAGE_WEIGHTS: [(i64, i64); 3] = [(1, 6), (1, 6), (2, 3)];

/// Reusable buffers for [`Rk3::step`].
#[derive(Debug, Clone)]
pub struct Rk3<T> {
    start: Vec<T>,
    rate: Vec<T>,
}

impl<T: Scalar> Default for Rk3<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Rk3<T> {
    pub fn new() -> Self {
        Self {
            start: Vec::new(),
            rate: Vec::new(),
        }
    }

    /// Advances `u` by `dt`.
    ///
    /// `rhs(stage, stage_time, state, rate)` receives the state mutably so it
    /// can refresh ghost points before writing `L(state)` into `rate`.
    pub fn step<E, F>(&mut self, u: &mut [T], t: T, dt: T, mut rhs: F) -> Result<(), E>
    where
        F: FnMut(usize, T, &mut [T], &mut [T]) -> Result<(), E>,
    {
        let n = u.len();
        self.start.clear();
        self.start.extend_from_slice(u);
        self.rate.clear();
        self.rate.resize(n, T::zero());

        let i = |v: i64| T::int(v);
        let (q1, q3, t1, t2) = (i(1) / i(4), i(3) / i(4), i(1) / i(3), i(2) / i(3));

        rhs(0, t, u, &mut self.rate)?;
        for k in 0..n {
            u[k] = self.start[k] + dt * self.rate[k];
        }

        rhs(1, t + dt, u, &mut self.rate)?;
        for k in 0..n {
            u[k] = q3 * self.start[k] + q1 * u[k] + q1 * dt * self.rate[k];
        }

        rhs(2, t + dt / i(2), u, &mut self.rate)?;
        for k in 0..n {
            u[k] = t1 * self.start[k] + t2 * u[k] + t2 * dt * self.rate[k];
        }
        Ok(())
    }
}

/// One TVD-RK3 step of `du/dt = rhs(u)` without ghost handling.
pub fn rk3_step<T: Scalar, E>(
    state: &[T],
    mut rhs: impl FnMut(&[T], &mut [T]) -> Result<(), E>,
    dt: T,
) -> Result<Vec<T>, E> {
    let mut u = state.to_vec();
    Rk3::new().step(&mut u, T::zero(), dt, |_, _, s, r| rhs(s, r))?;
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use std::convert::Infallible;

    #[test]
    fn zero_rate_is_identity() {
        let u = vec![1.0, -2.0, 3.5];
        let out = rk3_step(&u, |_, r: &mut [f64]| {
            r.fill(0.0);
            Ok::<_, Infallible>(())
        }, 0.1)
        .unwrap();
        for (a, b) in out.iter().zip(&u) {
            assert!((a - b).abs() <= 2.0 * f64::EPSILON * b.abs());
        }
        let exact = rk3_step(&[Exact::new(7, 2)], |_, r| {
            r[0] = Exact::new(0, 1);
            Ok::<_, Infallible>(())
        }, Exact::new(1, 10))
        .unwrap();
        assert_eq!(exact[0], Exact::new(7, 2));
    }

    #[test]
    fn linear_ode_matches_stability_polynomial_exactly() {
        let lambda = Exact::new(-7, 3);
        let dt = Exact::new(1, 5);
        let z = lambda * dt;
        let out = rk3_step(
            &[Exact::new(1, 1)],
            |s, r| {
                r[0] = lambda * s[0];
                Ok::<_, Infallible>(())
            },
            dt,
        )
        .unwrap();
        let expected = Exact::new(1, 1) + z + z * z / Exact::new(2, 1) + z * z * z / Exact::new(6, 1);
        assert_eq!(out[0], expected);
    }

    #[test]
    fn stage_times() {
        let mut seen = Vec::new();
        Rk3::new()
            .step(&mut [0.0f64], 1.0, 0.5, |k, t, _, r| {
                seen.push((k, t));
                r[0] = 0.0;
                Ok::<_, Infallible>(())
            })
            .unwrap();
        assert_eq!(seen, vec![(0, 1.0), (1, 1.5), (2, 1.25)]);
    }
}
