//! Exact solution of the 1D Riemann problem for an ideal gas (two-rarefaction
//! initial guess, Newton iteration on the pressure function).

use super::state::{Gas, PrimitiveState};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Self-similar solution of a Riemann problem with data `left | right` at `x = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExactRiemann<T> {
    pub gas: Gas<T>,
    pub left: PrimitiveState<T>,
    pub right: PrimitiveState<T>,
    /// Star-region pressure and velocity.
    pub p_star: T,
    pub u_star: T,
}

fn pressure_function<T: Real>(gas: &Gas<T>, p: T, k: &PrimitiveState<T>) -> (T, T) {
    let g = gas.gamma;
    let (one, two) = (T::one(), T::int(2));
    let c = gas.sound_speed(k.rho, k.p);
    if p > k.p {
        let a = two / ((g + one) * k.rho);
        let b = (g - one) / (g + one) * k.p;
        let q = (a / (b + p)).sqrt();
        ((p - k.p) * q, q * (one - (p - k.p) / (two * (b + p))))
    } else {
        let r = p / k.p;
        let e = (g - one) / (two * g);
        (two * c / (g - one) * (r.powf(e) - one), one / (k.rho * c) * r.powf(-(g + one) / (two * g)))
    }
}

impl<T: Real> ExactRiemann<T> {
    pub fn new(gas: Gas<T>, left: PrimitiveState<T>, right: PrimitiveState<T>) -> Result<Self> {
        left.check(|| "exact Riemann left state".into())?;
        right.check(|| "exact Riemann right state".into())?;
        let g = gas.gamma;
        let (one, two) = (T::one(), T::int(2));
        let (cl, cr) = (gas.sound_speed(left.rho, left.p), gas.sound_speed(right.rho, right.p));
        let du = right.u - left.u;
        if two * (cl + cr) / (g - one) <= du {
            return Err(Error::InvalidArgument("Riemann data generate vacuum".into()));
        }
        // two-rarefaction guess
        let e = (g - one) / (two * g);
        let num = cl + cr - (g - one) / two * du;
        let den = cl / left.p.powf(e) + cr / right.p.powf(e);
        let mut p = (num / den).powf(one / e).max(T::epsilon());
        for _ in 0..100 {
            let (fl, dl) = pressure_function(&gas, p, &left);
            let (fr, dr) = pressure_function(&gas, p, &right);
            let next = (p - (fl + fr + du) / (dl + dr)).max(T::epsilon());
            let change = two * (next - p).abs() / (next + p);
            p = next;
            if change < T::epsilon() * T::int(16) {
                break;
            }
        }
        let (fl, _) = pressure_function(&gas, p, &left);
        let (fr, _) = pressure_function(&gas, p, &right);
        let u = (left.u + right.u) / two + (fr - fl) / two;
        Ok(Self {
            gas,
            left,
            right,
            p_star: p,
            u_star: u,
        })
    }

    /// Star-region density next to the wave facing `k`.
    fn star_density(&self, k: &PrimitiveState<T>) -> T {
        let g = self.gas.gamma;
        let one = T::one();
        let r = self.p_star / k.p;
        if self.p_star > k.p {
            let q = (g - one) / (g + one);
            k.rho * (r + q) / (q * r + one)
        } else {
            k.rho * r.powf(one / g)
        }
    }

    /// `(rho*_L, rho*_R)`.
    pub fn star_densities(&self) -> (T, T) {
        (self.star_density(&self.left), self.star_density(&self.right))
    }

    /// State at similarity coordinate `xi = x / t`.
    pub fn sample(&self, xi: T) -> PrimitiveState<T> {
        if xi <= self.u_star {
            self.sample_side(xi, &self.left)
        } else {
            // mirror the right wave into a left wave
            let mirrored = PrimitiveState::new(self.right.rho, -self.right.u, self.right.p);
            let w = Self { u_star: -self.u_star, ..*self }.sample_side(-xi, &mirrored);
            PrimitiveState::new(w.rho, -w.u, w.p)
        }
    }

    fn sample_side(&self, xi: T, k: &PrimitiveState<T>) -> PrimitiveState<T> {
        let g = self.gas.gamma;
        let (one, two) = (T::one(), T::int(2));
        let c = self.gas.sound_speed(k.rho, k.p);
        let rho_star = self.star_density(k);
        if self.p_star > k.p {
            let s = k.u - c * ((g + one) / (two * g) * self.p_star / k.p + (g - one) / (two * g)).sqrt();
            if xi <= s {
                *k
            } else {
                PrimitiveState::new(rho_star, self.u_star, self.p_star)
            }
        } else {
            let head = k.u - c;
            let c_star = c * (self.p_star / k.p).powf((g - one) / (two * g));
            let tail = self.u_star - c_star;
            if xi <= head {
                *k
            } else if xi >= tail {
                PrimitiveState::new(rho_star, self.u_star, self.p_star)
            } else {
                let f = two / (g + one) + (g - one) / ((g + one) * c) * (k.u - xi);
                let rho = k.rho * f.powf(two / (g - one));
                let u = two / (g + one) * (c + (g - one) / two * k.u + xi);
                let p = k.p * f.powf(two * g / (g - one));
                PrimitiveState::new(rho, u, p)
            }
        }
    }
}
