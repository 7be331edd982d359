use crate::error::{Error, Result};
use crate::scalar::Real;

/// Conserved variables: `[rho, rho u, E]` in 1D, `[rho, rho u, rho v, E]` in 2D.
pub type ConservedState<T, const N: usize> = [T; N];

/// Flux direction of a 2D sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    X,
    Y,
}

/// Ideal gas with constant ratio of specific heats.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gas<T> {
    pub gamma: T,
}

/// Primitive variables. `v` is zero and ignored in 1D.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimitiveState<T> {
    pub rho: T,
    pub u: T,
    pub v: T,
    pub p: T,
}

impl<T: Real> PrimitiveState<T> {
    pub fn new(rho: T, u: T, p: T) -> Self {
        Self { rho, u, v: T::zero(), p }
    }

    pub fn new_2d(rho: T, u: T, v: T, p: T) -> Self {
        Self { rho, u, v, p }
    }

    pub fn is_physical(&self) -> bool {
        self.rho > T::zero() && self.p > T::zero() && self.u.is_finite() && self.v.is_finite()
    }

    pub(crate) fn check(self, location: impl FnOnce() -> String) -> Result<Self> {
        if self.is_physical() {
            Ok(self)
        } else {
            Err(Error::Positivity {
                location: location(),
                rho: self.rho.to_f64().unwrap_or(f64::NAN),
                p: self.p.to_f64().unwrap_or(f64::NAN),
            })
        }
    }
}

impl<T: Real> Gas<T> {
    pub fn new(gamma: T) -> Self {
        Self { gamma }
    }

    /// `gamma = 1.4`.
    pub fn air() -> Self {
        Self::new(T::int(7) / T::int(5))
    }

    pub fn sound_speed(&self, rho: T, p: T) -> T {
        (self.gamma * p / rho).sqrt()
    }

    /// Specific total enthalpy `H = (E + p) / rho`.
    pub fn enthalpy(&self, w: &PrimitiveState<T>) -> T {
        let half = T::one() / T::int(2);
        self.gamma * w.p / ((self.gamma - T::one()) * w.rho) + half * (w.u * w.u + w.v * w.v)
    }

    /// Total energy per unit volume, `rho e` with `e = p/(rho(gamma-1)) + |vel|^2/2`.
    pub fn total_energy(&self, w: &PrimitiveState<T>) -> T {
        let half = T::one() / T::int(2);
        w.p / (self.gamma - T::one()) + half * w.rho * (w.u * w.u + w.v * w.v)
    }

    /// Conversion without positivity checks; `N` must be 3 or 4.
    pub fn conserved_unchecked<const N: usize>(&self, w: &PrimitiveState<T>) -> ConservedState<T, N> {
        let mut s = [T::zero(); N];
        s[0] = w.rho;
        s[1] = w.rho * w.u;
        if N == 4 {
            s[2] = w.rho * w.v;
        }
        s[N - 1] = self.total_energy(&if N == 4 { *w } else { PrimitiveState::new(w.rho, w.u, w.p) });
        s
    }

    pub fn conserved<const N: usize>(&self, w: &PrimitiveState<T>) -> Result<ConservedState<T, N>> {
        assert!(N == 3 || N == 4, "Euler states have 3 or 4 components");
        let w = w.check(|| "primitive-to-conserved conversion".into())?;
        Ok(self.conserved_unchecked(&w))
    }

    pub fn primitive_unchecked<const N: usize>(&self, s: &ConservedState<T, N>) -> PrimitiveState<T> {
        let half = T::one() / T::int(2);
        let rho = s[0];
        let u = s[1] / rho;
        let v = if N == 4 { s[2] / rho } else { T::zero() };
        let p = (self.gamma - T::one()) * (s[N - 1] - half * rho * (u * u + v * v));
        PrimitiveState { rho, u, v, p }
    }

    /// Primitive variables, failing with `location` if `rho` or `p` is not positive.
    pub fn primitive<const N: usize>(
        &self,
        s: &ConservedState<T, N>,
        location: impl FnOnce() -> String,
    ) -> Result<PrimitiveState<T>> {
        self.primitive_unchecked(s).check(location)
    }
}

/// `F(U)` for a positive primitive state, written in x-orientation.
#[inline]
pub(crate) fn flux_x<T: Real, const N: usize>(
    gas: &Gas<T>,
    s: &ConservedState<T, N>,
    w: &PrimitiveState<T>,
) -> ConservedState<T, N> {
    let _ = gas;
    let mut f = [T::zero(); N];
    f[0] = s[1];
    f[1] = s[1] * w.u + w.p;
    if N == 4 {
        f[2] = s[2] * w.u;
    }
    f[N - 1] = (s[N - 1] + w.p) * w.u;
    f
}

/// Swaps the two momentum components, turning a y-sweep into an x-sweep.
#[inline]
pub(crate) fn swap_momentum<T: Copy, const N: usize>(s: &mut [T; N]) {
    if N == 4 {
        s.swap(1, 2);
    }
}

/// Exact Euler flux of `s` in `direction`.
pub fn euler_flux<T: Real, const N: usize>(
    gas: &Gas<T>,
    s: &ConservedState<T, N>,
    direction: Direction,
) -> Result<ConservedState<T, N>> {
    if direction == Direction::Y && N != 4 {
        return Err(Error::InvalidArgument("y-flux of a 1D state".into()));
    }
    let mut s = *s;
    if direction == Direction::Y {
        swap_momentum(&mut s);
    }
    let w = gas.primitive(&s, || "flux evaluation".into())?;
    let mut f = flux_x(gas, &s, &w);
    if direction == Direction::Y {
        swap_momentum(&mut f);
    }
    Ok(f)
}
