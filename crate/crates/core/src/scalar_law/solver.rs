use super::flux::{lf_split, FluxFunction};
use super::grid::{fill_line_ghosts, ScalarBoundary, ScalarGrid};
use crate::error::{Error, Result};
use crate::recon::{FluxWindow, Reconstructor};
use crate::scalar::Real;
use crate::time::Rk3;
use crate::GHOST;

/// Time-step selection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TimeStep<T> {
    /// `dt = cfl * dx / alpha`, with alpha refreshed once per step.
    Cfl(T),
    /// Constant `dt`; the final step is shortened to land on the end time.
    Fixed(T),
}

#[derive(Debug, Clone)]
struct Scratch<T> {
    plus: Vec<T>,
    minus: Vec<T>,
    hat: Vec<T>,
}

impl<T> Default for Scratch<T> {
    fn default() -> Self {
        Self {
            plus: Vec::new(),
            minus: Vec::new(),
            hat: Vec::new(),
        }
    }
}

/// Global `max |f'(u)|` over every stored point.
fn max_speed<T: Real, F: FluxFunction<T>>(values: &[T], flux: &F) -> T {
    values.iter().fold(T::zero(), |m, &u| m.max(flux.speed(u).abs()))
}

/// Writes `-(\hat f_{j+1/2} - \hat f_{j-1/2}) / dx` for every unknown; ghost
/// rates are zero. `values` must have its ghosts filled.
fn rates_into<T: Real, F: FluxFunction<T>>(
    values: &[T],
    dx: T,
    recon: &Reconstructor<T>,
    flux: &F,
    alpha: T,
    scratch: &mut Scratch<T>,
    rate: &mut [T],
) -> Result<()> {
    let len = values.len();
    let n = len - 2 * GHOST;
    scratch.plus.resize(len, T::zero());
    scratch.minus.resize(len, T::zero());
    for (k, &u) in values.iter().enumerate() {
        let (p, m) = lf_split(flux.flux(u), u, alpha);
        scratch.plus[k] = p;
        scratch.minus[k] = m;
    }
    scratch.hat.resize(n + 1, T::zero());
    for k in 0..=n {
        // interface between stored points i and i+1
        let i = GHOST + k - 1;
        let fp = recon.plus(&FluxWindow::from_slice(&scratch.plus[i - 4..]));
        let fm = recon.minus(&FluxWindow::from_slice(&scratch.minus[i - 3..]));
        scratch.hat[k] = fp + fm;
    }
    rate[..GHOST].fill(T::zero());
    rate[GHOST + n..].fill(T::zero());
    for k in 0..n {
        let r = -(scratch.hat[k + 1] - scratch.hat[k]) / dx;
        if !r.is_finite() {
            return Err(Error::NonFinite {
                location: format!("point {k}"),
                what: "scalar rate".into(),
            });
        }
        rate[GHOST + k] = r;
    }
    Ok(())
}

/// Semi-discrete rates `L(u)` on the unknowns of `grid` (ghosts must be filled).
/// `alpha` is the global maximum of `|f'(u)|` over the grid.
pub fn semidiscrete_rhs<T: Real, F: FluxFunction<T>>(
    grid: &ScalarGrid<T>,
    recon: &Reconstructor<T>,
    flux: &F,
) -> Result<Vec<T>> {
    let alpha = max_speed(&grid.values, flux);
    let mut rate = vec![T::zero(); grid.values.len()];
    rates_into(&grid.values, grid.dx, recon, flux, alpha, &mut Scratch::default(), &mut rate)?;
    Ok(rate[GHOST..GHOST + grid.n_points()].to_vec())
}

/// Method-of-lines solver for a scalar conservation law.
#[derive(Debug, Clone)]
pub struct ScalarSolver<T, F> {
    pub grid: ScalarGrid<T>,
    pub flux: F,
    pub recon: Reconstructor<T>,
    pub time: T,
    pub steps: usize,
    rk: Rk3<T>,
    scratch: Scratch<T>,
}

impl<T: Real, F: FluxFunction<T>> ScalarSolver<T, F> {
    pub fn new(mut grid: ScalarGrid<T>, flux: F, recon: Reconstructor<T>) -> Self {
        grid.fill_ghosts();
        Self {
            grid,
            flux,
            recon,
            time: T::zero(),
            steps: 0,
            rk: Rk3::new(),
            scratch: Scratch::default(),
        }
    }

    /// Current global Lax–Friedrichs coefficient.
    pub fn alpha(&self) -> T {
        max_speed(&self.grid.values, &self.flux)
    }

    pub fn step(&mut self, dt: T) -> Result<()> {
        let alpha = self.alpha();
        let Self {
            grid,
            flux,
            recon,
            rk,
            scratch,
            ..
        } = self;
        let (dx, boundary): (T, ScalarBoundary) = (grid.dx, grid.boundary);
        rk.step(&mut grid.values, self.time, dt, |_, _, u, rate| {
            fill_line_ghosts(u, boundary);
            rates_into(u, dx, recon, flux, alpha, scratch, rate)
        })?;
        grid.fill_ghosts();
        self.time = self.time + dt;
        self.steps += 1;
        Ok(())
    }

    /// Steps until `t_end`, returning the number of steps taken.
    pub fn advance_to(&mut self, t_end: T, rule: TimeStep<T>) -> Result<usize> {
        let start = self.steps;
        // relative guard against a sliver step from round-off
        let tiny = t_end.abs().max(T::one()) * T::epsilon() * T::from_f64(16.0).unwrap();
        while t_end - self.time > tiny {
            let dt = match rule {
                TimeStep::Fixed(dt) => dt,
                TimeStep::Cfl(cfl) => {
                    let a = self.alpha();
                    if a > T::zero() {
                        cfl * self.grid.dx / a
                    } else {
                        t_end - self.time
                    }
                }
            };
            let dt = dt.min(t_end - self.time);
            self.step(dt)?;
        }
        self.time = t_end;
        Ok(self.steps - start)
    }
}
