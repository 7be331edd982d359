use rayon::prelude::*;

use super::boundary::fill_line;
use super::grid::{fill_ghosts_2d, Frame, Grid1D, Grid2D};
use super::interface::{field_speeds, line_alpha, line_fluxes, merge_alpha, LineScratch};
use super::state::{swap_momentum, ConservedState, Gas};
use crate::error::{Error, Result};
use crate::recon::Reconstructor;
use crate::scalar::Real;
use crate::time::{Rk3, STAGE_WEIGHTS};
use crate::GHOST;

/// Body force `[0, 0, rho g, rho v g]` along +y.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gravity<T> {
    pub g: T,
}

/// Semi-discrete rates of the unknowns together with the domain-integrated
/// boundary inflow and source, so that `d/dt totals = inflow + source`.
#[derive(Clone, Debug, PartialEq)]
pub struct RhsOutput<T, const N: usize> {
    /// One entry per unknown, x fastest.
    pub rate: Vec<ConservedState<T, N>>,
    pub inflow: [T; N],
    pub source: [T; N],
}

/// Time integrals of the boundary inflow and the source since `t = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget<T, const N: usize> {
    pub inflow: [T; N],
    pub source: [T; N],
}

impl<T: Real, const N: usize> Default for Budget<T, N> {
    fn default() -> Self {
        Self {
            inflow: [T::zero(); N],
            source: [T::zero(); N],
        }
    }
}

impl<T: Real, const N: usize> Budget<T, N> {
    fn add(&mut self, stage: usize, dt: T, inflow: &[T; N], source: &[T; N]) {
        let (a, b) = STAGE_WEIGHTS[stage];
        let w = T::int(a) / T::int(b) * dt;
        for c in 0..N {
            self.inflow[c] = self.inflow[c] + w * inflow[c];
            self.source[c] = self.source[c] + w * source[c];
        }
    }
}

fn add_into<T: Real, const N: usize>(acc: &mut [T; N], v: &[T; N], scale: T) {
    for c in 0..N {
        acc[c] = acc[c] + scale * v[c];
    }
}

fn check_rates<T: Real, const N: usize>(rate: &[ConservedState<T, N>], locate: impl Fn(usize) -> String) -> Result<()> {
    match rate.iter().position(|r| r.iter().any(|v| !v.is_finite())) {
        Some(k) => Err(Error::NonFinite {
            location: locate(k),
            what: "rate".into(),
        }),
        None => Ok(()),
    }
}

fn rates_1d<T: Real>(
    gas: &Gas<T>,
    data: &[ConservedState<T, 3>],
    dx: T,
    recon: &Reconstructor<T>,
    flux: &mut Vec<ConservedState<T, 3>>,
    scratch: &mut LineScratch<T, 3>,
    rate: &mut [ConservedState<T, 3>],
) -> Result<[T; 3]> {
    let n = data.len() - 2 * GHOST;
    let locate = |i: isize| format!("point {i}");
    let alpha = line_alpha(gas, data, &locate)?;
    flux.resize(n + 1, [T::zero(); 3]);
    line_fluxes(gas, data, &alpha, recon, scratch, flux, &locate)?;
    rate.fill([T::zero(); 3]);
    for k in 0..n {
        for c in 0..3 {
            rate[GHOST + k][c] = -(flux[k + 1][c] - flux[k][c]) / dx;
        }
    }
    check_rates(&rate[GHOST..GHOST + n], |k| format!("point {k}"))?;
    let mut inflow = [T::zero(); 3];
    for c in 0..3 {
        inflow[c] = flux[0][c] - flux[n][c];
    }
    Ok(inflow)
}

/// Rates of a 1D grid whose ghosts are filled.
pub fn rhs_1d<T: Real>(grid: &Grid1D<T>, gas: &Gas<T>, recon: &Reconstructor<T>) -> Result<RhsOutput<T, 3>> {
    let mut rate = vec![[T::zero(); 3]; grid.data.len()];
    let inflow = rates_1d(gas, &grid.data, grid.dx, recon, &mut Vec::new(), &mut LineScratch::default(), &mut rate)?;
    Ok(RhsOutput {
        rate: rate[GHOST..GHOST + grid.n_points()].to_vec(),
        inflow,
        source: [T::zero(); 3],
    })
}

#[derive(Debug, Clone)]
struct Workspace2D<T> {
    columns: Vec<ConservedState<T, 4>>,
}

impl<T> Default for Workspace2D<T> {
    fn default() -> Self {
        Self { columns: Vec::new() }
    }
}

fn gather_column<T: Real>(data: &[ConservedState<T, 4>], stride: usize, i: usize, out: &mut Vec<ConservedState<T, 4>>) {
    out.clear();
    let col = i + GHOST;
    out.extend(data[col..].iter().step_by(stride).copied().map(|mut s| {
        swap_momentum(&mut s);
        s
    }));
}

/// Full-storage rates of a 2D grid; returns `(inflow, source)` rates.
fn rates_2d<T: Real>(
    gas: &Gas<T>,
    data: &[ConservedState<T, 4>],
    lay: Frame<T>,
    recon: &Reconstructor<T>,
    gravity: Option<Gravity<T>>,
    work: &mut Workspace2D<T>,
    rate: &mut [ConservedState<T, 4>],
) -> Result<([T; 4], [T; 4])> {
    let (nx, ny, stride) = (lay.nx, lay.ny, lay.stride());
    let zero = [T::zero(); 4];
    let rows = |j: usize| &data[(j + GHOST) * stride..(j + GHOST + 1) * stride];

    // global splitting speed of each sweep
    let alpha_x = (0..ny)
        .into_par_iter()
        .map(|j| line_alpha(gas, rows(j), &|i| lay.point(i, j as isize)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(zero, merge_alpha);
    let alpha_y = (0..nx)
        .into_par_iter()
        .map_init(Vec::new, |col, i| {
            gather_column(data, stride, i, col);
            line_alpha(gas, col, &|j| lay.point(i as isize, j))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(zero, merge_alpha);

    // x-sweep writes rates row by row
    let inflow_x: Vec<[T; 4]> = rate
        .par_chunks_mut(stride)
        .enumerate()
        .map_init(
            || (LineScratch::default(), Vec::new()),
            |(scratch, flux), (row, out)| -> Result<[T; 4]> {
                out.fill(zero);
                if row < GHOST || row >= GHOST + ny {
                    return Ok(zero);
                }
                let j = row - GHOST;
                flux.resize(nx + 1, zero);
                line_fluxes(gas, rows(j), &alpha_x, recon, scratch, flux, &|i| lay.point(i, j as isize))
                    .map_err(|e| e.within("x-sweep"))?;
                for i in 0..nx {
                    for c in 0..4 {
                        out[GHOST + i][c] = -(flux[i + 1][c] - flux[i][c]) / lay.dx;
                    }
                }
                let mut net = zero;
                for c in 0..4 {
                    net[c] = (flux[0][c] - flux[nx][c]) * lay.dy;
                }
                Ok(net)
            },
        )
        .collect::<Result<_>>()?;

    // y-sweep fluxes, stored column-major
    work.columns.resize(nx * (ny + 1), zero);
    work.columns
        .par_chunks_mut(ny + 1)
        .enumerate()
        .map_init(
            || (LineScratch::default(), Vec::new()),
            |(scratch, col), (i, flux)| -> Result<()> {
                gather_column(data, stride, i, col);
                line_fluxes(gas, col, &alpha_y, recon, scratch, flux, &|j| lay.point(i as isize, j))
                    .map_err(|e| e.within("y-sweep"))?;
                for f in flux.iter_mut() {
                    swap_momentum(f);
                }
                Ok(())
            },
        )
        .collect::<Result<()>>()?;
    let g = &work.columns;
    rate.par_chunks_mut(stride)
        .enumerate()
        .filter(|(row, _)| *row >= GHOST && *row < GHOST + ny)
        .for_each(|(row, out)| {
            let j = row - GHOST;
            let src = &data[row * stride..(row + 1) * stride];
            for i in 0..nx {
                let (lo, hi) = (&g[i * (ny + 1) + j], &g[i * (ny + 1) + j + 1]);
                let r = &mut out[GHOST + i];
                for c in 0..4 {
                    r[c] = r[c] - (hi[c] - lo[c]) / lay.dy;
                }
                if let Some(gr) = gravity {
                    let s = &src[GHOST + i];
                    r[2] = r[2] + s[0] * gr.g;
                    r[3] = r[3] + s[2] * gr.g;
                }
            }
        });

    for j in 0..ny {
        let row = (j + GHOST) * stride;
        check_rates(&rate[row + GHOST..row + GHOST + nx], |i| lay.point(i as isize, j as isize))?;
    }

    let mut inflow = zero;
    for net in &inflow_x {
        add_into(&mut inflow, net, T::one());
    }
    for i in 0..nx {
        let col = &g[i * (ny + 1)..(i + 1) * (ny + 1)];
        let mut net = zero;
        for c in 0..4 {
            net[c] = col[0][c] - col[ny][c];
        }
        add_into(&mut inflow, &net, lay.dx);
    }
    let mut source = zero;
    if let Some(gr) = gravity {
        let (mut m, mut e) = (T::zero(), T::zero());
        for j in 0..ny {
            let row = (j + GHOST) * stride;
            for s in &data[row + GHOST..row + GHOST + nx] {
                m = m + s[0];
                e = e + s[2];
            }
        }
        let w = gr.g * lay.dx * lay.dy;
        source[2] = m * w;
        source[3] = e * w;
    }
    Ok((inflow, source))
}

/// Rates of a 2D grid whose ghosts are filled, with an optional gravity source.
pub fn rhs_2d<T: Real>(
    grid: &Grid2D<T>,
    gas: &Gas<T>,
    recon: &Reconstructor<T>,
    gravity: Option<Gravity<T>>,
) -> Result<RhsOutput<T, 4>> {
    let mut rate = vec![[T::zero(); 4]; grid.data.len()];
    let lay = grid.frame();
    let (inflow, source) = rates_2d(gas, &grid.data, lay, recon, gravity, &mut Workspace2D::default(), &mut rate)?;
    let (nx, ny) = grid.shape();
    let mut out = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            out.push(rate[grid.index(i, j)]);
        }
    }
    Ok(RhsOutput { rate: out, inflow, source })
}

/// `cfl / max((|u| + c) / dx)` over the unknowns.
pub fn cfl_dt_1d<T: Real>(grid: &Grid1D<T>, gas: &Gas<T>, cfl: T) -> Result<T> {
    let mut m = T::zero();
    for w in grid.primitives(gas)? {
        let s = field_speeds::<T, 3>(gas, &w);
        m = m.max(s[0].max(s[2]) / grid.dx);
    }
    Ok(cfl / m)
}

/// `cfl / max((|u| + c) / dx + (|v| + c) / dy)` over the unknowns.
pub fn cfl_dt_2d<T: Real>(grid: &Grid2D<T>, gas: &Gas<T>, cfl: T) -> Result<T> {
    let mut m = T::zero();
    for w in grid.primitives(gas)? {
        let c = gas.sound_speed(w.rho, w.p);
        m = m.max((w.u.abs() + c) / grid.dx + (w.v.abs() + c) / grid.dy);
    }
    Ok(cfl / m)
}

/// Stops at `t_end`, shortening the final step.
fn clamp_dt<T: Real>(time: T, t_end: T, dt: T) -> T {
    if time + dt > t_end {
        t_end - time
    } else {
        dt
    }
}

/// Method-of-lines Euler solver on a [`Grid1D`].
#[derive(Debug, Clone)]
pub struct EulerSolver1D<T> {
    pub grid: Grid1D<T>,
    pub gas: Gas<T>,
    pub recon: Reconstructor<T>,
    pub time: T,
    pub steps: usize,
    pub budget: Budget<T, 3>,
    rk: Rk3<T>,
    flux: Vec<ConservedState<T, 3>>,
    scratch: LineScratch<T, 3>,
    rate: Vec<ConservedState<T, 3>>,
}

impl<T: Real> EulerSolver1D<T> {
    pub fn new(mut grid: Grid1D<T>, gas: Gas<T>, recon: Reconstructor<T>) -> Self {
        grid.apply_boundaries(&gas, T::zero());
        Self {
            grid,
            gas,
            recon,
            time: T::zero(),
            steps: 0,
            budget: Budget::default(),
            rk: Rk3::new(),
            flux: Vec::new(),
            scratch: LineScratch::default(),
            rate: Vec::new(),
        }
    }

    pub fn cfl_dt(&self, cfl: T) -> Result<T> {
        cfl_dt_1d(&self.grid, &self.gas, cfl)
    }

    pub fn step(&mut self, dt: T) -> Result<()> {
        let Self { grid, gas, recon, rk, flux, scratch, rate, budget, .. } = self;
        let step = self.steps + 1;
        let (dx, left, right) = (grid.dx, grid.left.clone(), grid.right.clone());
        rate.resize(grid.data.len(), [T::zero(); 3]);
        rk.step(grid.data.as_flattened_mut(), self.time, dt, |stage, t, u, r| {
            let (u, _) = u.as_chunks_mut::<3>();
            let (r, _) = r.as_chunks_mut::<3>();
            fill_line(gas, u, &left, &right, T::zero(), dx, t, 1);
            let inflow = rates_1d(gas, u, dx, recon, flux, scratch, r).map_err(|e| e.within(format!("step {step}")))?;
            budget.add(stage, dt, &inflow, &[T::zero(); 3]);
            Ok(())
        })?;
        self.time = self.time + dt;
        self.steps = step;
        self.grid.apply_boundaries(&self.gas, self.time);
        self.grid.primitives(&self.gas).map_err(|e| e.within(format!("step {step}")))?;
        Ok(())
    }

    /// CFL-limited steps until `t_end`; returns the number of steps taken.
    pub fn advance_to(&mut self, t_end: T, cfl: T) -> Result<usize> {
        let start = self.steps;
        while self.time < t_end {
            let dt = clamp_dt(self.time, t_end, self.cfl_dt(cfl)?);
            self.step(dt)?;
        }
        Ok(self.steps - start)
    }
}

/// Method-of-lines Euler solver on a [`Grid2D`] with dimension-by-dimension
/// sweeps.
#[derive(Debug, Clone)]
pub struct EulerSolver2D<T> {
    pub grid: Grid2D<T>,
    pub gas: Gas<T>,
    pub recon: Reconstructor<T>,
    pub gravity: Option<Gravity<T>>,
    pub time: T,
    pub steps: usize,
    pub budget: Budget<T, 4>,
    rk: Rk3<T>,
    work: Workspace2D<T>,
    rate: Vec<ConservedState<T, 4>>,
}

impl<T: Real> EulerSolver2D<T> {
    pub fn new(mut grid: Grid2D<T>, gas: Gas<T>, recon: Reconstructor<T>, gravity: Option<Gravity<T>>) -> Self {
        grid.apply_boundaries(&gas, T::zero());
        Self {
            grid,
            gas,
            recon,
            gravity,
            time: T::zero(),
            steps: 0,
            budget: Budget::default(),
            rk: Rk3::new(),
            work: Workspace2D::default(),
            rate: Vec::new(),
        }
    }

    pub fn cfl_dt(&self, cfl: T) -> Result<T> {
        cfl_dt_2d(&self.grid, &self.gas, cfl)
    }

    pub fn step(&mut self, dt: T) -> Result<()> {
        let step = self.steps + 1;
        let frame = self.grid.frame();
        let Self { grid, gas, recon, rk, work, rate, budget, gravity, .. } = self;
        let Grid2D { data, boundary, .. } = grid;
        rate.resize(data.len(), [T::zero(); 4]);
        rk.step(data.as_flattened_mut(), self.time, dt, |stage, t, u, r| {
            let (u, _) = u.as_chunks_mut::<4>();
            let (r, _) = r.as_chunks_mut::<4>();
            fill_ghosts_2d(u, &frame, boundary, gas, t);
            let (inflow, source) =
                rates_2d(gas, u, frame, recon, *gravity, work, r).map_err(|e| e.within(format!("step {step}")))?;
            budget.add(stage, dt, &inflow, &source);
            Ok(())
        })?;
        self.time = self.time + dt;
        self.steps = step;
        self.grid.apply_boundaries(&self.gas, self.time);
        self.grid.primitives(&self.gas).map_err(|e| e.within(format!("step {step}")))?;
        Ok(())
    }

    /// CFL-limited steps until `t_end`; returns the number of steps taken.
    pub fn advance_to(&mut self, t_end: T, cfl: T) -> Result<usize> {
        let start = self.steps;
        while self.time < t_end {
            let dt = clamp_dt(self.time, t_end, self.cfl_dt(cfl)?);
            self.step(dt)?;
        }
        Ok(self.steps - start)
    }
}
