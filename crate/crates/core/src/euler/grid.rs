use super::boundary::{check_pair, fill_end, fill_line, fill_periodic, Boundary, BoundarySpec};
use super::state::{ConservedState, Gas, PrimitiveState};
use crate::error::Result;
use crate::scalar::Real;
use crate::GHOST;

fn points<T: Real>(n_cells: usize, lo: &Boundary<T>) -> usize {
    if lo.is_periodic() {
        n_cells
    } else {
        n_cells + 1
    }
}

fn sum_states<T: Real, const N: usize>(states: impl Iterator<Item = ConservedState<T, N>>, weight: T) -> [T; N] {
    let mut acc = [T::zero(); N];
    for s in states {
        for c in 0..N {
            acc[c] = acc[c] + s[c];
        }
    }
    acc.map(|a| a * weight)
}

/// Uniform 1D point grid of conserved states with [`GHOST`] ghosts per side.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid1D<T> {
    pub x_left: T,
    pub x_right: T,
    pub n_cells: usize,
    pub dx: T,
    pub left: Boundary<T>,
    pub right: Boundary<T>,
    pub data: Vec<ConservedState<T, 3>>,
}

impl<T: Real> Grid1D<T> {
    pub fn new(x_left: T, x_right: T, n_cells: usize, left: Boundary<T>, right: Boundary<T>) -> Result<Self> {
        check_pair(&left, &right, "x")?;
        assert!(n_cells >= 2, "need at least two cells");
        let n = points(n_cells, &left);
        Ok(Self {
            x_left,
            x_right,
            n_cells,
            dx: (x_right - x_left) / T::from_usize(n_cells).unwrap(),
            left,
            right,
            data: vec![[T::zero(); 3]; n + 2 * GHOST],
        })
    }

    pub fn from_fn(
        x_left: T,
        x_right: T,
        n_cells: usize,
        left: Boundary<T>,
        right: Boundary<T>,
        gas: &Gas<T>,
        init: impl Fn(T) -> PrimitiveState<T>,
    ) -> Result<Self> {
        let mut g = Self::new(x_left, x_right, n_cells, left, right)?;
        for i in 0..g.n_points() {
            g.data[GHOST + i] = gas.conserved(&init(g.x(i)))?;
        }
        g.apply_boundaries(gas, T::zero());
        Ok(g)
    }

    pub fn n_points(&self) -> usize {
        self.data.len() - 2 * GHOST
    }

    pub fn x(&self, i: usize) -> T {
        self.x_left + T::from_usize(i).unwrap() * self.dx
    }

    pub fn interior(&self) -> &[ConservedState<T, 3>] {
        &self.data[GHOST..GHOST + self.n_points()]
    }

    pub fn primitives(&self, gas: &Gas<T>) -> Result<Vec<PrimitiveState<T>>> {
        self.interior()
            .iter()
            .enumerate()
            .map(|(i, s)| gas.primitive(s, || format!("point {i}")))
            .collect()
    }

    /// `sum U dx` over the unknowns.
    pub fn totals(&self) -> [T; 3] {
        sum_states(self.interior().iter().copied(), self.dx)
    }

    pub fn apply_boundaries(&mut self, gas: &Gas<T>, t: T) {
        fill_line(gas, &mut self.data, &self.left, &self.right, T::zero(), self.dx, t, 1);
    }
}

/// Uniform 2D point grid, x fastest, with [`GHOST`]-deep ghost rims.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid2D<T> {
    pub x_left: T,
    pub x_right: T,
    pub y_bottom: T,
    pub y_top: T,
    pub nx_cells: usize,
    pub ny_cells: usize,
    pub dx: T,
    pub dy: T,
    pub boundary: BoundarySpec<T>,
    nx: usize,
    ny: usize,
    pub data: Vec<ConservedState<T, 4>>,
}

impl<T: Real> Grid2D<T> {
    pub fn new(
        (x_left, x_right): (T, T),
        (y_bottom, y_top): (T, T),
        (nx_cells, ny_cells): (usize, usize),
        boundary: BoundarySpec<T>,
    ) -> Result<Self> {
        boundary.validate()?;
        assert!(nx_cells >= 2 && ny_cells >= 2, "need at least two cells per direction");
        let nx = points(nx_cells, &boundary.left);
        let ny = points(ny_cells, &boundary.bottom);
        Ok(Self {
            x_left,
            x_right,
            y_bottom,
            y_top,
            nx_cells,
            ny_cells,
            dx: (x_right - x_left) / T::from_usize(nx_cells).unwrap(),
            dy: (y_top - y_bottom) / T::from_usize(ny_cells).unwrap(),
            boundary,
            nx,
            ny,
            data: vec![[T::zero(); 4]; (nx + 2 * GHOST) * (ny + 2 * GHOST)],
        })
    }

    pub fn from_fn(
        x: (T, T),
        y: (T, T),
        cells: (usize, usize),
        boundary: BoundarySpec<T>,
        gas: &Gas<T>,
        init: impl Fn(T, T) -> PrimitiveState<T>,
    ) -> Result<Self> {
        let mut g = Self::new(x, y, cells, boundary)?;
        for j in 0..g.ny {
            for i in 0..g.nx {
                let k = g.index(i, j);
                g.data[k] = gas.conserved(&init(g.x(i), g.y(j)))?;
            }
        }
        g.apply_boundaries(gas, T::zero());
        Ok(g)
    }

    /// Unknowns per direction.
    pub fn shape(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    /// Storage row length, ghosts included.
    pub fn stride(&self) -> usize {
        self.nx + 2 * GHOST
    }

    /// Storage index of unknown `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        (j + GHOST) * self.stride() + i + GHOST
    }

    #[cfg(test)]
    fn offset_index(&self, i: isize, j: isize) -> usize {
        ((j + GHOST as isize) * self.stride() as isize + i + GHOST as isize) as usize
    }

    pub fn x(&self, i: usize) -> T {
        self.x_left + T::from_usize(i).unwrap() * self.dx
    }

    pub fn y(&self, j: usize) -> T {
        self.y_bottom + T::from_usize(j).unwrap() * self.dy
    }

    pub fn at(&self, i: usize, j: usize) -> &ConservedState<T, 4> {
        &self.data[self.index(i, j)]
    }

    pub fn interior(&self) -> impl Iterator<Item = ConservedState<T, 4>> + '_ {
        (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| *self.at(i, j)))
    }

    /// Primitive unknowns in row-major order (x fastest).
    pub fn primitives(&self, gas: &Gas<T>) -> Result<Vec<PrimitiveState<T>>> {
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for j in 0..self.ny {
            for i in 0..self.nx {
                out.push(gas.primitive(self.at(i, j), || format!("point ({i}, {j})"))?);
            }
        }
        Ok(out)
    }

    /// `sum U dx dy` over the unknowns.
    pub fn totals(&self) -> [T; 4] {
        sum_states(self.interior(), self.dx * self.dy)
    }

    pub fn apply_boundaries(&mut self, gas: &Gas<T>, t: T) {
        let frame = self.frame();
        fill_ghosts_2d(&mut self.data, &frame, &self.boundary, gas, t);
    }

    pub(crate) fn frame(&self) -> Frame<T> {
        Frame {
            nx: self.nx,
            ny: self.ny,
            dx: self.dx,
            dy: self.dy,
            x0: self.x_left,
            y0: self.y_bottom,
        }
    }
}

/// Geometry of a 2D storage block.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Frame<T> {
    pub nx: usize,
    pub ny: usize,
    pub dx: T,
    pub dy: T,
    pub x0: T,
    pub y0: T,
}

impl<T: Real> Frame<T> {
    pub fn stride(&self) -> usize {
        self.nx + 2 * GHOST
    }

    pub fn x(&self, i: isize) -> T {
        self.x0 + T::from_isize(i).unwrap() * self.dx
    }

    pub fn y(&self, j: isize) -> T {
        self.y0 + T::from_isize(j).unwrap() * self.dy
    }

    pub fn point(&self, i: isize, j: isize) -> String {
        format!("point ({i}, {j}) at (x, y) = ({}, {})", self.x(i), self.y(j))
    }
}

pub(crate) fn fill_ghosts_2d<T: Real>(
    data: &mut [ConservedState<T, 4>],
    frame: &Frame<T>,
    b: &BoundarySpec<T>,
    gas: &Gas<T>,
    t: T,
) {
    let (nx, ny, stride) = (frame.nx, frame.ny, frame.stride());
    for j in 0..ny {
        let row = (j + GHOST) * stride;
        fill_line(gas, &mut data[row..row + stride], &b.left, &b.right, frame.y(j as isize), frame.dx, t, 1);
    }
    for i in 0..nx {
        let at = |j: isize| ((j + GHOST as isize) * stride as isize + (i + GHOST) as isize) as usize;
        if b.bottom.is_periodic() {
            fill_periodic(data, ny, at);
            continue;
        }
        let x = frame.x(i as isize);
        let d = |k: usize| frame.dy * T::from_usize(k).unwrap();
        fill_end(data, |k| at(k as isize), |k| at(-(k as isize)), |k| b.bottom.resolve(gas, x, d(k), t), 2);
        let last = ny as isize - 1;
        let hi = |k| b.top.resolve(gas, x, d(k), t);
        fill_end(data, |k| at(last - k as isize), |k| at(last + k as isize), hi, 2);
    }
}
