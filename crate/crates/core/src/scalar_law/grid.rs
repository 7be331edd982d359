use crate::scalar::Real;
use crate::GHOST;

/// Boundary treatment of a scalar grid line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarBoundary {
    /// Endpoints identified: `n_cells` intervals, `n_cells` unknowns.
    Periodic,
    /// Zeroth-order extrapolation; `n_cells + 1` unknowns including both ends.
    Extrapolate,
}

/// Uniform 1D point grid with [`GHOST`] ghost points per side.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarGrid<T> {
    pub x_left: T,
    pub x_right: T,
    pub n_cells: usize,
    pub dx: T,
    pub boundary: ScalarBoundary,
    /// Point values, ghosts included.
    pub values: Vec<T>,
}

impl<T: Real> ScalarGrid<T> {
    pub fn new(x_left: T, x_right: T, n_cells: usize, boundary: ScalarBoundary) -> Self {
        assert!(n_cells >= 2, "need at least two cells");
        let dx = (x_right - x_left) / T::from_usize(n_cells).unwrap();
        let n_points = match boundary {
            ScalarBoundary::Periodic => n_cells,
            ScalarBoundary::Extrapolate => n_cells + 1,
        };
        Self {
            x_left,
            x_right,
            n_cells,
            dx,
            boundary,
            values: vec![T::zero(); n_points + 2 * GHOST],
        }
    }

    /// Grid sampled from `u0` at the unknown points.
    pub fn from_fn(x_left: T, x_right: T, n_cells: usize, boundary: ScalarBoundary, u0: impl Fn(T) -> T) -> Self {
        let mut g = Self::new(x_left, x_right, n_cells, boundary);
        for i in 0..g.n_points() {
            let x = g.x(i);
            g.values[GHOST + i] = u0(x);
        }
        g.fill_ghosts();
        g
    }

    pub fn n_points(&self) -> usize {
        self.values.len() - 2 * GHOST
    }

    /// Coordinate of unknown `i` (0-based; negative offsets reach ghosts).
    pub fn x(&self, i: usize) -> T {
        self.x_left + T::from_usize(i).unwrap() * self.dx
    }

    pub fn coordinates(&self) -> Vec<T> {
        (0..self.n_points()).map(|i| self.x(i)).collect()
    }

    pub fn interior(&self) -> &[T] {
        &self.values[GHOST..GHOST + self.n_points()]
    }

    pub fn interior_mut(&mut self) -> &mut [T] {
        let n = self.n_points();
        &mut self.values[GHOST..GHOST + n]
    }

    pub fn fill_ghosts(&mut self) {
        fill_line_ghosts(&mut self.values, self.boundary);
    }
}

/// Fills the ghost points of a line holding `GHOST + n + GHOST` values.
pub(crate) fn fill_line_ghosts<T: Copy>(values: &mut [T], boundary: ScalarBoundary) {
    let n = values.len() - 2 * GHOST;
    match boundary {
        ScalarBoundary::Periodic => {
            for g in 0..GHOST {
                values[g] = values[n + g];
                values[GHOST + n + g] = values[GHOST + g];
            }
        }
        ScalarBoundary::Extrapolate => {
            let (first, last) = (values[GHOST], values[GHOST + n - 1]);
            values[..GHOST].fill(first);
            values[GHOST + n..].fill(last);
        }
    }
}
