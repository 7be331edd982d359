//! One-dimensional scalar conservation laws `u_t + f(u)_x = 0`.

mod flux;
mod grid;
mod problems;
mod solver;

pub use flux::{lf_split, Burgers, FluxFunction, LinearAdvection};
pub use grid::{ScalarBoundary, ScalarGrid};
pub use problems::{composite_wave_initial, error_norms, ErrorNorms};
pub use solver::{semidiscrete_rhs, ScalarSolver, TimeStep};
