//! Compressible Euler equations for an ideal gas in one and two dimensions.
//!
//! Interface fluxes are reconstructed characteristic-wise: the states and
//! exact fluxes around each interface are projected on the eigenvectors of
//! the Roe-averaged Jacobian, split with a global Lax–Friedrichs coefficient
//! (the largest `|u| + c` of the sweep), reconstructed with any [`Reconstructor`](crate::Reconstructor)
//! and projected back. 2D rates are the sum of independent x- and y-sweeps.

mod boundary;
mod exact;
mod grid;
mod interface;
mod roe;
mod solver;
mod state;

pub use boundary::{Boundary, BoundarySpec};
pub use exact::ExactRiemann;
pub use grid::{Grid1D, Grid2D};
pub use interface::{characteristic_interface_flux, INTERFACE_WINDOW};
pub use roe::{roe_average, CharacteristicDecomposition, RoeState};
pub use solver::{cfl_dt_1d, cfl_dt_2d, rhs_1d, rhs_2d, Budget, EulerSolver1D, EulerSolver2D, Gravity, RhsOutput};
pub use state::{euler_flux, ConservedState, Direction, Gas, PrimitiveState};
