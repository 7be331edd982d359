//! Finite-difference solvers for hyperbolic conservation laws built around
//! ENO reconstruction with adaptive order (ENO-AO5/ENO-AO7).
//!
//! The crate is organised bottom-up:
//!
//! - [`recon`]: stateless interface-flux reconstruction kernels (linear stencil
//!   fluxes, min-discrepancy smoothness indicators, ENO-AO selection, WENO-Z
//!   and linear-upwind baselines).
//! - [`spectral`]: analytic modified wavenumbers of the linear stencil fluxes and
//!   a numerical approximate-dispersion-relation driver for nonlinear schemes.
//! - [`time`]: third-order TVD Runge–Kutta integrator.
//! - [`scalar_law`]: 1D scalar conservation-law solver with global
//!   Lax–Friedrichs splitting.
//! - [`euler`]: 1D/2D compressible Euler solver with characteristic-wise
//!   reconstruction.
//!
//! All numerics are generic over the scalar type. The kernels accept any
//! [`Scalar`] (including exact rationals, see [`Exact`]); the solvers need a
//! floating-point [`Real`]. Concrete `f64` aliases are exported at the crate root.

pub mod error;
pub mod euler;
pub mod recon;
pub mod scalar;
pub mod scalar_law;
pub mod spectral;
pub mod time;

pub use error::{Error, Result};
pub use scalar::{lit, Exact, Real, Scalar};

pub use recon::{
    eno_ao_reconstruct, jiang_shu_beta, linear_reconstruct, mirror_window, smoothness_pair,
    stencil_flux, weno_z_reconstruct, FluxWindow, Reconstructor, Scheme, SchemeOrder,
    SchemeParams, SmoothnessPair, StencilId,
};

/// Number of ghost points kept on every side of a grid line.
///
/// The plus-flux at the first interface reads `f_{j-4}` of the cell left of the
/// boundary and the mirrored minus-flux at the last interface reads `f_{j+5}`,
/// so a seventh-order window needs five ghosts.
pub const GHOST: usize = 5;

pub type Window64 = FluxWindow<f64>;
pub type Recon64 = Reconstructor<f64>;
pub type Params64 = SchemeParams<f64>;
pub type ScalarGrid64 = scalar_law::ScalarGrid<f64>;
pub type ScalarSolver64<F> = scalar_law::ScalarSolver<f64, F>;
pub type Gas64 = euler::Gas<f64>;
pub type Primitive64 = euler::PrimitiveState<f64>;
pub type Grid1D64 = euler::Grid1D<f64>;
pub type Grid2D64 = euler::Grid2D<f64>;
pub type Boundary64 = euler::Boundary<f64>;
pub type EulerSolver1D64 = euler::EulerSolver1D<f64>;
pub type EulerSolver2D64 = euler::EulerSolver2D<f64>;
pub type SpectralSample64 = spectral::SpectralSample<f64>;
