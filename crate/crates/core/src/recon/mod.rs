//! Interface-flux reconstruction kernels.
//!
//! Every kernel consumes a [`FluxWindow`]: nine consecutive point values of a
//! split flux, `f_{j-4} ..= f_{j+4}`, and returns an approximation of the
//! interface flux at `x_{j+1/2}`. The minus-flux at the same interface is
//! obtained by mirroring the window centred on `j+1` (see [`mirror_window`]).

mod eno_ao;
mod indicator;
mod scheme;
mod stencil;
mod weno_z;

pub use eno_ao::{eno_ao_reconstruct, eno_ao_select, CANDIDATES_5, CANDIDATES_7};
pub use indicator::{smoothness_pair, SmoothnessPair};
pub use scheme::{Reconstructor, Scheme, SchemeOrder, SchemeParams, UnknownScheme};
pub use stencil::{
    linear_reconstruct, mirror_window, stencil_coefficients, stencil_flux, FluxWindow, StencilId,
    InvalidStencil,
};
pub use weno_z::{
    ideal_weights, jiang_shu_beta, weno_z_reconstruct, weno_z_weights, SUBSTENCILS_5,
    SUBSTENCILS_7,
};
