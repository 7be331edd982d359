use std::fmt;
use std::str::FromStr;

use super::eno_ao::eno_ao_reconstruct;
use super::stencil::{mirror_window, stencil_flux, FluxWindow, StencilId};
use super::weno_z::weno_z_reconstruct;
use crate::scalar::{lit, Real};

/// Design order of a nonlinear scheme. Order 5 reads window indices 1..=7,
/// order 7 the full window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeOrder {
    Order5,
    Order7,
}

impl SchemeOrder {
    pub fn as_u32(self) -> u32 {
        match self {
            SchemeOrder::Order5 => 5,
            SchemeOrder::Order7 => 7,
        }
    }

    /// The full linear stencil of this order.
    pub fn full_stencil(self) -> StencilId {
        match self {
            SchemeOrder::Order5 => StencilId::of(2, 2),
            SchemeOrder::Order7 => StencilId::of(3, 3),
        }
    }
}

/// Reconstruction scheme identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    EnoAo(SchemeOrder),
    WenoZ(SchemeOrder),
    /// Linear upwind scheme on the full stencil of the given order.
    Upwind(SchemeOrder),
    /// Linear flux on one fixed stencil.
    Fixed(StencilId),
}

impl Scheme {
    pub const BENCHMARK_SET: [Scheme; 6] = [
        Scheme::EnoAo(SchemeOrder::Order5),
        Scheme::EnoAo(SchemeOrder::Order7),
        Scheme::WenoZ(SchemeOrder::Order5),
        Scheme::WenoZ(SchemeOrder::Order7),
        Scheme::Upwind(SchemeOrder::Order5),
        Scheme::Upwind(SchemeOrder::Order7),
    ];

    /// Design order, `None` for an arbitrary fixed stencil.
    pub fn order(self) -> Option<SchemeOrder> {
        match self {
            Scheme::EnoAo(o) | Scheme::WenoZ(o) | Scheme::Upwind(o) => Some(o),
            Scheme::Fixed(_) => None,
        }
    }

    /// Linear stencil whose analytic modified wavenumber is the natural
    /// reference for this scheme.
    pub fn reference_stencil(self) -> StencilId {
        match self {
            Scheme::Fixed(s) => s,
            other => other.order().unwrap().full_stencil(),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::EnoAo(o) => write!(f, "ENO-AO{}", o.as_u32()),
            Scheme::WenoZ(o) => write!(f, "WENO-Z{}", o.as_u32()),
            Scheme::Upwind(o) => write!(f, "UW{}", o.as_u32()),
            Scheme::Fixed(s) => write!(f, "S{}{}", s.m(), s.n()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown scheme `{0}` (expected ENO-AO5, ENO-AO7, WENO-Z5, WENO-Z7, UW5, UW7 or Smn)")]
pub struct UnknownScheme(pub String);

impl FromStr for Scheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s.trim().to_ascii_uppercase().replace(['-', '_'], "");
        let scheme = match norm.as_str() {
            "ENOAO5" => Scheme::EnoAo(SchemeOrder::Order5),
            "ENOAO7" => Scheme::EnoAo(SchemeOrder::Order7),
            "WENOZ5" => Scheme::WenoZ(SchemeOrder::Order5),
            "WENOZ7" => Scheme::WenoZ(SchemeOrder::Order7),
            "UW5" => Scheme::Upwind(SchemeOrder::Order5),
            "UW7" => Scheme::Upwind(SchemeOrder::Order7),
            other => {
                let digits: Vec<usize> = other
                    .strip_prefix('S')
                    .filter(|d| d.len() == 2)
                    .map(|d| d.chars().filter_map(|c| c.to_digit(10).map(|v| v as usize)).collect())
                    .unwrap_or_default();
                match digits.as_slice() {
                    [m, n] => Scheme::Fixed(StencilId::new(*m, *n).map_err(|_| UnknownScheme(s.into()))?),
                    _ => return Err(UnknownScheme(s.into())),
                }
            }
        };
        Ok(scheme)
    }
}

/// Tuning parameters of the nonlinear schemes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeParams<T> {
    /// ENO-AO acceptance threshold; absolute, in units of the flux.
    pub delta: T,
    /// WENO-Z regulariser.
    pub eps: T,
    /// WENO-Z exponent.
    pub p: T,
}

impl<T: Real> Default for SchemeParams<T> {
    fn default() -> Self {
        Self {
            delta: lit(1e-5),
            eps: lit(1e-40),
            p: T::one(),
        }
    }
}

/// A scheme bound to its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reconstructor<T> {
    pub scheme: Scheme,
    pub params: SchemeParams<T>,
}

impl<T: Real> Reconstructor<T> {
    pub fn new(scheme: Scheme, params: SchemeParams<T>) -> Self {
        Self { scheme, params }
    }

    pub fn with_defaults(scheme: Scheme) -> Self {
        Self::new(scheme, SchemeParams::default())
    }

    /// `\hat f^+_{j+1/2}` from a window centred on `j`.
    #[inline(always)]
    pub fn plus(&self, window: &FluxWindow<T>) -> T {
        match self.scheme {
            Scheme::EnoAo(o) => eno_ao_reconstruct(window, o, self.params.delta),
            Scheme::WenoZ(o) => weno_z_reconstruct(window, o, self.params.eps, self.params.p),
            Scheme::Upwind(o) => stencil_flux(window, o.full_stencil()),
            Scheme::Fixed(s) => stencil_flux(window, s),
        }
    }

    /// `\hat f^-_{j+1/2}` from the window of minus-fluxes centred on `j+1`.
    #[inline(always)]
    pub fn minus(&self, window: &FluxWindow<T>) -> T {
        self.plus(&mirror_window(window))
    }
}
