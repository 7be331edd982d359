use super::roe::{roe_average, CharacteristicDecomposition};
use super::state::{flux_x, ConservedState, Gas, PrimitiveState};
use crate::error::{Error, Result};
use crate::recon::{FluxWindow, Reconstructor};
use crate::scalar::Real;
use crate::scalar_law::lf_split;
use crate::GHOST;

/// Points feeding one interface flux: `i-4 ..= i+5` for the interface `i+1/2`.
pub const INTERFACE_WINDOW: usize = 10;

/// Numerical flux at `i+1/2` from the states and exact fluxes at `i-4 ..= i+5`.
///
/// Each characteristic field `k` is split as `(l_k F +- alpha_k l_k U) / 2`,
/// reconstructed with `recon` (plus-window centred on `i`, mirrored
/// minus-window centred on `i+1`) and projected back with the right
/// eigenvectors.
pub fn characteristic_interface_flux<T: Real, const N: usize>(
    states: &[ConservedState<T, N>],
    fluxes: &[ConservedState<T, N>],
    decomp: &CharacteristicDecomposition<T, N>,
    alpha: &[T; N],
    recon: &Reconstructor<T>,
) -> Result<ConservedState<T, N>> {
    assert!(states.len() >= INTERFACE_WINDOW && fluxes.len() >= INTERFACE_WINDOW);
    let mut out = [T::zero(); N];
    for k in 0..N {
        let l = &decomp.left[k];
        let mut plus = [T::zero(); INTERFACE_WINDOW];
        let mut minus = [T::zero(); INTERFACE_WINDOW];
        for p in 0..INTERFACE_WINDOW {
            let (mut wu, mut wf) = (T::zero(), T::zero());
            for c in 0..N {
                wu = wu + l[c] * states[p][c];
                wf = wf + l[c] * fluxes[p][c];
            }
            (plus[p], minus[p]) = lf_split(wf, wu, alpha[k]);
        }
        let phi = recon.plus(&FluxWindow::from_slice(&plus[..9])) + recon.minus(&FluxWindow::from_slice(&minus[1..]));
        if !phi.is_finite() {
            return Err(Error::NonFinite {
                location: format!("characteristic field {k}"),
                what: "characteristic flux".into(),
            });
        }
        for (c, o) in out.iter_mut().enumerate() {
            *o = *o + decomp.right[c][k] * phi;
        }
    }
    Ok(out)
}

/// Splitting speed of each field at a primitive state: the spectral radius
/// `|u| + c`, shared by all fields.
#[inline]
pub(crate) fn field_speeds<T: Real, const N: usize>(gas: &Gas<T>, w: &PrimitiveState<T>) -> [T; N] {
    [w.u.abs() + gas.sound_speed(w.rho, w.p); N]
}

/// Maximum splitting speed over every stored point of a line (in
/// x-orientation).
pub(crate) fn line_alpha<T: Real, const N: usize>(
    gas: &Gas<T>,
    line: &[ConservedState<T, N>],
    locate: &dyn Fn(isize) -> String,
) -> Result<[T; N]> {
    let mut alpha = [T::zero(); N];
    for (i, s) in line.iter().enumerate() {
        let w = gas.primitive(s, || locate(i as isize - GHOST as isize))?;
        let sp = field_speeds::<T, N>(gas, &w);
        for k in 0..N {
            alpha[k] = alpha[k].max(sp[k]);
        }
    }
    Ok(alpha)
}

pub(crate) fn merge_alpha<T: Real, const N: usize>(a: [T; N], b: [T; N]) -> [T; N] {
    let mut m = a;
    for k in 0..N {
        m[k] = m[k].max(b[k]);
    }
    m
}

#[derive(Debug, Clone)]
pub(crate) struct LineScratch<T, const N: usize> {
    prim: Vec<PrimitiveState<T>>,
    flux: Vec<ConservedState<T, N>>,
}

impl<T, const N: usize> Default for LineScratch<T, N> {
    fn default() -> Self {
        Self {
            prim: Vec::new(),
            flux: Vec::new(),
        }
    }
}

/// Interface fluxes of a line holding `GHOST + n + GHOST` states in
/// x-orientation: `out[k]` is the flux between unknowns `k-1` and `k`,
/// `k = 0 ..= n`.
pub(crate) fn line_fluxes<T: Real, const N: usize>(
    gas: &Gas<T>,
    line: &[ConservedState<T, N>],
    alpha: &[T; N],
    recon: &Reconstructor<T>,
    scratch: &mut LineScratch<T, N>,
    out: &mut [ConservedState<T, N>],
    locate: &dyn Fn(isize) -> String,
) -> Result<()> {
    let len = line.len();
    let n = len - 2 * GHOST;
    debug_assert_eq!(out.len(), n + 1);
    scratch.prim.clear();
    scratch.flux.clear();
    for (i, s) in line.iter().enumerate() {
        let w = gas.primitive(s, || locate(i as isize - GHOST as isize))?;
        scratch.prim.push(w);
        scratch.flux.push(flux_x(gas, s, &w));
    }
    for (k, o) in out.iter_mut().enumerate() {
        let i = GHOST + k - 1;
        let here = || format!("interface between {} and {}", locate(k as isize - 1), locate(k as isize));
        let roe = roe_average(gas, &scratch.prim[i], &scratch.prim[i + 1]).map_err(|e| match e {
            Error::Positivity { rho, p, .. } => Error::Positivity { location: here(), rho, p },
            e => e,
        })?;
        let decomp = CharacteristicDecomposition::new(gas, &roe);
        let lo = i - 4;
        *o = characteristic_interface_flux(
            &line[lo..lo + INTERFACE_WINDOW],
            &scratch.flux[lo..lo + INTERFACE_WINDOW],
            &decomp,
            alpha,
            recon,
        )
        .map_err(|e| match e {
            Error::NonFinite { location, what } => Error::NonFinite {
                location: format!("{}, {location}", here()),
                what,
            },
            e => e,
        })?;
    }
    Ok(())
}
