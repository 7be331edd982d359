//! Modified-wavenumber analysis.
//!
//! For a linear stencil flux the modified wavenumber `k'` of `e^{i k x}` has the
//! closed forms tabulated in [`analytic_modified_wavenumber`]. Nonlinear schemes
//! are probed numerically by [`adr`]: a unit-amplitude complex carrier (two
//! real fields) is advanced one tiny forward-Euler step under the full
//! semi-discretisation and `k'` is read off the difference quotient of its
//! Fourier mode.
//! Sign convention: `Im k' <= 0` is dissipative.

use std::collections::BTreeSet;
use std::io::{self, Write};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::recon::{Reconstructor, StencilId};
use crate::scalar::{lit, Real};
use crate::scalar_law::{semidiscrete_rhs, LinearAdvection, ScalarBoundary, ScalarGrid};

/// One point of a dispersion/dissipation curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralSample<T> {
    /// Scaled wavenumber `k dx` in `[0, pi]`.
    pub kappa: T,
    pub kappa_prime_re: T,
    pub kappa_prime_im: T,
}

type Row = (&'static [(i64, i64)], &'static [(i64, i64)]);

/// `(sin coefficients for k = 1..=4, [constant, cos coefficients for k = 1..=4])`.
fn wavenumber_row(s: StencilId) -> Row {
    match (s.m(), s.n()) {
        (0, 0) => (&[(1, 1)], &[(-1, 1), (1, 1)]),
        (0, 1) => (&[(1, 1)], &[]),
        (0, 2) => (&[(4, 3), (-1, 6)], &[(1, 2), (-2, 3), (1, 6)]),
        (0, 3) => (&[(7, 4), (-1, 2), (1, 12)], &[(5, 6), (-5, 4), (1, 2), (-1, 12)]),
        (1, 0) => (&[(2, 1), (-1, 2)], &[(-3, 2), (2, 1), (-1, 2)]),
        (1, 1) => (&[(4, 3), (-1, 6)], &[(-1, 2), (2, 3), (-1, 6)]),
        (1, 2) => (&[(4, 3), (-1, 6)], &[]),
        (1, 3) => (&[(3, 2), (-3, 10), (1, 30)], &[(1, 3), (-1, 2), (1, 5), (-1, 30)]),
        (2, 0) => (&[(3, 1), (-3, 2), (1, 3)], &[(-11, 6), (3, 1), (-3, 2), (1, 3)]),
        (2, 1) => (&[(7, 4), (-1, 2), (1, 12)], &[(-5, 6), (5, 4), (-1, 2), (1, 12)]),
        (2, 2) => (&[(3, 2), (-3, 10), (1, 30)], &[(-1, 3), (1, 2), (-1, 5), (1, 30)]),
        (2, 3) => (&[(3, 2), (-3, 10), (1, 30)], &[]),
        (3, 0) => (
            &[(4, 1), (-3, 1), (4, 3), (-1, 4)],
            &[(-25, 12), (4, 1), (-3, 1), (4, 3), (-1, 4)],
        ),
        (3, 1) => (
            &[(11, 5), (-1, 1), (1, 3), (-1, 20)],
            &[(-13, 12), (9, 5), (-1, 1), (1, 3), (-1, 20)],
        ),
        (3, 2) => (
            &[(26, 15), (-8, 15), (2, 15), (-1, 60)],
            &[(-7, 12), (14, 15), (-7, 15), (2, 15), (-1, 60)],
        ),
        (3, 3) => (
            &[(8, 5), (-2, 5), (8, 105), (-1, 140)],
            &[(-1, 4), (2, 5), (-1, 5), (2, 35), (-1, 140)],
        ),
        _ => unreachable!(),
    }
}

/// Closed-form modified wavenumber of the linear flux on stencil `s`.
pub fn analytic_modified_wavenumber<T: Real>(s: StencilId, kappa: T) -> SpectralSample<T> {
    let (sin_terms, cos_terms) = wavenumber_row(s);
    let q = |(n, d): (i64, i64)| T::int(n) / T::int(d);
    let mut re = T::zero();
    for (k, c) in sin_terms.iter().enumerate() {
        re = re + q(*c) * (T::from_usize(k + 1).unwrap() * kappa).sin();
    }
    let mut im = T::zero();
    for (k, c) in cos_terms.iter().enumerate() {
        im = im + q(*c) * (T::from_usize(k).unwrap() * kappa).cos();
    }
    SpectralSample {
        kappa,
        kappa_prime_re: re,
        kappa_prime_im: im,
    }
}

/// Stencils whose linear flux is never anti-dissipative (Im k' <= 0 on `[0, pi]`),
/// minus `S(1,0)`, which is dropped for its large dispersion error.
pub fn linear_stability_screen() -> BTreeSet<StencilId> {
    const SAMPLES: usize = 10_000;
    const TOL: f64 = 1e-12;
    StencilId::all()
        .filter(|s| *s != StencilId::of(1, 0))
        .filter(|s| {
            (0..=SAMPLES).all(|k| {
                let kappa = std::f64::consts::PI * k as f64 / SAMPLES as f64;
                analytic_modified_wavenumber(*s, kappa).kappa_prime_im <= TOL
            })
        })
        .collect()
}

/// Step size of the probe relative to `dx`.
pub const ADR_STEP: f64 = 1e-6;

/// Default number of grid points used by the probe.
pub const ADR_POINTS: usize = 64;

fn fourier_mode<T: Real>(re: &[T], im: &[T], kappa: T) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (j, (a, b)) in re.iter().zip(im).enumerate() {
        let phase = -kappa * T::from_usize(j).unwrap();
        acc = acc + Complex::new(*a, *b) * Complex::new(phase.cos(), phase.sin());
    }
    acc
}

/// Approximate dispersion relation at `kappa = 2 pi mode / n_points`.
pub fn adr_mode<T: Real>(recon: &Reconstructor<T>, mode: usize, n_points: usize) -> Result<SpectralSample<T>> {
    if n_points < 8 || 2 * mode > n_points {
        return Err(Error::InvalidArgument(format!(
            "adr needs n_points >= 8 and 0 <= mode <= n_points/2, got mode {mode}, n_points {n_points}"
        )));
    }
    let kappa = T::TAU() * T::from_usize(mode).unwrap() / T::from_usize(n_points).unwrap();
    // dx = 1 so that x_j = j and k dx = kappa
    let dx = T::one();
    let len = T::from_usize(n_points).unwrap();
    let carrier = |f: fn(T) -> T| {
        ScalarGrid::from_fn(T::zero(), len, n_points, ScalarBoundary::Periodic, move |x| f(kappa * x))
    };
    let re0 = carrier(T::cos);
    let im0 = carrier(T::sin);
    let flux = LinearAdvection { c: T::one() };
    let tau = lit::<T>(ADR_STEP) * dx;

    let advance = |g: &ScalarGrid<T>| -> Result<Vec<T>> {
        let rate = semidiscrete_rhs(g, recon, &flux)?;
        Ok(g.interior().iter().zip(&rate).map(|(u, r)| *u + tau * *r).collect())
    };
    let re1 = advance(&re0)?;
    let im1 = advance(&im0)?;

    let before = fourier_mode(re0.interior(), im0.interior(), kappa);
    let after = fourier_mode(&re1, &im1, kappa);
    let floor = T::min_positive_value().sqrt();
    if before.norm() < floor || after.norm() < floor {
        return Err(Error::DegenerateProbe(format!("mode {mode} amplitude underflow")));
    }
    let kp = Complex::new(T::zero(), dx / tau) * (after / before - T::one());
    Ok(SpectralSample {
        kappa,
        kappa_prime_re: kp.re,
        kappa_prime_im: kp.im,
    })
}

/// Approximate dispersion relation at `kappa`, which must be a grid wavenumber
/// `2 pi mode / n_points`.
pub fn adr<T: Real>(recon: &Reconstructor<T>, kappa: T, n_points: usize) -> Result<SpectralSample<T>> {
    let mode_f = kappa * T::from_usize(n_points).unwrap() / T::TAU();
    let mode = mode_f.round();
    if (mode_f - mode).abs() > lit(1e-9) || mode < T::zero() {
        return Err(Error::InvalidArgument(format!(
            "kappa {kappa} is not a grid wavenumber for {n_points} points"
        )));
    }
    adr_mode(recon, mode.to_usize().unwrap(), n_points)
}

/// Row of a spectral table: analytic reference next to the measured curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralRow<T> {
    pub kappa: T,
    pub re_analytic: T,
    pub im_analytic: T,
    pub re_adr: T,
    pub im_adr: T,
}

pub const SPECTRAL_HEADER: &str = "kappa,re_analytic,im_analytic,re_adr,im_adr";

/// Sweeps every grid wavenumber `0..=n_points/2`, pairing the ADR of `recon`
/// with the analytic curve of `reference`.
pub fn adr_table<T: Real>(recon: &Reconstructor<T>, reference: StencilId, n_points: usize) -> Result<Vec<SpectralRow<T>>> {
    (0..=n_points / 2)
        .map(|mode| {
            let m = adr_mode(recon, mode, n_points)?;
            let a = analytic_modified_wavenumber(reference, m.kappa);
            Ok(SpectralRow {
                kappa: m.kappa,
                re_analytic: a.kappa_prime_re,
                im_analytic: a.kappa_prime_im,
                re_adr: m.kappa_prime_re,
                im_adr: m.kappa_prime_im,
            })
        })
        .collect()
}

/// Writes rows with 17 significant digits.
pub fn write_spectral_csv<T: Real, W: Write>(mut out: W, rows: &[SpectralRow<T>]) -> io::Result<()> {
    writeln!(out, "{SPECTRAL_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.kappa.to_f64().unwrap(),
            r.re_analytic.to_f64().unwrap(),
            r.im_analytic.to_f64().unwrap(),
            r.re_adr.to_f64().unwrap(),
            r.im_adr.to_f64().unwrap()
        )?;
    }
    Ok(())
}
