//! WENO-Z baseline (fifth and seventh order).
//!
//! The global smoothness measure is `tau5 = |b0 - b2|` for `r = 3` and
//! `tau7 = |b0 + 3 b1 - 3 b2 - b3|` for `r = 4`; weights are
//! `a_k = d_k (1 + (tau / (b_k + eps))^p)`, normalised to sum to one.
//! The sub-stencil indicators `b_k` are the Jiang–Shu integrals of the squared
//! derivatives of the sub-stencil polynomial, written out as sums of squares.

use super::scheme::SchemeOrder;
use super::stencil::{stencil_flux, FluxWindow, StencilId};
use crate::scalar::{Real, Scalar};

/// Upwind-biased three-point sub-stencils of `S(2,2)`.
pub const SUBSTENCILS_5: [StencilId; 3] = [StencilId::of(2, 0), StencilId::of(1, 1), StencilId::of(0, 2)];

/// Four-point sub-stencils of `S(3,3)`.
pub const SUBSTENCILS_7: [StencilId; 4] = [
    StencilId::of(3, 0),
    StencilId::of(2, 1),
    StencilId::of(1, 2),
    StencilId::of(0, 3),
];

/// Linear weights `d_k` as `(numerator, denominator)`. They make the weighted
/// sum of sub-stencil fluxes equal the full-stencil flux.
#[inline(always)]
pub fn ideal_weights(order: SchemeOrder) -> &'static [(i64, i64)] {
    match order {
        SchemeOrder::Order5 => &[(1, 10), (6, 10), (3, 10)],
        SchemeOrder::Order7 => &[(1, 35), (12, 35), (18, 35), (4, 35)],
    }
}

impl SchemeOrder {
    pub fn substencils(self) -> &'static [StencilId] {
        match self {
            SchemeOrder::Order5 => &SUBSTENCILS_5,
            SchemeOrder::Order7 => &SUBSTENCILS_7,
        }
    }
}

#[inline(always)]
fn sq<T: Scalar>(x: T) -> T {
    x * x
}

/// Four-point indicator `(s/6)^2 + 13/12 q^2 + 781/720 t^2`.
#[inline(always)]
fn cubic_beta<T: Scalar>(s: T, q: T, t: T) -> T {
    let i = |v: i64| T::int(v);
    sq(s) / i(36) + i(13) / i(12) * sq(q) + i(781) / i(720) * sq(t)
}

/// Jiang–Shu smoothness indicator of a WENO-Z sub-stencil, or `None` when `s`
/// is not one of the seven supported sub-stencils.
#[inline(always)]
pub fn jiang_shu_beta<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> Option<T> {
    let f = |k: isize| window.at(k);
    let i = |v: i64| T::int(v);
    let beta = match (s.m(), s.n()) {
        (2, 0) => {
            let (a, b, c) = (f(-2), f(-1), f(0));
            i(13) / i(12) * sq(a - i(2) * b + c) + sq(a - i(4) * b + i(3) * c) / i(4)
        }
        (1, 1) => {
            let (a, b, c) = (f(-1), f(0), f(1));
            i(13) / i(12) * sq(a - i(2) * b + c) + sq(a - c) / i(4)
        }
        (0, 2) => {
            let (a, b, c) = (f(0), f(1), f(2));
            i(13) / i(12) * sq(a - i(2) * b + c) + sq(i(3) * a - i(4) * b + c) / i(4)
        }
        (3, 0) => {
            let (a, b, c, d) = (f(-3), f(-2), f(-1), f(0));
            cubic_beta(
                i(2) * a - i(9) * b + i(18) * c - i(11) * d,
                -a + i(4) * b - i(5) * c + i(2) * d,
                a - i(3) * b + i(3) * c - d,
            )
        }
        (2, 1) => {
            let (a, b, c, d) = (f(-2), f(-1), f(0), f(1));
            cubic_beta(a - i(6) * b + i(3) * c + i(2) * d, b - i(2) * c + d, a - i(3) * b + i(3) * c - d)
        }
        (1, 2) => {
            let (a, b, c, d) = (f(-1), f(0), f(1), f(2));
            cubic_beta(i(2) * a + i(3) * b - i(6) * c + d, a - i(2) * b + c, a - i(3) * b + i(3) * c - d)
        }
        (0, 3) => {
            let (a, b, c, d) = (f(0), f(1), f(2), f(3));
            cubic_beta(
                i(11) * a - i(18) * b + i(9) * c - i(2) * d,
                i(2) * a - i(5) * b + i(4) * c - d,
                a - i(3) * b + i(3) * c - d,
            )
        }
        _ => return None,
    };
    Some(beta)
}

/// Normalised WENO-Z weights of the `R` sub-stencils `subs`.
#[inline(always)]
fn weights_fixed<T: Real, const R: usize, const UNIT_POWER: bool>(
    window: &FluxWindow<T>,
    subs: &[StencilId; R],
    eps: T,
    p: T,
) -> [T; R] {
    let mut beta = [T::zero(); R];
    for k in 0..R {
        beta[k] = jiang_shu_beta(window, subs[k]).expect("supported sub-stencil");
    }
    let tau = if R == 3 {
        (beta[0] - beta[R - 1]).abs()
    } else {
        let three = T::int(3);
        (beta[0] + three * beta[1] - three * beta[R - 2] - beta[R - 1]).abs()
    };
    let ideal = ideal_weights(if R == 3 { SchemeOrder::Order5 } else { SchemeOrder::Order7 });
    let mut alpha = [T::zero(); R];
    let mut sum = T::zero();
    for k in 0..R {
        let (num, den) = ideal[k];
        let ratio = tau / (beta[k] + eps);
        let boost = if UNIT_POWER { ratio } else { ratio.powf(p) };
        alpha[k] = T::int(num) / T::int(den) * (T::one() + boost);
        sum = sum + alpha[k];
    }
    for a in alpha.iter_mut() {
        *a = *a / sum;
    }
    alpha
}

#[inline(always)]
fn reconstruct_fixed<T: Real, const R: usize>(window: &FluxWindow<T>, subs: &[StencilId; R], eps: T, p: T) -> T {
    let w = if p == T::one() {
        weights_fixed::<T, R, true>(window, subs, eps, p)
    } else {
        weights_fixed::<T, R, false>(window, subs, eps, p)
    };
    let mut acc = T::zero();
    for k in 0..R {
        acc = acc + w[k] * stencil_flux(window, subs[k]);
    }
    acc
}

/// Nonlinear WENO-Z weights for the sub-stencils of `order`.
pub fn weno_z_weights<T: Real>(window: &FluxWindow<T>, order: SchemeOrder, eps: T, p: T) -> Vec<T> {
    match order {
        SchemeOrder::Order5 => weights_fixed::<T, 3, false>(window, &SUBSTENCILS_5, eps, p).to_vec(),
        SchemeOrder::Order7 => weights_fixed::<T, 4, false>(window, &SUBSTENCILS_7, eps, p).to_vec(),
    }
}

/// WENO-Z reconstruction of `\hat f_{j+1/2}`.
#[inline(always)]
pub fn weno_z_reconstruct<T: Real>(window: &FluxWindow<T>, order: SchemeOrder, eps: T, p: T) -> T {
    match order {
        SchemeOrder::Order5 => reconstruct_fixed(window, &SUBSTENCILS_5, eps, p),
        SchemeOrder::Order7 => reconstruct_fixed(window, &SUBSTENCILS_7, eps, p),
    }
}
