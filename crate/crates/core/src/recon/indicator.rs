use super::stencil::{combine, FluxWindow, StencilId};
use crate::scalar::Scalar;

/// Min-discrepancy smoothness indicator of a candidate stencil.
///
/// `delta_l` (`delta_r`) is the mismatch between the candidate polynomial and
/// the cell value just left (right) of the stencil; `indicator` is the smaller
/// of the two. For `S(0,0)` both sides average the first two one-sided
/// differences so that the indicator does not vanish at first-order extrema.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmoothnessPair<T> {
    pub delta_l: T,
    pub delta_r: T,
    pub indicator: T,
}

/// Alternating binomial coefficients of the `d`-th undivided difference,
/// ending in `+1`.
#[inline(always)]
pub(crate) fn difference_coefficients(d: usize) -> &'static [i64] {
    match d {
        2 => &[1, -2, 1],
        3 => &[-1, 3, -3, 1],
        4 => &[1, -4, 6, -4, 1],
        5 => &[-1, 5, -10, 10, -5, 1],
        6 => &[1, -6, 15, -20, 15, -6, 1],
        7 => &[-1, 7, -21, 35, -35, 21, -7, 1],
        _ => unreachable!("difference order {d}"),
    }
}

/// True for the nine linearly stable candidates scored by ENO-AO.
pub(crate) fn is_candidate(s: StencilId) -> bool {
    matches!(
        (s.m(), s.n()),
        (0, 0) | (0, 1) | (1, 1) | (2, 1) | (1, 2) | (2, 2) | (3, 2) | (2, 3) | (3, 3)
    )
}

#[inline(always)]
pub(crate) fn pair_unchecked<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> SmoothnessPair<T> {
    let f = &window.0;
    let (delta_l, delta_r) = if s.m() == 0 && s.n() == 0 {
        let two = T::int(2);
        (
            ((f[3] - f[4]).magnitude() + (f[2] - f[3]).magnitude()) / two,
            ((f[5] - f[4]).magnitude() + (f[6] - f[5]).magnitude()) / two,
        )
    } else {
        let d = s.width();
        let coeffs = difference_coefficients(d);
        let left = 3 - s.m();
        (
            combine(&f[left..left + d + 1], coeffs).magnitude(),
            combine(&f[left + 1..left + d + 2], coeffs).magnitude(),
        )
    };
    SmoothnessPair {
        delta_l,
        delta_r,
        indicator: T::min_of(delta_l, delta_r),
    }
}

/// Smoothness indicator of candidate `s`, or `None` when `s` is not one of the
/// nine linearly stable candidates (those are never scored).
pub fn smoothness_pair<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> Option<SmoothnessPair<T>> {
    is_candidate(s).then(|| pair_unchecked(window, s))
}
