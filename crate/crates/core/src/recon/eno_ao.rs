use super::indicator::pair_unchecked;
use super::scheme::SchemeOrder;
use super::stencil::{stencil_flux, FluxWindow, StencilId};
use crate::scalar::Scalar;

/// Fifth-order candidates, lowest priority first.
pub const CANDIDATES_5: [StencilId; 6] = [
    StencilId::of(0, 0),
    StencilId::of(0, 1),
    StencilId::of(1, 1),
    StencilId::of(2, 1),
    StencilId::of(1, 2),
    StencilId::of(2, 2),
];

/// Seventh-order candidates, lowest priority first.
pub const CANDIDATES_7: [StencilId; 9] = [
    StencilId::of(0, 0),
    StencilId::of(0, 1),
    StencilId::of(1, 1),
    StencilId::of(2, 1),
    StencilId::of(1, 2),
    StencilId::of(2, 2),
    StencilId::of(3, 2),
    StencilId::of(2, 3),
    StencilId::of(3, 3),
];

impl SchemeOrder {
    pub fn candidates(self) -> &'static [StencilId] {
        match self {
            SchemeOrder::Order5 => &CANDIDATES_5,
            SchemeOrder::Order7 => &CANDIDATES_7,
        }
    }
}

/// Stencil chosen by the ENO-AO selection rule.
///
/// Candidates are scanned from the highest priority down and the first one
/// whose indicator is `<= delta` wins. If none qualifies, the candidate with
/// the smallest indicator is taken; ties go to the higher-priority candidate.
#[inline(always)]
pub fn eno_ao_select<T: Scalar>(window: &FluxWindow<T>, order: SchemeOrder, delta: T) -> StencilId {
    macro_rules! scan {
        ($cands:ident, [$($k:literal),*]) => {{
            let mut scores = [T::zero(); $cands.len()];
            $(
                let is = pair_unchecked(window, $cands[$k]).indicator;
                if is <= delta {
                    return $cands[$k];
                }
                scores[$k] = is;
            )*
            fallback(&scores, &$cands)
        }};
    }
    match order {
        SchemeOrder::Order5 => scan!(CANDIDATES_5, [5, 4, 3, 2, 1, 0]),
        SchemeOrder::Order7 => scan!(CANDIDATES_7, [8, 7, 6, 5, 4, 3, 2, 1, 0]),
    }
}

/// Smallest indicator; ties go to the later candidate.
#[inline(always)]
fn fallback<T: Scalar>(scores: &[T], candidates: &[StencilId]) -> StencilId {
    let mut best = 0;
    let mut min = scores[0];
    for (k, &is) in scores.iter().enumerate().skip(1) {
        if is <= min {
            min = is;
            best = k;
        }
    }
    candidates[best]
}

/// ENO-AO reconstruction of `\hat f_{j+1/2}`.
#[inline(always)]
pub fn eno_ao_reconstruct<T: Scalar>(window: &FluxWindow<T>, order: SchemeOrder, delta: T) -> T {
    stencil_flux(window, eno_ao_select(window, order, delta))
}
