use std::fmt;

use crate::scalar::Scalar;

/// Candidate stencil `S_{j-m}^{j+n}`: `m` cells left and `n` cells right of `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StencilId {
    m: u8,
    n: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("stencil ({m}, {n}) outside the 0..=3 x 0..=3 family")]
pub struct InvalidStencil {
    pub m: usize,
    pub n: usize,
}

impl StencilId {
    pub const fn new(m: usize, n: usize) -> Result<Self, InvalidStencil> {
        if m <= 3 && n <= 3 {
            Ok(Self {
                m: m as u8,
                n: n as u8,
            })
        } else {
            Err(InvalidStencil { m, n })
        }
    }

    /// Compile-time constructor; panics on an invalid pair.
    pub const fn of(m: usize, n: usize) -> Self {
        match Self::new(m, n) {
            Ok(s) => s,
            Err(_) => panic!("invalid stencil"),
        }
    }

    #[inline]
    pub const fn m(self) -> usize {
        self.m as usize
    }

    #[inline]
    pub const fn n(self) -> usize {
        self.n as usize
    }

    /// Number of cells in the stencil.
    pub const fn width(self) -> usize {
        self.m as usize + self.n as usize + 1
    }

    /// All sixteen stencils, ordered by `m` then `n`.
    pub fn all() -> impl Iterator<Item = StencilId> {
        (0..4).flat_map(|m| (0..4).map(move |n| StencilId::of(m, n)))
    }
}

impl fmt::Display for StencilId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.m, self.n)
    }
}

/// Nine consecutive split-flux values; index 4 is the target cell `j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FluxWindow<T>(pub [T; 9]);

impl<T: Scalar> FluxWindow<T> {
    pub const CENTER: usize = 4;

    #[inline(always)]
    pub fn new(values: [T; 9]) -> Self {
        Self(values)
    }

    /// Copies the nine values starting at `slice[0]`.
    ///
    /// Panics if the slice is shorter than nine.
    #[inline(always)]
    pub fn from_slice(slice: &[T]) -> Self {
        let mut v = [T::zero(); 9];
        v.copy_from_slice(&slice[..9]);
        Self(v)
    }

    #[inline(always)]
    pub fn values(&self) -> &[T; 9] {
        &self.0
    }

    /// Value at offset `k` from the centre, `-4 <= k <= 4`.
    #[inline(always)]
    pub fn at(&self, k: isize) -> T {
        self.0[(Self::CENTER as isize + k) as usize]
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self(self.0.map(f))
    }
}

impl<T> From<[T; 9]> for FluxWindow<T> {
    fn from(values: [T; 9]) -> Self {
        Self(values)
    }
}

/// Index-reversed window. The minus-flux at `x_{j+1/2}` equals the plus
/// reconstruction of the mirrored window centred on `j+1`.
#[inline(always)]
pub fn mirror_window<T: Copy>(window: &FluxWindow<T>) -> FluxWindow<T> {
    let mut v = window.0;
    v.reverse();
    FluxWindow(v)
}

/// Integer numerators for `f_{j-m} ..= f_{j+n}` and the common denominator.
#[inline(always)]
pub fn stencil_coefficients(s: StencilId) -> (&'static [i64], i64) {
    match (s.m(), s.n()) {
        (0, 0) => (&[1], 1),
        (0, 1) => (&[1, 1], 2),
        (0, 2) => (&[2, 5, -1], 6),
        (0, 3) => (&[3, 13, -5, 1], 12),
        (1, 0) => (&[-1, 3], 2),
        (1, 1) => (&[-1, 5, 2], 6),
        (1, 2) => (&[-1, 7, 7, -1], 12),
        (1, 3) => (&[-3, 27, 47, -13, 2], 60),
        (2, 0) => (&[2, -7, 11], 6),
        (2, 1) => (&[1, -5, 13, 3], 12),
        (2, 2) => (&[2, -13, 47, 27, -3], 60),
        (2, 3) => (&[1, -8, 37, 37, -8, 1], 60),
        (3, 0) => (&[-3, 13, -23, 25], 12),
        (3, 1) => (&[-3, 17, -43, 77, 12], 60),
        (3, 2) => (&[-1, 7, -23, 57, 22, -2], 60),
        (3, 3) => (&[-3, 25, -101, 319, 214, -38, 4], 420),
        _ => unreachable!("StencilId is validated at construction"),
    }
}

/// `c[0]*v[0] + c[1]*v[1] + ...`, accumulated left to right.
#[inline(always)]
pub(crate) fn combine<T: Scalar>(values: &[T], coeffs: &[i64]) -> T {
    match coeffs.len() {
        1 => combine_fixed::<T, 1>(values, coeffs),
        2 => combine_fixed::<T, 2>(values, coeffs),
        3 => combine_fixed::<T, 3>(values, coeffs),
        4 => combine_fixed::<T, 4>(values, coeffs),
        5 => combine_fixed::<T, 5>(values, coeffs),
        6 => combine_fixed::<T, 6>(values, coeffs),
        7 => combine_fixed::<T, 7>(values, coeffs),
        8 => combine_fixed::<T, 8>(values, coeffs),
        _ => combine_fixed::<T, 9>(values, coeffs),
    }
}

#[inline(always)]
fn combine_fixed<T: Scalar, const W: usize>(values: &[T], coeffs: &[i64]) -> T {
    let v: &[T; W] = values[..W].try_into().unwrap();
    let c: &[i64; W] = coeffs.try_into().unwrap();
    let mut acc = T::int(c[0]) * v[0];
    for k in 1..W {
        acc = acc + T::int(c[k]) * v[k];
    }
    acc
}

/// Linear interface flux `\hat f_{j+1/2}` on stencil `s`.
#[inline(always)]
pub fn stencil_flux<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> T {
    macro_rules! arms {
        ($(($m:literal, $n:literal)),*) => {
            match (s.m(), s.n()) {
                $(($m, $n) => flux_on(window, const { StencilId::of($m, $n) }),)*
                _ => unreachable!(),
            }
        };
    }
    arms!(
        (0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3),
        (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2), (3, 3)
    )
}

#[inline(always)]
fn flux_on<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> T {
    let (coeffs, den) = stencil_coefficients(s);
    let start = FluxWindow::<T>::CENTER - s.m();
    let num = combine(&window.0[start..start + s.width()], coeffs);
    if den == 1 {
        num
    } else {
        num / T::int(den)
    }
}

/// Fixed-stencil reconstruction (UW5 = `S(2,2)`, UW7 = `S(3,3)`).
#[inline(always)]
pub fn linear_reconstruct<T: Scalar>(window: &FluxWindow<T>, s: StencilId) -> T {
    stencil_flux(window, s)
}
