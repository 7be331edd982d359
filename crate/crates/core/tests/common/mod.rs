//! Exact-rational polynomial reconstruction used as an independent oracle.
#![allow(dead_code)]

use enoao_core::{Exact, StencilId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub fn q(n: i128, d: i128) -> Exact {
    Exact::new(n, d)
}

fn pow(x: Exact, p: u32) -> Exact {
    (0..p).fold(Exact::one(), |acc, _| acc * x)
}

/// Mean of `x^p` over the unit cell centred on `k`.
pub fn cell_average_monomial(p: u32, k: i128) -> Exact {
    let half = q(1, 2);
    let kk = q(k, 1);
    (pow(kk + half, p + 1) - pow(kk - half, p + 1)) / q(p as i128 + 1, 1)
}

/// Solves `a x = b` by Gaussian elimination with exact pivoting.
pub fn solve(mut a: Vec<Vec<Exact>>, mut b: Vec<Exact>) -> Vec<Exact> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular system");
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col] / a[col][col];
                for c in col..n {
                    let v = a[col][c];
                    a[r][c] = a[r][c] - f * v;
                }
                let v = b[col];
                b[r] = b[r] - f * v;
            }
        }
    }
    (0..n).map(|i| b[i] / a[i][i]).collect()
}

/// Monomial coefficients of the polynomial whose cell averages on cells
/// `-m..=n` (unit spacing, target cell at 0) equal `values`.
pub fn fit(s: StencilId, values: &[Exact]) -> Vec<Exact> {
    let (m, n) = (s.m() as i128, s.n() as i128);
    let deg = (m + n) as u32;
    let rows: Vec<Vec<Exact>> = (-m..=n)
        .map(|k| (0..=deg).map(|p| cell_average_monomial(p, k)).collect())
        .collect();
    solve(rows, values.to_vec())
}

pub fn eval(coeffs: &[Exact], x: Exact) -> Exact {
    coeffs.iter().rev().fold(Exact::zero(), |acc, c| acc * x + *c)
}

/// Mean of the polynomial over the cell centred on `k`.
pub fn cell_average(coeffs: &[Exact], k: i128) -> Exact {
    coeffs
        .iter()
        .enumerate()
        .fold(Exact::zero(), |acc, (p, c)| acc + *c * cell_average_monomial(p as u32, k))
}

/// Interface value `P(1/2)` of the reconstruction on `s` from window values
/// (index 4 = target cell).
pub fn interface_value(s: StencilId, window: &[Exact; 9]) -> Exact {
    let values = &window[4 - s.m()..=4 + s.n()];
    eval(&fit(s, values), q(1, 2))
}

/// `sin x` from its Taylor series in exact arithmetic, rounded to a multiple
/// of `2^-100`.
pub fn sin_sample(x: &BigRational) -> Exact {
    let x2 = x * x;
    let mut term = x.clone();
    let mut sum = term.clone();
    for k in 1..40u32 {
        term = -term * &x2 / BigRational::from_integer(BigInt::from((2 * k) * (2 * k + 1)));
        sum += &term;
    }
    let scale = BigRational::from_integer(BigInt::one() << 100);
    let n = (sum * scale).round().to_integer().to_i128().unwrap();
    Exact::new(n, 1i128 << 100)
}

/// Least-squares slope of `ys` against `xs`.
pub fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
