use super::state::{Gas, PrimitiveState};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Roe-averaged interface state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RoeState<T> {
    pub rho: T,
    pub u: T,
    pub v: T,
    /// Total specific enthalpy.
    pub h: T,
    pub c: T,
}

/// Square-root-density weighted average of two positive states.
pub fn roe_average<T: Real>(gas: &Gas<T>, left: &PrimitiveState<T>, right: &PrimitiveState<T>) -> Result<RoeState<T>> {
    let (rl, rr) = (left.rho.sqrt(), right.rho.sqrt());
    let inv = T::one() / (rl + rr);
    let u = (rl * left.u + rr * right.u) * inv;
    let v = (rl * left.v + rr * right.v) * inv;
    let h = (rl * gas.enthalpy(left) + rr * gas.enthalpy(right)) * inv;
    let half = T::one() / T::int(2);
    let c2 = (gas.gamma - T::one()) * (h - half * (u * u + v * v));
    if !(c2 > T::zero()) {
        return Err(Error::Positivity {
            location: "Roe average".into(),
            rho: (rl * rr).to_f64().unwrap_or(f64::NAN),
            p: c2.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(RoeState {
        rho: rl * rr,
        u,
        v,
        h,
        c: c2.sqrt(),
    })
}

/// Eigen-decomposition of the x-flux Jacobian at a Roe state.
///
/// Fields are ordered by eigenvalue: `u - c`, `u` (shear, 2D only), `u`
/// (entropy), `u + c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharacteristicDecomposition<T, const N: usize> {
    /// Rows are left eigenvectors.
    pub left: [[T; N]; N],
    /// Columns are right eigenvectors.
    pub right: [[T; N]; N],
    pub lambda: [T; N],
}

impl<T: Real, const N: usize> CharacteristicDecomposition<T, N> {
    pub fn new(gas: &Gas<T>, roe: &RoeState<T>) -> Self {
        assert!(N == 3 || N == 4, "Euler states have 3 or 4 components");
        let RoeState { u, v, h, c, .. } = *roe;
        let (zero, one) = (T::zero(), T::one());
        let half = one / T::int(2);
        let q2 = if N == 4 { u * u + v * v } else { u * u };
        let b1 = (gas.gamma - one) / (c * c);
        let b2 = half * b1 * q2;
        let ic = one / c;
        let mut left = [[zero; N]; N];
        let mut right = [[zero; N]; N];
        let mut lambda = [zero; N];
        let e = N - 1;

        lambda[0] = u - c;
        lambda[e] = u + c;
        right[0][0] = one;
        right[1][0] = u - c;
        right[e][0] = h - u * c;
        right[0][e] = one;
        right[1][e] = u + c;
        right[e][e] = h + u * c;
        left[0][0] = half * (b2 + u * ic);
        left[0][1] = -half * (b1 * u + ic);
        left[0][e] = half * b1;
        left[e][0] = half * (b2 - u * ic);
        left[e][1] = -half * (b1 * u - ic);
        left[e][e] = half * b1;

        // entropy wave
        let s = e - 1;
        lambda[s] = u;
        right[0][s] = one;
        right[1][s] = u;
        right[e][s] = half * q2;
        left[s][0] = one - b2;
        left[s][1] = b1 * u;
        left[s][e] = -b1;

        if N == 4 {
            right[2][0] = v;
            right[2][e] = v;
            right[2][s] = v;
            left[0][2] = -half * b1 * v;
            left[e][2] = -half * b1 * v;
            left[s][2] = b1 * v;
            // shear wave
            lambda[1] = u;
            right[2][1] = one;
            right[e][1] = v;
            left[1][0] = -v;
            left[1][2] = one;
        }
        Self { left, right, lambda }
    }

    /// Identity eigenvectors: characteristic reconstruction degenerates to
    /// component-wise reconstruction.
    pub fn identity() -> Self {
        let mut left = [[T::zero(); N]; N];
        for (k, row) in left.iter_mut().enumerate() {
            row[k] = T::one();
        }
        Self {
            left,
            right: left,
            lambda: [T::one(); N],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jacobian4(gas: &Gas<f64>, r: &RoeState<f64>) -> [[f64; 4]; 4] {
        let g = gas.gamma;
        let (u, v, h) = (r.u, r.v, r.h);
        let phi = 0.5 * (g - 1.0) * (u * u + v * v);
        [
            [0.0, 1.0, 0.0, 0.0],
            [phi - u * u, (3.0 - g) * u, -(g - 1.0) * v, g - 1.0],
            [-u * v, v, u, 0.0],
            [u * (phi - h), h - (g - 1.0) * u * u, -(g - 1.0) * u * v, g * u],
        ]
    }

    fn jacobian3(gas: &Gas<f64>, r: &RoeState<f64>) -> [[f64; 3]; 3] {
        let j = jacobian4(gas, &RoeState { v: 0.0, ..*r });
        [
            [j[0][0], j[0][1], j[0][3]],
            [j[1][0], j[1][1], j[1][3]],
            [j[3][0], j[3][1], j[3][3]],
        ]
    }

    fn check<const N: usize>(d: &CharacteristicDecomposition<f64, N>, a: &[[f64; N]; N]) {
        let scale = a.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
        for i in 0..N {
            for j in 0..N {
                let lr: f64 = (0..N).map(|k| d.left[i][k] * d.right[k][j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((lr - expect).abs() < 1e-12, "L R [{i}][{j}] = {lr}");
                let rl: f64 = (0..N).map(|k| d.right[i][k] * d.lambda[k] * d.left[k][j]).sum();
                assert!((rl - a[i][j]).abs() <= 1e-10 * scale, "R diag L [{i}][{j}] = {rl} vs {}", a[i][j]);
            }
        }
    }

    #[test]
    fn identical_states_average_to_themselves() {
        let gas = Gas::<f64>::air();
        let w = PrimitiveState::new_2d(1.3, 0.4, -0.2, 2.0);
        let r = roe_average(&gas, &w, &w).unwrap();
        assert!((r.rho - 1.3).abs() < 1e-15 && (r.u - 0.4).abs() < 1e-15 && (r.v + 0.2).abs() < 1e-15);
        assert!((r.h - gas.enthalpy(&w)).abs() < 1e-14);
        assert!((r.c - gas.sound_speed(1.3, 2.0)).abs() < 1e-14);
    }

    #[test]
    fn density_is_geometric_mean() {
        let gas = Gas::<f64>::air();
        let r = roe_average(&gas, &PrimitiveState::new(1.0, 0.0, 1.0), &PrimitiveState::new(4.0, 0.0, 1.0)).unwrap();
        assert_eq!((r.rho, r.u), (2.0, 0.0));
    }

    #[test]
    fn eigen_identities() {
        let gas = Gas::<f64>::air();
        let cases = [
            (PrimitiveState::new_2d(1.0, 0.0, 0.0, 1.0), PrimitiveState::new_2d(0.125, 0.0, 0.0, 0.1)),
            (PrimitiveState::new_2d(8.0, 7.14, -4.125, 116.5), PrimitiveState::new_2d(1.4, 0.0, 0.0, 1.0)),
            (PrimitiveState::new_2d(0.138, 1.206, 1.206, 0.029), PrimitiveState::new_2d(0.5323, 0.0, 1.206, 0.3)),
        ];
        for (l, r) in cases {
            let roe = roe_average(&gas, &l, &r).unwrap();
            check(&CharacteristicDecomposition::<f64, 4>::new(&gas, &roe), &jacobian4(&gas, &roe));
            let roe1 = roe_average(&gas, &PrimitiveState { v: 0.0, ..l }, &PrimitiveState { v: 0.0, ..r }).unwrap();
            check(&CharacteristicDecomposition::<f64, 3>::new(&gas, &roe1), &jacobian3(&gas, &roe1));
        }
    }

    #[test]
    fn nan_average_is_rejected() {
        let gas = Gas::<f64>::air();
        let l = PrimitiveState::new(1.0, f64::NAN, 1.0);
        assert!(matches!(roe_average(&gas, &l, &l), Err(Error::Positivity { .. })));
    }
}
