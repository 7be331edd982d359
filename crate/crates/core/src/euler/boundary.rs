use super::state::{ConservedState, Gas, PrimitiveState};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::GHOST;

/// Ghost-point treatment of one side of a grid.
///
/// Non-periodic sides own their boundary point, so a non-periodic direction
/// with `n` intervals stores `n + 1` unknowns.
#[derive(Clone, Debug, PartialEq)]
pub enum Boundary<T> {
    /// Must be set on both sides of a direction.
    Periodic,
    /// Zeroth-order extrapolation of the boundary point.
    Outflow,
    /// Reflection about the boundary point with the normal momentum negated.
    Wall,
    /// Prescribed state.
    Fixed(PrimitiveState<T>),
    /// `lower` where the coordinate along the side is `<= at`, `upper` elsewhere.
    Split {
        at: T,
        lower: Box<Boundary<T>>,
        upper: Box<Boundary<T>>,
    },
    /// `behind` where the coordinate along the side is below
    /// `origin + speed * t + lean * d`, `ahead` elsewhere; `d` is the outward
    /// distance of the ghost from the side.
    MovingShock {
        origin: T,
        speed: T,
        lean: T,
        behind: PrimitiveState<T>,
        ahead: PrimitiveState<T>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Resolved<T, const N: usize> {
    Outflow,
    Wall,
    Fixed(ConservedState<T, N>),
}

impl<T: Real> Boundary<T> {
    pub fn is_periodic(&self) -> bool {
        matches!(self, Boundary::Periodic)
    }

    /// Treatment at coordinate `s` along the side, outward distance `d`, time `t`.
    pub(crate) fn resolve<const N: usize>(&self, gas: &Gas<T>, s: T, d: T, t: T) -> Resolved<T, N> {
        match self {
            Boundary::Periodic => unreachable!("periodic sides are filled pairwise"),
            Boundary::Outflow => Resolved::Outflow,
            Boundary::Wall => Resolved::Wall,
            Boundary::Fixed(w) => Resolved::Fixed(gas.conserved_unchecked(w)),
            Boundary::Split { at, lower, upper } => {
                if s <= *at {
                    lower.resolve(gas, s, d, t)
                } else {
                    upper.resolve(gas, s, d, t)
                }
            }
            Boundary::MovingShock { origin, speed, lean, behind, ahead } => {
                if s < *origin + *speed * t + *lean * d {
                    Resolved::Fixed(gas.conserved_unchecked(behind))
                } else {
                    Resolved::Fixed(gas.conserved_unchecked(ahead))
                }
            }
        }
    }

    /// Rejects unphysical prescribed states.
    pub fn validate(&self) -> Result<()> {
        let bad = |w: &PrimitiveState<T>| -> Result<()> {
            w.check(|| "boundary state".into()).map(|_| ())
        };
        match self {
            Boundary::Periodic | Boundary::Outflow | Boundary::Wall => Ok(()),
            Boundary::Fixed(w) => bad(w),
            Boundary::Split { lower, upper, .. } => {
                if lower.is_periodic() || upper.is_periodic() {
                    return Err(Error::InvalidArgument("periodic branch inside a split boundary".into()));
                }
                lower.validate()?;
                upper.validate()
            }
            Boundary::MovingShock { behind, ahead, .. } => {
                bad(behind)?;
                bad(ahead)
            }
        }
    }
}

/// Boundaries of a 2D rectangle.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundarySpec<T> {
    pub left: Boundary<T>,
    pub right: Boundary<T>,
    pub bottom: Boundary<T>,
    pub top: Boundary<T>,
}

impl<T: Real> BoundarySpec<T> {
    pub fn uniform(b: Boundary<T>) -> Self {
        Self {
            left: b.clone(),
            right: b.clone(),
            bottom: b.clone(),
            top: b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_pair(&self.left, &self.right, "x")?;
        check_pair(&self.bottom, &self.top, "y")
    }
}

pub(crate) fn check_pair<T: Real>(a: &Boundary<T>, b: &Boundary<T>, axis: &str) -> Result<()> {
    if a.is_periodic() != b.is_periodic() {
        return Err(Error::InvalidArgument(format!("{axis}: periodic boundaries must be paired")));
    }
    a.validate()?;
    b.validate()
}

/// Fills the ghosts of one end of a line.
///
/// `inner(k)` is the storage index of the `k`-th unknown counted inwards from
/// the boundary point (`k = 0`); `ghost(k)` that of the `k`-th ghost outwards
/// (`k = 1 ..= GHOST`). `kind(k)` is the treatment of ghost `k`.
pub(crate) fn fill_end<T: Real, const N: usize>(
    data: &mut [ConservedState<T, N>],
    inner: impl Fn(usize) -> usize,
    ghost: impl Fn(usize) -> usize,
    kind: impl Fn(usize) -> Resolved<T, N>,
    normal: usize,
) {
    for k in 1..=GHOST {
        data[ghost(k)] = match kind(k) {
            Resolved::Outflow => data[inner(0)],
            Resolved::Wall => {
                let mut s = data[inner(k)];
                s[normal] = -s[normal];
                s
            }
            Resolved::Fixed(s) => s,
        };
    }
}

/// Periodic wrap of a line with `n` unknowns; `at(i)` maps an unknown offset in
/// `-GHOST .. n + GHOST` to storage.
pub(crate) fn fill_periodic<T: Copy, const N: usize>(
    data: &mut [ConservedState<T, N>],
    n: usize,
    at: impl Fn(isize) -> usize,
) {
    let n = n as isize;
    for k in 1..=GHOST as isize {
        data[at(-k)] = data[at(n - k)];
        data[at(n - 1 + k)] = data[at(k - 1)];
    }
}

/// Fills both ends of a line of `n` unknowns stored contiguously after `GHOST`
/// ghosts; `s` is the coordinate along the sides and `h` the spacing along
/// the line.
#[allow(clippy::too_many_arguments)]
pub(crate) fn fill_line<T: Real, const N: usize>(
    gas: &Gas<T>,
    line: &mut [ConservedState<T, N>],
    lo: &Boundary<T>,
    hi: &Boundary<T>,
    s: T,
    h: T,
    t: T,
    normal: usize,
) {
    let n = line.len() - 2 * GHOST;
    if lo.is_periodic() {
        fill_periodic(line, n, |i| (GHOST as isize + i) as usize);
        return;
    }
    let d = |k: usize| h * T::from_usize(k).unwrap();
    fill_end(line, |k| GHOST + k, |k| GHOST - k, |k| lo.resolve(gas, s, d(k), t), normal);
    fill_end(line, |k| GHOST + n - 1 - k, |k| GHOST + n - 1 + k, |k| hi.resolve(gas, s, d(k), t), normal);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(n: usize) -> Vec<[f64; 3]> {
        (0..n + 2 * GHOST).map(|i| [1.0 + i as f64, i as f64 - 3.0, 10.0 + i as f64]).collect()
    }

    #[test]
    fn periodic_wraps() {
        let gas = Gas::<f64>::air();
        let mut line = ramp(8);
        fill_line(&gas, &mut line, &Boundary::Periodic, &Boundary::Periodic, 0.0, 1.0, 0.0, 1);
        for k in 1..=GHOST {
            assert_eq!(line[GHOST - k], line[GHOST + 8 - k]);
            assert_eq!(line[GHOST + 8 - 1 + k], line[GHOST + k - 1]);
        }
    }

    #[test]
    fn wall_mirrors_with_normal_flip() {
        let gas = Gas::<f64>::air();
        let mut line = ramp(8);
        fill_line(&gas, &mut line, &Boundary::Wall, &Boundary::Outflow, 0.0, 1.0, 0.0, 1);
        for k in 1..=GHOST {
            let (g, m) = (line[GHOST - k], line[GHOST + k]);
            assert_eq!((g[0], g[1], g[2]), (m[0], -m[1], m[2]));
            assert_eq!(line[GHOST + 8 - 1 + k], line[GHOST + 7]);
        }
    }

    #[test]
    fn moving_shock_switch_point() {
        let gas = Gas::<f64>::air();
        let post = PrimitiveState::new_2d(8.0, 7.0, -4.0, 116.5);
        let pre = PrimitiveState::new_2d(1.4, 0.0, 0.0, 1.0);
        let sq3 = 3f64.sqrt();
        let b = Boundary::MovingShock { origin: 1.0 / 6.0 + 1.0 / sq3, speed: 20.0 / sq3, lean: 1.0 / sq3, behind: post, ahead: pre };
        let x_s = 1.0 / 6.0 + 1.0 / sq3;
        assert_eq!(b.resolve::<4>(&gas, x_s - 1e-9, 0.0, 0.0), Resolved::Fixed(gas.conserved_unchecked(&post)));
        assert_eq!(b.resolve::<4>(&gas, x_s + 1e-9, 0.0, 0.0), Resolved::Fixed(gas.conserved_unchecked(&pre)));
        let x_later = 1.0 / 6.0 + (1.0 + 20.0 * 0.1) / sq3;
        assert_eq!(b.resolve::<4>(&gas, x_later - 1e-9, 0.0, 0.1), Resolved::Fixed(gas.conserved_unchecked(&post)));
        let x_above = x_s + 0.05 / sq3;
        assert_eq!(b.resolve::<4>(&gas, x_above - 1e-9, 0.05, 0.0), Resolved::Fixed(gas.conserved_unchecked(&post)));
        assert_eq!(b.resolve::<4>(&gas, x_above + 1e-9, 0.05, 0.0), Resolved::Fixed(gas.conserved_unchecked(&pre)));
    }

    #[test]
    fn split_side() {
        let gas = Gas::<f64>::air();
        let b = Boundary::Split { at: 1.0 / 6.0, lower: Box::new(Boundary::Outflow), upper: Box::new(Boundary::Wall) };
        assert_eq!(b.resolve::<4>(&gas, 1.0 / 6.0, 0.0, 0.0), Resolved::Outflow);
        assert_eq!(b.resolve::<4>(&gas, 0.2, 0.0, 0.0), Resolved::Wall);
    }

    #[test]
    fn validation() {
        assert!(check_pair::<f64>(&Boundary::Periodic, &Boundary::Wall, "x").is_err());
        assert!(Boundary::Fixed(PrimitiveState::new(1.0, 0.0, -1.0)).validate().is_err());
        assert!(BoundarySpec::<f64>::uniform(Boundary::Outflow).validate().is_ok());
    }
}
