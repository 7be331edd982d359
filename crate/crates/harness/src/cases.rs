//! Registry of the benchmark problems.

use std::f64::consts::PI;
use std::fmt::{self, Write};
use std::str::FromStr;

use enoao_core::euler::{Boundary, BoundarySpec, Gas, PrimitiveState};
use enoao_core::scalar_law::composite_wave_initial;

use crate::error::HarnessError;

/// Governing equations of a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// `u_t + u_x = 0`.
    Advection,
    Euler1D,
    Euler2D,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Advection => "advection",
            Model::Euler1D => "euler-1d",
            Model::Euler2D => "euler-2d",
        })
    }
}

/// Number of mesh intervals per direction. On a periodic direction this is
/// also the number of unknowns; otherwise there is one more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mesh {
    Line(usize),
    Rect(usize, usize),
}

impl fmt::Display for Mesh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mesh::Line(n) => write!(f, "{n}"),
            Mesh::Rect(nx, ny) => write!(f, "{nx}x{ny}"),
        }
    }
}

impl FromStr for Mesh {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::config(format!("bad mesh `{s}` (expected N or NXxNY)"));
        let count = |t: &str| -> Result<usize, HarnessError> {
            match t.trim().parse::<usize>() {
                Ok(n) if n >= 2 => Ok(n),
                _ => Err(bad()),
            }
        };
        match s.split_once(['x', 'X']) {
            Some((a, b)) => Ok(Mesh::Rect(count(a)?, count(b)?)),
            None => Ok(Mesh::Line(count(s)?)),
        }
    }
}

/// Initial data, with the constants of each problem.
#[derive(Clone, Debug, PartialEq)]
pub enum Initial {
    /// `sin(pi x)`.
    Sine,
    /// Gaussians, square wave, triangle and half ellipse.
    Composite,
    /// `(rho, u, p)` left of `jump`, `right` elsewhere.
    ShockTube { jump: f64, left: [f64; 3], right: [f64; 3] },
    /// `left` before `jump`, then `(1 + amplitude sin(frequency pi x), 0, 1)`.
    ShockEntropy { jump: f64, left: [f64; 3], amplitude: f64, frequency: f64 },
    /// `(rho, u, v, p)` per quadrant around the origin.
    Quadrants {
        lower_left: [f64; 4],
        upper_left: [f64; 4],
        upper_right: [f64; 4],
        lower_right: [f64; 4],
    },
    /// Shock through `(x0, 0)` inclined `angle` degrees to the x axis, moving
    /// into `pre` with post-shock speed `speed` normal to it.
    ObliqueShock {
        x0: f64,
        angle: f64,
        post_rho: f64,
        speed: f64,
        post_p: f64,
        pre: [f64; 4],
        shock_speed: f64,
    },
    /// Heavy fluid below `interface`, light above, hydrostatic pressure and a
    /// `-amplitude c cos(wavenumber pi x)` vertical velocity.
    RayleighTaylor {
        interface: f64,
        heavy: f64,
        light: f64,
        amplitude: f64,
        wavenumber: f64,
    },
}

/// Spatial extent and boundary treatment.
#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Line { x: (f64, f64), left: Boundary<f64>, right: Boundary<f64> },
    Rect { x: (f64, f64), y: (f64, f64), boundary: BoundarySpec<f64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseSpec {
    pub name: &'static str,
    pub model: Model,
    pub geometry: Geometry,
    pub gamma: f64,
    pub initial: Initial,
    pub t_end: f64,
    /// Mesh used unless overridden; small enough for a desk machine.
    pub desk_mesh: Mesh,
    /// High-resolution mesh, selected by `--full`.
    pub full_mesh: Mesh,
    /// Body force along +y.
    pub gravity: Option<f64>,
}

fn quadrant_case(name: &'static str, q: [[f64; 4]; 4]) -> CaseSpec {
    CaseSpec {
        name,
        model: Model::Euler2D,
        geometry: Geometry::Rect {
            x: (-1.0, 1.0),
            y: (-1.0, 1.0),
            boundary: BoundarySpec::uniform(Boundary::Outflow),
        },
        gamma: 1.4,
        initial: Initial::Quadrants {
            lower_left: q[0],
            upper_left: q[1],
            upper_right: q[2],
            lower_right: q[3],
        },
        t_end: 1.0,
        desk_mesh: Mesh::Rect(400, 400),
        full_mesh: Mesh::Rect(800, 800),
        gravity: None,
    }
}

fn prim(w: [f64; 4]) -> PrimitiveState<f64> {
    PrimitiveState::new_2d(w[0], w[1], w[2], w[3])
}

fn dmr() -> CaseSpec {
    let initial = Initial::ObliqueShock {
        x0: 1.0 / 6.0,
        angle: 60.0,
        post_rho: 8.0,
        speed: 8.25,
        post_p: 116.5,
        pre: [1.4, 0.0, 0.0, 1.0],
        shock_speed: 10.0,
    };
    let (post, pre) = initial.oblique_states().unwrap();
    let Initial::ObliqueShock { x0, angle, shock_speed, .. } = initial else { unreachable!() };
    let slope = angle.to_radians().tan();
    let boundary = BoundarySpec {
        left: Boundary::Fixed(post),
        right: Boundary::Outflow,
        bottom: Boundary::Split {
            at: x0,
            lower: Box::new(Boundary::Outflow),
            upper: Box::new(Boundary::Wall),
        },
        // trace of the shock on y = 1
        top: Boundary::MovingShock {
            origin: x0 + 1.0 / slope,
            speed: shock_speed / angle.to_radians().sin(),
            lean: 1.0 / slope,
            behind: post,
            ahead: pre,
        },
    };
    CaseSpec {
        name: "dmr",
        model: Model::Euler2D,
        geometry: Geometry::Rect { x: (0.0, 4.0), y: (0.0, 1.0), boundary },
        gamma: 1.4,
        initial,
        t_end: 0.28,
        desk_mesh: Mesh::Rect(800, 200),
        full_mesh: Mesh::Rect(1600, 400),
        gravity: None,
    }
}

fn rti() -> CaseSpec {
    CaseSpec {
        name: "rti",
        model: Model::Euler2D,
        geometry: Geometry::Rect {
            x: (0.0, 0.25),
            y: (0.0, 1.0),
            boundary: BoundarySpec {
                left: Boundary::Wall,
                right: Boundary::Wall,
                bottom: Boundary::Fixed(prim([2.0, 0.0, 0.0, 1.0])),
                top: Boundary::Fixed(prim([1.0, 0.0, 0.0, 2.5])),
            },
        },
        gamma: 5.0 / 3.0,
        initial: Initial::RayleighTaylor {
            interface: 0.5,
            heavy: 2.0,
            light: 1.0,
            amplitude: 0.025,
            wavenumber: 8.0,
        },
        t_end: 1.95,
        desk_mesh: Mesh::Rect(64, 256),
        full_mesh: Mesh::Rect(256, 1024),
        gravity: Some(1.0),
    }
}

/// All registered cases, in presentation order.
pub fn register_cases() -> Vec<CaseSpec> {
    let periodic = |x| Geometry::Line { x, left: Boundary::Periodic, right: Boundary::Periodic };
    let open = |x| Geometry::Line { x, left: Boundary::Outflow, right: Boundary::Outflow };
    vec![
        CaseSpec {
            name: "advection_sine",
            model: Model::Advection,
            geometry: periodic((-1.0, 1.0)),
            gamma: 1.4,
            initial: Initial::Sine,
            t_end: 2.0,
            desk_mesh: Mesh::Line(100),
            full_mesh: Mesh::Line(100),
            gravity: None,
        },
        CaseSpec {
            name: "advection_composite",
            model: Model::Advection,
            geometry: periodic((-1.0, 1.0)),
            gamma: 1.4,
            initial: Initial::Composite,
            t_end: 20.0,
            desk_mesh: Mesh::Line(400),
            full_mesh: Mesh::Line(400),
            gravity: None,
        },
        CaseSpec {
            name: "lax",
            model: Model::Euler1D,
            geometry: open((0.0, 2.0)),
            gamma: 1.4,
            initial: Initial::ShockTube {
                jump: 1.0,
                left: [0.445, 0.698, 3.528],
                right: [0.5, 0.0, 0.571],
            },
            t_end: 0.26,
            desk_mesh: Mesh::Line(200),
            full_mesh: Mesh::Line(200),
            gravity: None,
        },
        CaseSpec {
            name: "titarev_toro",
            model: Model::Euler1D,
            geometry: open((-5.0, 5.0)),
            gamma: 1.4,
            initial: Initial::ShockEntropy {
                jump: -4.5,
                left: [1.515695, 0.523346, 1.805],
                amplitude: 0.1,
                frequency: 20.0,
            },
            t_end: 5.0,
            desk_mesh: Mesh::Line(2000),
            full_mesh: Mesh::Line(2000),
            gravity: None,
        },
        quadrant_case(
            "rp_config1",
            [
                [0.138, 1.206, 1.206, 0.029],
                [0.5323, 1.206, 0.0, 0.3],
                [1.5, 0.0, 0.0, 1.5],
                [0.5323, 0.0, 1.206, 0.3],
            ],
        ),
        quadrant_case(
            "rp_config2",
            [
                [1.0, -0.75, 0.5, 1.0],
                [2.0, 0.75, 0.5, 1.0],
                [1.0, 0.75, -0.5, 1.0],
                [3.0, -0.75, -0.5, 1.0],
            ],
        ),
        dmr(),
        rti(),
    ]
}

pub fn find_case(name: &str) -> Result<CaseSpec, HarnessError> {
    register_cases()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| HarnessError::config(format!("unknown case `{name}`")))
}

impl Initial {
    /// Post- and pre-shock states of an oblique shock.
    fn oblique_states(&self) -> Option<(PrimitiveState<f64>, PrimitiveState<f64>)> {
        match *self {
            Initial::ObliqueShock { angle, post_rho, speed, post_p, pre, .. } => {
                let a = angle.to_radians();
                Some((prim([post_rho, speed * a.sin(), -speed * a.cos(), post_p]), prim(pre)))
            }
            _ => None,
        }
    }

    /// Scalar data at `x`.
    pub fn scalar(&self, x: f64) -> f64 {
        match self {
            Initial::Sine => (PI * x).sin(),
            Initial::Composite => composite_wave_initial(x),
            other => panic!("{other:?} is not a scalar initial condition"),
        }
    }

    pub fn line(&self, x: f64) -> PrimitiveState<f64> {
        let tube = |w: [f64; 3]| PrimitiveState::new(w[0], w[1], w[2]);
        match *self {
            Initial::ShockTube { jump, left, right } => tube(if x < jump { left } else { right }),
            Initial::ShockEntropy { jump, left, amplitude, frequency } => {
                if x < jump {
                    tube(left)
                } else {
                    PrimitiveState::new(1.0 + amplitude * (frequency * PI * x).sin(), 0.0, 1.0)
                }
            }
            ref other => panic!("{other:?} is not a 1D Euler initial condition"),
        }
    }

    pub fn plane(&self, gas: &Gas<f64>, x: f64, y: f64) -> PrimitiveState<f64> {
        match *self {
            Initial::Quadrants { lower_left, upper_left, upper_right, lower_right } => prim(match (x < 0.0, y < 0.0) {
                (true, true) => lower_left,
                (true, false) => upper_left,
                (false, false) => upper_right,
                (false, true) => lower_right,
            }),
            Initial::ObliqueShock { x0, angle, .. } => {
                let (post, pre) = self.oblique_states().unwrap();
                if x > x0 + y / angle.to_radians().tan() {
                    pre
                } else {
                    post
                }
            }
            Initial::RayleighTaylor { interface, heavy, light, amplitude, wavenumber } => {
                let (rho, p) = if y < interface {
                    (heavy, heavy * y + 1.0)
                } else {
                    (light, light * y + (heavy - light) * interface + 1.0)
                };
                let v = -amplitude * gas.sound_speed(rho, p) * (wavenumber * PI * x).cos();
                PrimitiveState::new_2d(rho, 0.0, v, p)
            }
            ref other => panic!("{other:?} is not a 2D initial condition"),
        }
    }
}

fn tuple(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn describe_boundary(b: &Boundary<f64>) -> String {
    let w = |p: &PrimitiveState<f64>| tuple(&[p.rho, p.u, p.v, p.p]);
    match b {
        Boundary::Periodic => "periodic".into(),
        Boundary::Outflow => "outflow".into(),
        Boundary::Wall => "wall".into(),
        Boundary::Fixed(p) => format!("fixed {}", w(p)),
        Boundary::Split { at, lower, upper } => {
            format!("split at={at} lower=[{}] upper=[{}]", describe_boundary(lower), describe_boundary(upper))
        }
        Boundary::MovingShock { origin, speed, lean, behind, ahead } => {
            format!("moving-shock origin={origin} speed={speed} lean={lean} behind={} ahead={}", w(behind), w(ahead))
        }
    }
}

impl fmt::Display for Initial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Initial::Sine => f.write_str("sine"),
            Initial::Composite => f.write_str("composite"),
            Initial::ShockTube { jump, left, right } => {
                write!(f, "shock-tube jump={jump} left={} right={}", tuple(left), tuple(right))
            }
            Initial::ShockEntropy { jump, left, amplitude, frequency } => write!(
                f,
                "shock-entropy jump={jump} left={} amplitude={amplitude} frequency={frequency}",
                tuple(left)
            ),
            Initial::Quadrants { lower_left, upper_left, upper_right, lower_right } => write!(
                f,
                "quadrants lower_left={} upper_left={} upper_right={} lower_right={}",
                tuple(lower_left),
                tuple(upper_left),
                tuple(upper_right),
                tuple(lower_right)
            ),
            Initial::ObliqueShock { x0, angle, post_rho, speed, post_p, pre, shock_speed } => write!(
                f,
                "oblique-shock x0={x0} angle={angle} post_rho={post_rho} speed={speed} post_p={post_p} pre={} shock_speed={shock_speed}",
                tuple(pre)
            ),
            Initial::RayleighTaylor { interface, heavy, light, amplitude, wavenumber } => write!(
                f,
                "rayleigh-taylor interface={interface} heavy={heavy} light={light} amplitude={amplitude} wavenumber={wavenumber}"
            ),
        }
    }
}

impl CaseSpec {
    /// Plain-text serialisation, one `key = value` per line under a `[name]`
    /// header.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| writeln!(s, "{k} = {v}").unwrap();
        line("model", self.model.to_string());
        match &self.geometry {
            Geometry::Line { x, left, right } => {
                line("x", tuple(&[x.0, x.1]));
                line("left", describe_boundary(left));
                line("right", describe_boundary(right));
            }
            Geometry::Rect { x, y, boundary } => {
                line("x", tuple(&[x.0, x.1]));
                line("y", tuple(&[y.0, y.1]));
                line("left", describe_boundary(&boundary.left));
                line("right", describe_boundary(&boundary.right));
                line("bottom", describe_boundary(&boundary.bottom));
                line("top", describe_boundary(&boundary.top));
            }
        }
        line("gamma", self.gamma.to_string());
        line("initial", self.initial.to_string());
        line("t_end", self.t_end.to_string());
        line("desk_mesh", self.desk_mesh.to_string());
        line("full_mesh", self.full_mesh.to_string());
        line("gravity", self.gravity.map_or("none".into(), |g| g.to_string()));
        format!("[{}]\n{s}", self.name)
    }

    pub fn gas(&self) -> Gas<f64> {
        Gas::new(self.gamma)
    }

    /// Checks that `mesh` has the dimensionality of the case.
    pub fn check_mesh(&self, mesh: Mesh) -> Result<(), HarnessError> {
        match (self.model, mesh) {
            (Model::Euler2D, Mesh::Rect(..)) | (Model::Advection | Model::Euler1D, Mesh::Line(_)) => Ok(()),
            _ => Err(HarnessError::config(format!("mesh {mesh} does not fit the {} case {}", self.model, self.name))),
        }
    }
}

/// Serialisation of the whole registry.
pub fn describe_registry() -> String {
    register_cases().iter().map(CaseSpec::describe).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let cases = register_cases();
        assert_eq!(cases.len(), 8);
        for (i, a) in cases.iter().enumerate() {
            assert!(cases[i + 1..].iter().all(|b| b.name != a.name));
        }
    }

    #[test]
    fn mesh_round_trip() {
        for m in [Mesh::Line(200), Mesh::Rect(800, 200)] {
            assert_eq!(m.to_string().parse::<Mesh>().unwrap(), m);
        }
        assert!("1".parse::<Mesh>().is_err());
        assert!("40xq".parse::<Mesh>().is_err());
    }

    #[test]
    fn oblique_shock_states() {
        let c = find_case("dmr").unwrap();
        let gas = c.gas();
        let post = c.initial.plane(&gas, 0.0, 0.5);
        assert_eq!(post.rho, 8.0);
        assert!((post.u - 8.25 * 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((post.v + 8.25 / 2.0).abs() < 1e-14);
        assert_eq!(c.initial.plane(&gas, 1.0, 0.1).rho, 1.4);
    }

    #[test]
    fn rayleigh_taylor_is_hydrostatic() {
        let c = find_case("rti").unwrap();
        let gas = c.gas();
        let below = c.initial.plane(&gas, 0.0, 0.25);
        let above = c.initial.plane(&gas, 0.0, 0.75);
        assert_eq!((below.rho, below.p), (2.0, 1.5));
        assert_eq!((above.rho, above.p), (1.0, 2.25));
        let c0 = (5.0f64 / 3.0 * 1.5 / 2.0).sqrt();
        assert!((below.v + 0.025 * c0).abs() < 1e-15);
    }
}
