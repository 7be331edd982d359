//! Run orchestration: initialisation, time loop, snapshots, studies.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use enoao_core::euler::{Grid1D, Grid2D, Gravity};
use enoao_core::scalar_law::{error_norms, ErrorNorms, LinearAdvection, ScalarBoundary, ScalarGrid, TimeStep};
use enoao_core::spectral::{adr_table, write_spectral_csv, SpectralRow};
use enoao_core::{EulerSolver1D64, EulerSolver2D64, Params64, Primitive64, Recon64, Scheme, ScalarSolver64, SchemeOrder};

use crate::cases::{CaseSpec, Geometry, Mesh, Model};
use crate::config::RunConfig;
use crate::error::{HarnessError, Result};
use crate::output;

/// Solution values at one instant.
#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Scalar { x: Vec<f64>, u: Vec<f64>, exact: Vec<f64> },
    Line { x: Vec<f64>, w: Vec<Primitive64> },
    /// `w` is row-major with x fastest.
    Plane { x: Vec<f64>, y: Vec<f64>, w: Vec<Primitive64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub time: f64,
    pub field: Field,
}

/// Conserved totals and their bookkeeping: `final = initial + inflow + source`
/// up to round-off when the discretisation is conservative.
#[derive(Clone, Debug, PartialEq)]
pub struct Balance {
    pub initial: Vec<f64>,
    pub last: Vec<f64>,
    pub inflow: Vec<f64>,
    pub source: Vec<f64>,
}

impl Balance {
    /// `|last - initial - inflow - source| / |initial|` for component `c`.
    pub fn relative_defect(&self, c: usize) -> f64 {
        let d = self.last[c] - self.initial[c] - self.inflow[c] - self.source[c];
        d.abs() / self.initial[c].abs()
    }

    /// `(last - initial - inflow) / source` for component `c`.
    pub fn source_ratio(&self, c: usize) -> f64 {
        (self.last[c] - self.initial[c] - self.inflow[c]) / self.source[c]
    }
}

/// Result of [`simulate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub case: &'static str,
    pub scheme: Scheme,
    pub mesh: Mesh,
    pub steps: usize,
    pub last: Snapshot,
    pub balance: Balance,
    /// Error against the exact solution, where one is known.
    pub error: Option<ErrorNorms<f64>>,
    pub wall_clock: f64,
}

#[derive(Clone, Copy, Debug)]
enum Rule {
    Cfl(f64),
    Fixed(f64),
}

enum Sim {
    Scalar { solver: ScalarSolver64<LinearAdvection<f64>>, case: CaseSpec },
    Line(EulerSolver1D64),
    Plane(EulerSolver2D64),
}

fn grid_error(e: enoao_core::Error) -> HarnessError {
    HarnessError::Numerics(e.within("initial data"))
}

impl Sim {
    fn new(case: &CaseSpec, mesh: Mesh, recon: Recon64) -> Result<Self> {
        let gas = case.gas();
        Ok(match (&case.geometry, mesh) {
            (Geometry::Line { x, .. }, Mesh::Line(n)) if case.model == Model::Advection => {
                let g = ScalarGrid::from_fn(x.0, x.1, n, ScalarBoundary::Periodic, |x| case.initial.scalar(x));
                Sim::Scalar {
                    solver: ScalarSolver64::new(g, LinearAdvection { c: 1.0 }, recon),
                    case: case.clone(),
                }
            }
            (Geometry::Line { x, left, right }, Mesh::Line(n)) => {
                let g = Grid1D::from_fn(x.0, x.1, n, left.clone(), right.clone(), &gas, |x| case.initial.line(x))
                    .map_err(grid_error)?;
                Sim::Line(EulerSolver1D64::new(g, gas, recon))
            }
            (Geometry::Rect { x, y, boundary }, Mesh::Rect(nx, ny)) => {
                let g = Grid2D::from_fn(*x, *y, (nx, ny), boundary.clone(), &gas, |x, y| case.initial.plane(&gas, x, y))
                    .map_err(grid_error)?;
                let gravity = case.gravity.map(|g| Gravity { g });
                Sim::Plane(EulerSolver2D64::new(g, gas, recon, gravity))
            }
            _ => return Err(HarnessError::config(format!("mesh {mesh} does not fit case {}", case.name))),
        })
    }

    fn dx(&self) -> f64 {
        match self {
            Sim::Scalar { solver, .. } => solver.grid.dx,
            Sim::Line(s) => s.grid.dx,
            Sim::Plane(s) => s.grid.dx,
        }
    }

    fn steps(&self) -> usize {
        match self {
            Sim::Scalar { solver, .. } => solver.steps,
            Sim::Line(s) => s.steps,
            Sim::Plane(s) => s.steps,
        }
    }

    fn advance(&mut self, t_end: f64, rule: Rule) -> Result<()> {
        match self {
            Sim::Scalar { solver, .. } => {
                let r = match rule {
                    Rule::Cfl(c) => TimeStep::Cfl(c),
                    Rule::Fixed(dt) => TimeStep::Fixed(dt),
                };
                solver.advance_to(t_end, r)?;
            }
            Sim::Line(s) => match rule {
                Rule::Cfl(c) => {
                    s.advance_to(t_end, c)?;
                }
                Rule::Fixed(dt) => {
                    while s.time < t_end {
                        s.step(dt.min(t_end - s.time))?;
                    }
                }
            },
            Sim::Plane(s) => match rule {
                Rule::Cfl(c) => {
                    s.advance_to(t_end, c)?;
                }
                Rule::Fixed(dt) => {
                    while s.time < t_end {
                        s.step(dt.min(t_end - s.time))?;
                    }
                }
            },
        }
        Ok(())
    }

    fn totals(&self) -> Vec<f64> {
        match self {
            Sim::Scalar { solver, .. } => vec![solver.grid.interior().iter().sum::<f64>() * solver.grid.dx],
            Sim::Line(s) => s.grid.totals().to_vec(),
            Sim::Plane(s) => s.grid.totals().to_vec(),
        }
    }

    fn budget(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            Sim::Scalar { .. } => (vec![0.0], vec![0.0]),
            Sim::Line(s) => (s.budget.inflow.to_vec(), s.budget.source.to_vec()),
            Sim::Plane(s) => (s.budget.inflow.to_vec(), s.budget.source.to_vec()),
        }
    }

    fn snapshot(&self, time: f64) -> Result<Snapshot> {
        let field = match self {
            Sim::Scalar { solver, case } => {
                let x = solver.grid.coordinates();
                let (x0, len) = match case.geometry {
                    Geometry::Line { x, .. } => (x.0, x.1 - x.0),
                    Geometry::Rect { .. } => unreachable!(),
                };
                let exact = x.iter().map(|x| case.initial.scalar(x0 + (x - time - x0).rem_euclid(len))).collect();
                Field::Scalar { x, u: solver.grid.interior().to_vec(), exact }
            }
            Sim::Line(s) => Field::Line {
                x: (0..s.grid.n_points()).map(|i| s.grid.x(i)).collect(),
                w: s.grid.primitives(&s.gas)?,
            },
            Sim::Plane(s) => {
                let (nx, ny) = s.grid.shape();
                Field::Plane {
                    x: (0..nx).map(|i| s.grid.x(i)).collect(),
                    y: (0..ny).map(|j| s.grid.y(j)).collect(),
                    w: s.grid.primitives(&s.gas)?,
                }
            }
        };
        Ok(Snapshot { time, field })
    }
}

/// Runs a configuration without touching the file system; `on_snapshot` sees
/// every requested snapshot and the final state.
pub fn simulate(config: &RunConfig, mut on_snapshot: impl FnMut(&Snapshot) -> Result<()>) -> Result<Outcome> {
    let case = config.validate()?;
    let mesh = config.mesh_for(&case);
    let t_end = config.t_end.unwrap_or(case.t_end);
    let recon = Recon64::new(config.scheme, config.params);
    let started = Instant::now();
    let mut sim = Sim::new(&case, mesh, recon)?;
    let rule = match config.dt_power {
        Some(q) => Rule::Fixed(sim.dx().powf(q)),
        None => Rule::Cfl(config.cfl),
    };
    let initial = sim.totals();

    let mut times: Vec<f64> = config.snapshots.iter().copied().filter(|t| *t < t_end).collect();
    times.sort_by(f64::total_cmp);
    times.dedup();
    for t in times {
        sim.advance(t, rule)?;
        on_snapshot(&sim.snapshot(t)?)?;
    }
    sim.advance(t_end, rule)?;
    let last = sim.snapshot(t_end)?;
    on_snapshot(&last)?;

    let (inflow, source) = sim.budget();
    let error = match &last.field {
        Field::Scalar { u, exact, .. } => Some(error_norms(u, exact)),
        _ => None,
    };
    Ok(Outcome {
        case: case.name,
        scheme: config.scheme,
        mesh,
        steps: sim.steps(),
        last,
        balance: Balance { initial, last: sim.totals(), inflow, source },
        error,
        wall_clock: started.elapsed().as_secs_f64(),
    })
}

/// Output of [`run`].
#[derive(Clone, Debug)]
pub struct RunSummary {
    pub outcome: Outcome,
    pub files: Vec<PathBuf>,
}

/// [`simulate`] plus CSV snapshots and a metadata file in `config.out`.
///
/// The configuration is validated before anything is written.
pub fn run(config: &RunConfig) -> Result<RunSummary> {
    let case = config.validate()?;
    output::create_dir(&config.out)?;
    let scheme = config.scheme.to_string();
    let mut files = Vec::new();
    let outcome = simulate(config, |snap| {
        let name = output::snapshot_name(case.name, &scheme, snap);
        files.push(output::write_file(&config.out, &name, |w| output::write_field(w, &snap.field))?);
        Ok(())
    })?;
    let meta = format!("{}_{}.txt", case.name, scheme.to_ascii_lowercase());
    files.push(output::write_file(&config.out, &meta, |w| write_metadata(w, config, &case, &outcome))?);
    Ok(RunSummary { outcome, files })
}

fn write_metadata(w: &mut impl Write, config: &RunConfig, case: &CaseSpec, o: &Outcome) -> std::io::Result<()> {
    let list = |v: &[f64]| v.iter().map(|x| output::fmt_f64(*x)).collect::<Vec<_>>().join(", ");
    writeln!(w, "case = {}", case.name)?;
    writeln!(w, "scheme = {}", config.scheme)?;
    writeln!(w, "mesh = {}", o.mesh)?;
    writeln!(w, "gamma = {}", case.gamma)?;
    match config.dt_power {
        Some(q) => writeln!(w, "dt = dx^{q}")?,
        None => writeln!(w, "cfl = {}", config.cfl)?,
    }
    writeln!(w, "delta = {:e}", config.params.delta)?;
    writeln!(w, "eps = {:e}", config.params.eps)?;
    writeln!(w, "p = {}", config.params.p)?;
    writeln!(w, "t_end = {}", o.last.time)?;
    writeln!(w, "steps = {}", o.steps)?;
    writeln!(w, "totals_initial = {}", list(&o.balance.initial))?;
    writeln!(w, "totals_final = {}", list(&o.balance.last))?;
    writeln!(w, "boundary_inflow = {}", list(&o.balance.inflow))?;
    writeln!(w, "source = {}", list(&o.balance.source))?;
    if let Some(e) = o.error {
        writeln!(w, "l1 = {}", output::fmt_f64(e.l1))?;
        writeln!(w, "linf = {}", output::fmt_f64(e.linf))?;
    }
    writeln!(w, "wall_clock_s = {:.3}", o.wall_clock)
}

/// One line of a convergence table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub dx: f64,
    pub l1: f64,
    pub l1_order: Option<f64>,
    pub linf: f64,
    pub linf_order: Option<f64>,
}

/// `dt = dx^{5/3}` for fifth-order schemes, `dx^{7/3}` for seventh.
pub fn convergence_dt_power(scheme: Scheme) -> f64 {
    match scheme.order() {
        Some(SchemeOrder::Order7) => 7.0 / 3.0,
        _ => 5.0 / 3.0,
    }
}

/// Errors on each mesh (intervals over the whole domain) with observed orders
/// between consecutive meshes.
pub fn convergence_study(case: &str, scheme: Scheme, params: Params64, meshes: &[usize]) -> Result<Vec<ConvergenceRow>> {
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(meshes.len());
    for &n in meshes {
        let mut cfg = RunConfig::new(case, scheme);
        cfg.params = params;
        cfg.mesh = Some(Mesh::Line(n));
        cfg.dt_power = Some(convergence_dt_power(scheme));
        let case = cfg.validate()?;
        if case.model != Model::Advection {
            return Err(HarnessError::config(format!("case {} has no exact solution", case.name)));
        }
        let o = simulate(&cfg, |_| Ok(()))?;
        let e = o.error.expect("advection runs report errors");
        let dx = match case.geometry {
            Geometry::Line { x, .. } => (x.1 - x.0) / n as f64,
            Geometry::Rect { .. } => unreachable!(),
        };
        let order = |coarse: f64, fine: f64, prev: &ConvergenceRow| (coarse / fine).ln() / (prev.dx / dx).ln();
        let (l1_order, linf_order) = match rows.last() {
            Some(p) => (Some(order(p.l1, e.l1, p)), Some(order(p.linf, e.linf, p))),
            None => (None, None),
        };
        rows.push(ConvergenceRow { dx, l1: e.l1, l1_order, linf: e.linf, linf_order });
    }
    Ok(rows)
}

/// Dispersion/dissipation rows of `scheme` next to its reference stencil.
pub fn adr_sweep(scheme: Scheme, params: Params64, n_points: usize) -> Result<Vec<SpectralRow<f64>>> {
    Ok(adr_table(&Recon64::new(scheme, params), scheme.reference_stencil(), n_points)?)
}

/// Writes `adr_<scheme>.csv` in `dir`.
pub fn write_adr(dir: &std::path::Path, scheme: Scheme, rows: &[SpectralRow<f64>]) -> Result<PathBuf> {
    output::create_dir(dir)?;
    let name = format!("adr_{}.csv", scheme.to_string().to_ascii_lowercase());
    output::write_file(dir, &name, |w| write_spectral_csv(w, rows))
}
