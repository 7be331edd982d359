use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use enoao_core::spectral::ADR_POINTS;
use enoao_core::{Params64, Scheme};
use enoao_harness::config::{parse_scheme, CONFIG_KEYS};
use enoao_harness::output::{create_dir, write_convergence, write_file};
use enoao_harness::run::write_adr;
use enoao_harness::{adr_sweep, convergence_study, parse_config, register_cases, run, HarnessError, Mesh, RunConfig};

#[derive(Parser)]
#[command(name = "enoao", version, about = "ENO-AO / WENO-Z benchmark harness", after_help = config_help())]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one case and write snapshots plus metadata.
    Run(RunArgs),
    /// Convergence table of an advection case.
    Converge(ConvergeArgs),
    /// Approximate dispersion relation sweeps, one CSV per scheme.
    Adr(AdrArgs),
    /// Print the case registry.
    ListCases,
}

#[derive(Args)]
struct SchemeArgs {
    /// ENO-AO threshold.
    #[arg(long)]
    delta: Option<f64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    /// Config file; command-line flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    scheme: Option<String>,
    /// Intervals, N or NXxNY.
    #[arg(long)]
    mesh: Option<String>,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// High-resolution mesh instead of the desk mesh.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, default_value = "advection_sine")]
    case: String,
    #[arg(long)]
    scheme: String,
    /// Comma-separated interval counts.
    #[arg(long, default_value = "40,60,80,100")]
    mesh: String,
    #[command(flatten)]
    common: SchemeArgs,
}

#[derive(Args)]
struct AdrArgs {
    /// Scheme to sweep; all six when omitted.
    #[arg(long)]
    scheme: Option<String>,
    /// Grid points of the probe.
    #[arg(long, default_value_t = ADR_POINTS)]
    points: usize,
    #[command(flatten)]
    common: SchemeArgs,
}

fn config_help() -> String {
    let mut s = String::from("Config file keys ([section] key = value):\n");
    for (k, v) in CONFIG_KEYS {
        s.push_str(&format!("  {k:<16} {v}\n"));
    }
    s.push_str("\nExit codes: 2 config, 3 numerics, 4 io.");
    s
}

fn params(delta: Option<f64>) -> Result<Params64, HarnessError> {
    let mut p = Params64::default();
    if let Some(d) = delta {
        if !(d.is_finite() && d > 0.0) {
            return Err(HarnessError::config(format!("delta must be positive, got {d}")));
        }
        p.delta = d;
    }
    Ok(p)
}

fn run_config(a: RunArgs) -> Result<RunConfig, HarnessError> {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
            parse_config(&text)?
        }
        None => {
            let case = a.case.clone().ok_or_else(|| HarnessError::config("--case or --config is required"))?;
            let scheme = a.scheme.as_deref().ok_or_else(|| HarnessError::config("--scheme or --config is required"))?;
            RunConfig::new(case, parse_scheme(scheme)?)
        }
    };
    if let Some(c) = a.case {
        cfg.case = c;
    }
    if let Some(s) = a.scheme {
        cfg.scheme = parse_scheme(&s)?;
    }
    if let Some(m) = a.mesh {
        cfg.mesh = Some(m.parse()?);
    }
    if let Some(c) = a.cfl {
        cfg.cfl = c;
    }
    if let Some(d) = a.delta {
        cfg.params.delta = d;
    }
    if let Some(o) = a.out {
        cfg.out = o;
    }
    cfg.full |= a.full;
    Ok(cfg)
}

fn execute(cli: Cli) -> Result<(), HarnessError> {
    match cli.command {
        Command::Run(a) => {
            let cfg = run_config(a)?;
            let s = run(&cfg)?;
            let o = &s.outcome;
            println!("{} {} mesh {}: {} steps in {:.2} s", o.case, o.scheme, o.mesh, o.steps, o.wall_clock);
            for f in &s.files {
                println!("  {}", f.display());
            }
        }
        Command::Converge(a) => {
            let scheme = parse_scheme(&a.scheme)?;
            let meshes = a
                .mesh
                .split(',')
                .map(|m| match m.trim().parse::<Mesh>()? {
                    Mesh::Line(n) => Ok(n),
                    other => Err(HarnessError::config(format!("convergence meshes are 1D, got {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let rows = convergence_study(&a.case, scheme, params(a.common.delta)?, &meshes)?;
            create_dir(&a.common.out)?;
            let name = format!("convergence_{}_{}.csv", a.case, scheme.to_string().to_ascii_lowercase());
            let path = write_file(&a.common.out, &name, |w| write_convergence(w, &rows))?;
            write_convergence(std::io::stdout().lock(), &rows).map_err(|e| HarnessError::io("stdout", e))?;
            println!("wrote {}", path.display());
        }
        Command::Adr(a) => {
            let schemes: Vec<Scheme> = match &a.scheme {
                Some(s) => vec![s.parse().map_err(|e: enoao_core::recon::UnknownScheme| HarnessError::config(e.to_string()))?],
                None => Scheme::BENCHMARK_SET.to_vec(),
            };
            let p = params(a.common.delta)?;
            for s in schemes {
                let rows = adr_sweep(s, p, a.points)?;
                println!("wrote {}", write_adr(&a.common.out, s, &rows)?.display());
            }
        }
        Command::ListCases => {
            for c in register_cases() {
                println!("{:<20} {:<10} t_end {:<6} mesh {} (full {})", c.name, c.model, c.t_end, c.desk_mesh, c.full_mesh);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
