//! Benchmark harness for the ENO-AO solver suite: case registry, run
//! configuration, orchestration of runs, convergence studies and spectral
//! sweeps, and CSV output.

pub mod cases;
pub mod config;
pub mod error;
pub mod output;
pub mod run;

pub use cases::{describe_registry, find_case, register_cases, CaseSpec, Initial, Mesh, Model};
pub use config::{parse_config, RunConfig};
pub use error::{HarnessError, Result};
pub use run::{
    adr_sweep, convergence_study, run, simulate, Balance, ConvergenceRow, Field, Outcome, RunSummary, Snapshot,
};
