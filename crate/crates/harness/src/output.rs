//! CSV and metadata emission. Floats carry 17 significant digits so that a
//! value read back is bit-identical.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{HarnessError, Result};
use crate::run::{ConvergenceRow, Field, Snapshot};

/// `{:.16e}`: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn row(values: &[f64]) -> String {
    values.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(",")
}

pub fn header(field: &Field) -> &'static str {
    match field {
        Field::Scalar { .. } => "x,u,exact",
        Field::Line { .. } => "x,rho,u,p",
        Field::Plane { .. } => "x,y,rho,u,v,p",
    }
}

/// Snapshot as CSV, one line per unknown (x fastest in 2D).
pub fn write_field<W: Write>(mut out: W, field: &Field) -> std::io::Result<()> {
    writeln!(out, "{}", header(field))?;
    match field {
        Field::Scalar { x, u, exact } => {
            for i in 0..x.len() {
                writeln!(out, "{}", row(&[x[i], u[i], exact[i]]))?;
            }
        }
        Field::Line { x, w } => {
            for (x, w) in x.iter().zip(w) {
                writeln!(out, "{}", row(&[*x, w.rho, w.u, w.p]))?;
            }
        }
        Field::Plane { x, y, w } => {
            let nx = x.len();
            for (k, w) in w.iter().enumerate() {
                writeln!(out, "{}", row(&[x[k % nx], y[k / nx], w.rho, w.u, w.v, w.p]))?;
            }
        }
    }
    out.flush()
}

pub fn write_convergence<W: Write>(mut out: W, rows: &[ConvergenceRow]) -> std::io::Result<()> {
    writeln!(out, "mesh,l1,l1_order,linf,linf_order")?;
    let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt_f64(r.dx),
            fmt_f64(r.l1),
            opt(r.l1_order),
            fmt_f64(r.linf),
            opt(r.linf_order)
        )?;
    }
    out.flush()
}

pub fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))
}

/// Creates `dir/name` and hands a buffered writer to `body`.
pub fn write_file(
    dir: &Path,
    name: &str,
    body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> Result<PathBuf> {
    let path = dir.join(name);
    let file = File::create(&path).map_err(|e| HarnessError::io(&path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(|e| HarnessError::io(&path, e))?;
    Ok(path)
}

pub fn snapshot_name(case: &str, scheme: &str, snap: &Snapshot) -> String {
    format!("{case}_{}_t{}.csv", scheme.to_ascii_lowercase(), snap.time)
}
