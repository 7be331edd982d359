//! Run configuration and its plain-text file format.
//!
//! ```text
//! # comment
//! [run]
//! case = lax
//! scheme = ENO-AO5
//! mesh = 200
//! cfl = 0.3
//! out = out/lax
//! snapshots = 0.1, 0.2
//!
//! [scheme]
//! delta = 1e-5
//! eps = 1e-40
//! p = 1
//! ```
//!
//! Keys may also be written fully qualified (`scheme.delta = 1e-5`) or before
//! any header, in which case they belong to `[run]`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use enoao_core::{Params64, Scheme};

use crate::cases::{find_case, CaseSpec, Mesh};
use crate::error::{HarnessError, Result};

/// Recognised keys, for `--help`.
pub const CONFIG_KEYS: &[(&str, &str)] = &[
    ("run.case", "registered case name (see list-cases)"),
    ("run.scheme", "ENO-AO5, ENO-AO7, WENO-Z5, WENO-Z7, UW5 or UW7"),
    ("run.mesh", "intervals, N or NXxNY; default: the case's desk mesh"),
    ("run.full", "true to use the high-resolution mesh"),
    ("run.cfl", "CFL number, default 0.3"),
    ("run.t_end", "end time; default: the case's"),
    ("run.dt_power", "fixed dt = dx^power instead of the CFL rule"),
    ("run.out", "output directory, default out"),
    ("run.snapshots", "comma-separated extra output times"),
    ("scheme.delta", "ENO-AO threshold, default 1e-5"),
    ("scheme.eps", "WENO-Z epsilon, default 1e-40"),
    ("scheme.p", "WENO-Z exponent, default 1"),
];

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub case: String,
    pub scheme: Scheme,
    pub mesh: Option<Mesh>,
    pub full: bool,
    pub cfl: f64,
    pub params: Params64,
    pub t_end: Option<f64>,
    /// `dt = dx^dt_power` when set.
    pub dt_power: Option<f64>,
    pub out: PathBuf,
    pub snapshots: Vec<f64>,
}

impl RunConfig {
    pub fn new(case: impl Into<String>, scheme: Scheme) -> Self {
        Self {
            case: case.into(),
            scheme,
            mesh: None,
            full: false,
            cfl: 0.3,
            params: Params64::default(),
            t_end: None,
            dt_power: None,
            out: PathBuf::from("out"),
            snapshots: Vec::new(),
        }
    }

    /// Looks the case up and checks every field.
    pub fn validate(&self) -> Result<CaseSpec> {
        let case = find_case(&self.case)?;
        check_scheme(self.scheme)?;
        if let Some(m) = self.mesh {
            case.check_mesh(m)?;
        }
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(HarnessError::config(format!("{name} must be positive, got {v}")))
            }
        };
        positive("cfl", self.cfl)?;
        positive("delta", self.params.delta)?;
        positive("eps", self.params.eps)?;
        positive("p", self.params.p)?;
        if let Some(t) = self.t_end {
            positive("t_end", t)?;
        }
        if let Some(q) = self.dt_power {
            positive("dt_power", q)?;
        }
        if let Some(t) = self.snapshots.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
            return Err(HarnessError::config(format!("bad snapshot time {t}")));
        }
        Ok(case)
    }

    pub fn mesh_for(&self, case: &CaseSpec) -> Mesh {
        match (self.mesh, self.full) {
            (Some(m), _) => m,
            (None, true) => case.full_mesh,
            (None, false) => case.desk_mesh,
        }
    }

    /// Applies `key = value` under `section`.
    pub fn set(&mut self, section: &str, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| -> Result<f64> {
            v.trim()
                .parse::<f64>()
                .map_err(|_| HarnessError::config(format!("{section}.{key}: `{v}` is not a number")))
        };
        match (section, key) {
            ("run", "case") => self.case = value.to_string(),
            ("run", "scheme") => self.scheme = parse_scheme(value)?,
            ("run", "mesh") => self.mesh = Some(value.parse()?),
            ("run", "full") => {
                self.full = value
                    .parse()
                    .map_err(|_| HarnessError::config(format!("run.full: `{value}` is not true/false")))?
            }
            ("run", "cfl") => self.cfl = num(value)?,
            ("run", "t_end") => self.t_end = Some(num(value)?),
            ("run", "dt_power") => self.dt_power = Some(num(value)?),
            ("run", "out") => self.out = PathBuf::from(value),
            ("run", "snapshots") => {
                self.snapshots = value
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(num)
                    .collect::<Result<_>>()?
            }
            ("scheme", "delta") => self.params.delta = num(value)?,
            ("scheme", "eps") => self.params.eps = num(value)?,
            ("scheme", "p") => self.params.p = num(value)?,
            _ => return Err(HarnessError::config(format!("unknown key {section}.{key}"))),
        }
        Ok(())
    }
}

/// Rejects schemes outside the six benchmarked ones.
pub fn check_scheme(scheme: Scheme) -> Result<()> {
    if Scheme::BENCHMARK_SET.contains(&scheme) {
        Ok(())
    } else {
        Err(HarnessError::config(format!("scheme {scheme} is not one of ENO-AO5/7, WENO-Z5/7, UW5/7")))
    }
}

pub fn parse_scheme(s: &str) -> Result<Scheme> {
    let scheme: Scheme = s.parse().map_err(|e: enoao_core::recon::UnknownScheme| HarnessError::config(e.to_string()))?;
    check_scheme(scheme)?;
    Ok(scheme)
}

/// Splits a config text into `(section, key) -> value`.
pub fn parse_entries(text: &str) -> Result<BTreeMap<(String, String), String>> {
    let mut section = String::from("run");
    let mut out = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = name.trim().to_string();
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| HarnessError::config(format!("line {}: expected key = value", n + 1)))?;
        let key = key.trim();
        let (sec, key) = match key.split_once('.') {
            Some((s, k)) => (s.to_string(), k.to_string()),
            None => (section.clone(), key.to_string()),
        };
        if out.insert((sec.clone(), key.clone()), value.trim().to_string()).is_some() {
            return Err(HarnessError::config(format!("line {}: duplicate key {sec}.{key}", n + 1)));
        }
    }
    Ok(out)
}

/// Parses a whole config file. `case` and `scheme` are required.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let entries = parse_entries(text)?;
    let get = |k: &str| entries.get(&("run".to_string(), k.to_string()));
    let case = get("case").ok_or_else(|| HarnessError::config("missing run.case"))?;
    let scheme = get("scheme").ok_or_else(|| HarnessError::config("missing run.scheme"))?;
    let mut cfg = RunConfig::new(case.clone(), parse_scheme(scheme)?);
    for ((sec, key), value) in &entries {
        cfg.set(sec, key, value)?;
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use enoao_core::SchemeOrder;

    use super::*;

    #[test]
    fn full_file() {
        let cfg = parse_config(
            "# lax at the fine spacing\n[run]\ncase = lax\nscheme = WENO-Z7\nmesh = 200\n\
             snapshots = 0.1, 0.2\n\n[scheme]\neps = 1e-6 # override\n",
        )
        .unwrap();
        assert_eq!(cfg.case, "lax");
        assert_eq!(cfg.scheme, Scheme::WenoZ(SchemeOrder::Order7));
        assert_eq!(cfg.mesh, Some(Mesh::Line(200)));
        assert_eq!(cfg.snapshots, vec![0.1, 0.2]);
        assert_eq!(cfg.params.eps, 1e-6);
        assert_eq!((cfg.params.delta, cfg.params.p, cfg.cfl), (1e-5, 1.0, 0.3));
        cfg.validate().unwrap();
    }

    #[test]
    fn qualified_keys_without_headers() {
        let cfg = parse_config("case = rti\nscheme = eno-ao5\nscheme.delta = 1e-4\nfull = true").unwrap();
        assert_eq!(cfg.params.delta, 1e-4);
        assert!(cfg.full);
    }

    #[test]
    fn rejections() {
        assert!(parse_config("case = lax").is_err());
        assert!(parse_config("case = lax\nscheme = ENO-AO6").is_err());
        assert!(parse_config("case = lax\nscheme = S12").is_err());
        assert!(parse_config("case = lax\nscheme = UW5\ncolour = red").is_err());
        assert!(parse_config("case = lax\nscheme = UW5\ncfl = fast").is_err());
        assert!(parse_config("case = lax\nscheme = UW5\ncfl = 0.3\ncfl = 0.4").is_err());
        let cfg = parse_config("case = lax\nscheme = UW5\nmesh = 20x20").unwrap();
        assert!(cfg.validate().is_err());
        let cfg = parse_config("case = nowhere\nscheme = UW5").unwrap();
        assert!(cfg.validate().is_err());
    }
}
