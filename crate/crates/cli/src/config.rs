//! Command-line flags and the validated run configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use thiserror::Error;

/// Overrides the default output directory.
pub const OUTPUT_DIR_ENV: &str = "ISING_GEOM_OUT";
const DEFAULT_OUTPUT_DIR: &str = "out";

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("cannot parse `{0}` as a real number (accepted: 1.5, pi, -pi/2, 3*pi/4)")]
    Real(String),
    #[error("grid `{0}` must look like name=min:max:count")]
    GridSyntax(String),
    #[error("grid `{name}` needs at least 2 points, got {count}")]
    GridCount { name: String, count: usize },
    #[error("grid `{name}` has min {min} greater than max {max}")]
    GridOrder { name: String, min: f64, max: f64 },
    #[error("unknown grid axis `{0}`")]
    GridAxis(String),
    #[error("grid axis `{0}` given twice")]
    GridDuplicate(String),
    #[error("cannot parse spin count list `{0}` (accepted: 4, 2,3,5 or 2..6)")]
    SpinList(String),
    #[error("spin count must be at least {min}, got {got}")]
    SpinCount { min: usize, got: usize },
    #[error("tolerance override `{0}` must look like name=value")]
    TolSyntax(String),
    #[error("unknown tolerance `{0}`")]
    TolName(String),
    #[error("tolerance `{name}` must be positive, got {value}")]
    TolValue { name: String, value: f64 },
    #[error("unknown figure `{0}`")]
    Figure(String),
    #[error("unknown quantity `{0}`")]
    Quantity(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Verify,
    Figure,
    Sweep,
    Brachistochrone,
    TwoSpin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ising-geom", version, about = "State-space geometry of the all-range Ising model")]
pub struct Cli {
    /// What to run.
    #[arg(long, value_enum, default_value = "verify")]
    pub command: Command,
    /// Spin counts: a single value, a comma list, or an inclusive range a..b.
    #[arg(long)]
    pub n: Option<String>,
    /// Coupling J.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub coupling: f64,
    /// Grid axis as name=min:max:count (theta, phi, xi or c); repeatable.
    #[arg(long, value_name = "NAME=MIN:MAX:COUNT")]
    pub grid: Vec<String>,
    /// Comma-separated ξ values; pi expressions such as pi/6 are accepted.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// Figure id, or `all`.
    #[arg(long)]
    pub figure: Option<String>,
    /// Quantity evaluated by `sweep`.
    #[arg(long)]
    pub quantity: Option<String>,
    /// Output file, or directory for multi-file outputs.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Tolerance override as name=value; repeatable.
    #[arg(long, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
}

/// A real value together with the text it was parsed from.
#[derive(Debug, Clone, PartialEq)]
pub struct Labeled {
    pub label: String,
    pub value: f64,
}

impl Labeled {
    pub fn new(label: impl Into<String>, value: f64) -> Self {
        Self {
            label: label.into(),
            value,
        }
    }
}

/// Parses `1.5`, `pi`, `-pi/2`, `3*pi/4`, `2pi`.
pub fn parse_real(text: &str) -> Result<f64, ConfigError> {
    let err = || ConfigError::Real(text.to_string());
    let t = text.trim();
    if let Ok(v) = t.parse::<f64>() {
        return if v.is_finite() { Ok(v) } else { Err(err()) };
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest.trim()),
        None => (1.0, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim().parse::<f64>().map_err(|_| err())?),
        None => (body, 1.0),
    };
    let factor = match num.strip_suffix("pi") {
        Some("") => 1.0,
        Some(prefix) => prefix.trim().trim_end_matches('*').trim().parse::<f64>().map_err(|_| err())?,
        None => return Err(err()),
    };
    let v = sign * factor * std::f64::consts::PI / den;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(err())
    }
}

/// Evenly spaced samples of one parameter axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(name: &str, min: f64, max: f64, count: usize) -> Result<Self, ConfigError> {
        if count < 2 {
            return Err(ConfigError::GridCount {
                name: name.to_string(),
                count,
            });
        }
        if min > max {
            return Err(ConfigError::GridOrder {
                name: name.to_string(),
                min,
                max,
            });
        }
        Ok(Self {
            name: name.to_string(),
            min,
            max,
            count,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.count)
    }
}

impl FromStr for Grid {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || ConfigError::GridSyntax(s.to_string());
        let (name, range) = s.split_once('=').ok_or_else(syntax)?;
        let parts: Vec<&str> = range.split(':').collect();
        let [min, max, count] = parts.as_slice() else {
            return Err(syntax());
        };
        let count = count.trim().parse::<usize>().map_err(|_| syntax())?;
        Grid::new(name.trim(), parse_real(min)?, parse_real(max)?, count)
    }
}

/// `count` points from `min` to `max`, with the last point exactly `max`.
pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    let last = count.saturating_sub(1).max(1) as f64;
    (0..count)
        .map(|k| if k + 1 == count { max } else { min + (max - min) * k as f64 / last })
        .collect()
}

pub fn parse_spin_list(text: &str) -> Result<Vec<usize>, ConfigError> {
    let err = || ConfigError::SpinList(text.to_string());
    let t = text.trim();
    if let Some((a, b)) = t.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| err())?;
        let b: usize = b.trim().parse().map_err(|_| err())?;
        if a > b {
            return Err(err());
        }
        return Ok((a..=b).collect());
    }
    let list: Vec<usize> = t
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
        .collect::<Result<_, _>>()?;
    if list.is_empty() {
        return Err(err());
    }
    Ok(list)
}

pub fn parse_xi_list(text: &str) -> Result<Vec<Labeled>, ConfigError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v = parse_real(tok)?;
            if v < 0.0 {
                return Err(ConfigError::Invalid(format!("xi must be non-negative, got {tok}")));
            }
            Ok(Labeled::new(tok, v))
        })
        .collect()
}

pub fn parse_tolerance(text: &str) -> Result<(String, f64), ConfigError> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| ConfigError::TolSyntax(text.to_string()))?;
    let value = parse_real(value)?;
    if value.is_nan() || value <= 0.0 {
        return Err(ConfigError::TolValue {
            name: name.trim().to_string(),
            value,
        });
    }
    Ok((name.trim().to_string(), value))
}

/// Validated configuration shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` when not given, so each command can pick its own default.
    pub n_spins: Option<Vec<usize>>,
    pub coupling: f64,
    pub grids: Vec<Grid>,
    pub xi: Option<Vec<Labeled>>,
    pub figure: Option<String>,
    pub quantity: Option<String>,
    pub out: Option<PathBuf>,
    pub output_dir: PathBuf,
    pub format: Option<Format>,
    pub tolerances: BTreeMap<String, f64>,
}

pub const GRID_AXES: [&str; 4] = ["theta", "phi", "xi", "c"];

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, ConfigError> {
        let env_dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
        Self::from_cli_with_env(cli, env_dir)
    }

    pub fn from_cli_with_env(cli: Cli, env_dir: Option<PathBuf>) -> Result<Self, ConfigError> {
        if !(cli.coupling.is_finite() && cli.coupling != 0.0) {
            return Err(ConfigError::Invalid(format!(
                "coupling must be finite and nonzero, got {}",
                cli.coupling
            )));
        }
        let n_spins = cli.n.as_deref().map(parse_spin_list).transpose()?;
        if let Some(&bad) = n_spins.iter().flatten().find(|&&n| n == 0) {
            return Err(ConfigError::SpinCount { min: 1, got: bad });
        }
        let mut grids: Vec<Grid> = Vec::new();
        for g in &cli.grid {
            let g: Grid = g.parse()?;
            if !GRID_AXES.contains(&g.name.as_str()) {
                return Err(ConfigError::GridAxis(g.name));
            }
            if grids.iter().any(|h| h.name == g.name) {
                return Err(ConfigError::GridDuplicate(g.name));
            }
            grids.push(g);
        }
        let mut tolerances = BTreeMap::new();
        for t in &cli.tol {
            let (name, value) = parse_tolerance(t)?;
            tolerances.insert(name, value);
        }
        Ok(Self {
            command: cli.command,
            n_spins,
            coupling: cli.coupling,
            grids,
            xi: cli.xi.as_deref().map(parse_xi_list).transpose()?,
            figure: cli.figure,
            quantity: cli.quantity,
            out: cli.out,
            output_dir: env_dir.unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT_DIR)),
            format: cli.format,
            tolerances,
        })
    }

    pub fn grid(&self, name: &str) -> Option<&Grid> {
        self.grids.iter().find(|g| g.name == name)
    }

    /// Explicit `--out`, else `file_name` inside the output directory.
    pub fn output_file(&self, file_name: &str) -> PathBuf {
        self.out.clone().unwrap_or_else(|| self.output_dir.join(file_name))
    }

    /// Directory for multi-file outputs.
    pub fn output_directory(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| self.output_dir.clone())
    }
}
