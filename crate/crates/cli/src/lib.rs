//! Command-line front end: the verification suite, parameter sweeps and
//! figure data for the one-axis twisting state geometry.

pub mod config;
pub mod figures;
pub mod sweep;
pub mod table;
pub mod verify;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use config::{linspace, Command, ConfigError, Format, Grid, RunConfig};
use figures::{default_xi_series, FigureSpec, DEFAULT_SPINS, THETA_POINTS};
use table::Table;
use verify::{run_all, Tolerances};

pub const DEFAULT_BRACHISTOCHRONE_SPINS: std::ops::RangeInclusive<usize> = 2..=10;
pub const DEFAULT_TWO_SPIN_C_GRID: &str = "c=0:1:101";

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Model(#[from] ising_geometry::Error),
}

impl RunError {
    /// 2 for configuration errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            _ => 1,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), RunError> {
    let io_err = |source| RunError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io_err)?;
    }
    std::fs::write(path, contents).map_err(io_err)
}

/// Writes to `--out` when given, otherwise to `stdout`.
fn emit(config: &RunConfig, contents: &str, stdout: &mut dyn Write) -> Result<(), RunError> {
    match &config.out {
        Some(path) => write_file(path, contents),
        None => stdout.write_all(contents.as_bytes()).map_err(|source| RunError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn require_format(config: &RunConfig, allowed: &[Format], default: Format) -> Result<Format, ConfigError> {
    let f = config.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(ConfigError::Invalid(format!(
            "format {f:?} is not available for {:?}",
            config.command
        )))
    }
}

fn spins(config: &RunConfig, default: &[usize], min: usize) -> Result<Vec<usize>, ConfigError> {
    let list = config.n_spins.clone().unwrap_or_else(|| default.to_vec());
    match list.iter().find(|&&n| n < min) {
        Some(&got) => Err(ConfigError::SpinCount { min, got }),
        None => Ok(list),
    }
}

/// Runs the configured command. `Ok(false)` means the command ran but a
/// verification check failed.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool, RunError> {
    match config.command {
        Command::Verify => {
            require_format(config, &[Format::Json], Format::Json)?;
            let tol = Tolerances::with_overrides(&config.tolerances)?;
            let report = run_all(&tol);
            for line in report.summary_lines() {
                let _ = writeln!(stderr, "{line}");
            }
            emit(config, &report.to_json(), stdout)?;
            Ok(report.ok())
        }
        Command::Figure => {
            require_format(config, &[Format::Csv], Format::Csv)?;
            let ids = figures::parse_selection(config.figure.as_deref().unwrap_or("all"))?;
            let spec = FigureSpec {
                n_spins: spins(config, &DEFAULT_SPINS, 1)?,
                coupling: config.coupling,
                theta: config
                    .grid("theta")
                    .map(Grid::points)
                    .unwrap_or_else(|| linspace(0.0, std::f64::consts::PI, THETA_POINTS)),
                xi: config.xi.clone().unwrap_or_else(default_xi_series),
                c_grid: config.grid("c").cloned(),
            };
            let dir = config.output_directory();
            for id in ids {
                let path = dir.join(id.file_name());
                write_file(&path, &figures::generate(id, &spec).to_csv())?;
                let _ = writeln!(stdout, "{}", path.display());
            }
            Ok(true)
        }
        Command::Sweep => {
            require_format(config, &[Format::Csv], Format::Csv)?;
            let quantity = config
                .quantity
                .as_deref()
                .ok_or_else(|| ConfigError::Invalid("sweep needs --quantity".into()))?;
            let table = sweep::sweep(quantity, &spins(config, &[2], 1)?, config.coupling, &config.grids)?;
            emit(config, &table.to_csv(), stdout)?;
            Ok(true)
        }
        Command::Brachistochrone => {
            let format = require_format(config, &[Format::Json, Format::Csv], Format::Json)?;
            let default: Vec<usize> = DEFAULT_BRACHISTOCHRONE_SPINS.collect();
            let records = sweep::brachistochrone_records(&spins(config, &default, 2)?, config.coupling)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&records).expect("records are serializable");
                    s.push('\n');
                    s
                }
                Format::Csv => sweep::brachistochrone_table(&records).to_csv(),
            };
            emit(config, &text, stdout)?;
            Ok(true)
        }
        Command::TwoSpin => {
            require_format(config, &[Format::Csv], Format::Csv)?;
            let xi = config.xi.clone().unwrap_or_else(default_xi_series);
            let c_grid = match config.grid("c") {
                Some(g) => g.clone(),
                None => DEFAULT_TWO_SPIN_C_GRID.parse()?,
            };
            let table: Table = sweep::two_spin_table(&xi, &c_grid, config.coupling);
            emit(config, &table.to_csv(), stdout)?;
            Ok(true)
        }
    }
}
