//! Grid sweeps of registered quantities, plus the brachistochrone and
//! two-spin tables.

use std::f64::consts::PI;

use ising_geometry::dynamics::{brachistochrone, distance, speed_closed, speed_from_energy};
use ising_geometry::geometry::{fs_metric_closed, gaussian_curvature_closed};
use ising_geometry::phases::{aa_phase_closed, dynamic_phase, geometric_phase_closed, total_phase};
use ising_geometry::spin::{dicke_to_full, energy_moments, evolved_state, overlap, reduced_two_spin_density, FULL_ORACLE_MAX_SPINS};
use ising_geometry::two_spin::{
    aa_phase_of_concurrence, curvature_of_concurrence, geometric_phase_of_concurrence, optimal_metric_concurrence,
    speed_distance_opttime_of_concurrence, wootters_concurrence, ConcurrencePoint,
};
use ising_geometry::{Error, ModelParams};
use serde::Serialize;

use crate::config::{ConfigError, Grid, Labeled};
use crate::table::Table;

/// Quantities accepted by `sweep`.
pub const QUANTITIES: [&str; 17] = [
    "speed",
    "speed_energy",
    "distance",
    "concurrence",
    "curvature",
    "g_theta_theta",
    "g_phi_phi",
    "g_xi_xi",
    "g_phi_xi",
    "total_phase",
    "dynamic_phase",
    "geometric_phase",
    "aa_phase",
    "energy_mean",
    "energy_variance",
    "overlap_abs",
    "overlap_arg",
];

pub const SWEEP_AXES: [&str; 3] = ["theta", "phi", "xi"];

/// Values used for parameters without a grid.
pub const FIXED_THETA: f64 = PI / 2.0;
pub const FIXED_PHI: f64 = 0.0;
pub const FIXED_XI: f64 = 1.0;

pub fn check_quantity(name: &str) -> Result<(), ConfigError> {
    if QUANTITIES.contains(&name) {
        Ok(())
    } else {
        Err(ConfigError::Quantity(name.to_string()))
    }
}

/// Evaluates one registered quantity at a parameter point.
pub fn evaluate(quantity: &str, p: &ModelParams) -> Result<f64, Error> {
    Ok(match quantity {
        "speed" => speed_closed(p)?,
        "speed_energy" => speed_from_energy(p)?,
        "distance" => distance(p)?,
        "concurrence" => pair_concurrence(p)?,
        "curvature" => gaussian_curvature_closed(p)?.k,
        "g_theta_theta" => fs_metric_closed(p)?.g_theta_theta(),
        "g_phi_phi" => fs_metric_closed(p)?.g_phi_phi(),
        "g_xi_xi" => fs_metric_closed(p)?.g_xi_xi(),
        "g_phi_xi" => fs_metric_closed(p)?.g_phi_xi(),
        "total_phase" => total_phase(p, None)?.value,
        "dynamic_phase" => dynamic_phase(p)?.value,
        "geometric_phase" => geometric_phase_closed(p)?,
        "aa_phase" => aa_phase_closed(p)?.value,
        "energy_mean" => energy_moments(p)?.0,
        "energy_variance" => energy_moments(p)?.1,
        "overlap_abs" => overlap(p)?.norm(),
        "overlap_arg" => overlap(p)?.arg(),
        other => unreachable!("unregistered quantity {other}"),
    })
}

/// Wootters concurrence of the first two spins of the evolved state.
fn pair_concurrence(p: &ModelParams) -> Result<f64, Error> {
    if p.n_spins > FULL_ORACLE_MAX_SPINS {
        return Err(Error::TooManySpins {
            n_spins: p.n_spins,
            max: FULL_ORACLE_MAX_SPINS,
        });
    }
    let full = dicke_to_full(&evolved_state(p)?)?;
    wootters_concurrence(&reduced_two_spin_density(&full, 0, 1)?)
}

/// Row-major sweep: N outermost, then the grid axes in the order given.
/// Failed evaluations give empty cells.
pub fn sweep(quantity: &str, n_spins: &[usize], coupling: f64, grids: &[Grid]) -> Result<Table, ConfigError> {
    check_quantity(quantity)?;
    if grids.is_empty() {
        return Err(ConfigError::Invalid("sweep needs at least one --grid axis".into()));
    }
    if let Some(g) = grids.iter().find(|g| !SWEEP_AXES.contains(&g.name.as_str())) {
        return Err(ConfigError::GridAxis(g.name.clone()));
    }
    let axes: Vec<Vec<f64>> = grids.iter().map(Grid::points).collect();
    let mut header = vec!["N".to_string()];
    header.extend(grids.iter().map(|g| g.name.clone()));
    header.push(quantity.to_string());
    let mut table = Table::new(header);
    let total: usize = axes.iter().map(Vec::len).product();
    for &n in n_spins {
        for flat in 0..total {
            // last axis varies fastest
            let mut rem = flat;
            let mut coords = vec![0.0; axes.len()];
            for (slot, axis) in coords.iter_mut().zip(&axes).rev() {
                *slot = axis[rem % axis.len()];
                rem /= axis.len();
            }
            let mut theta = FIXED_THETA;
            let mut phi = FIXED_PHI;
            let mut xi = FIXED_XI;
            for (g, &v) in grids.iter().zip(&coords) {
                match g.name.as_str() {
                    "theta" => theta = v,
                    "phi" => phi = v,
                    _ => xi = v,
                }
            }
            let value = ModelParams::new(n, coupling, theta, phi, xi)
                .and_then(|p| evaluate(quantity, &p))
                .ok();
            let mut row = vec![Some(n as f64)];
            row.extend(coords.into_iter().map(Some));
            row.push(value);
            table.push(row);
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BrachistochroneRecord {
    pub n: usize,
    pub theta_max: f64,
    pub v_max: f64,
    pub s_min_per_xi: f64,
    pub t_min_over_t: f64,
}

pub fn brachistochrone_records(n_spins: &[usize], coupling: f64) -> Result<Vec<BrachistochroneRecord>, Error> {
    n_spins
        .iter()
        .map(|&n| {
            let b = brachistochrone(n, coupling, 1.0)?;
            Ok(BrachistochroneRecord {
                n,
                theta_max: b.theta_max,
                v_max: b.v_max,
                s_min_per_xi: b.s_min,
                t_min_over_t: b.t_min_over_t(),
            })
        })
        .collect()
}

pub fn brachistochrone_table(records: &[BrachistochroneRecord]) -> Table {
    let mut t = Table::new(["n", "theta_max", "v_max", "s_min_per_xi", "t_min_over_t"]);
    for r in records {
        t.push(vec![Some(r.n as f64), Some(r.theta_max), Some(r.v_max), Some(r.s_min_per_xi), Some(r.t_min_over_t)]);
    }
    t
}

pub const TWO_SPIN_COLUMNS: [&str; 10] = ["xi", "c", "c_r", "K", "phi_g", "phi_aa", "v", "s", "tau", "opt_metric"];

/// Concurrence-chart quantities for every (ξ, C); cells outside the chart
/// are empty.
pub fn two_spin_table(xi: &[Labeled], c_grid: &Grid, coupling: f64) -> Table {
    let mut t = Table::new(TWO_SPIN_COLUMNS);
    for x in xi {
        for c in c_grid.points() {
            let mut row = vec![Some(x.value), Some(c)];
            match ConcurrencePoint::new(c, x.value) {
                Ok(p) => {
                    let vst = speed_distance_opttime_of_concurrence(&p, coupling).ok();
                    row.extend([
                        Some(p.c_r),
                        curvature_of_concurrence(&p).ok(),
                        geometric_phase_of_concurrence(&p).ok().map(|v| v.value),
                        Some(aa_phase_of_concurrence(&p).value),
                        vst.map(|v| v.0),
                        vst.map(|v| v.1),
                        vst.map(|v| v.2),
                        Some(optimal_metric_concurrence(&p)),
                    ]);
                }
                Err(_) => row.extend([None; 8]),
            }
            t.push(row);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn speed_sweep_peaks_at_half() {
        let g: Grid = "theta=0:pi:181".parse().unwrap();
        let t = sweep("speed", &[2], 1.0, &[g]).unwrap();
        let max = t.column("speed").unwrap().into_iter().flatten().fold(f64::MIN, f64::max);
        assert!((max - 0.5).abs() < 1e-12);
    }

    #[test]
    fn concurrence_sweep_peaks_at_one() {
        let grids = ["theta=0:pi:21".parse().unwrap(), "xi=0:pi:21".parse().unwrap()];
        let t = sweep("concurrence", &[2], 1.0, &grids).unwrap();
        assert_eq!(t.header, ["N", "theta", "xi", "concurrence"]);
        let (best, row) = t
            .rows
            .iter()
            .map(|r| (r[3].unwrap(), r))
            .fold((f64::MIN, None), |a, (v, r)| if v > a.0 { (v, Some(r)) } else { a });
        let row = row.unwrap();
        assert!((best - 1.0).abs() < 1e-12);
        assert!((row[1].unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((row[2].unwrap() - PI / 2.0).abs() < 1e-12);
        // row-major: xi varies fastest
        assert_eq!(t.rows[1][1], Some(0.0));
        assert!(t.rows[1][2].unwrap() > 0.0);
    }

    #[test]
    fn sweep_rejects_bad_input() {
        let g: Grid = "theta=0:1:3".parse().unwrap();
        assert!(matches!(sweep("nope", &[2], 1.0, std::slice::from_ref(&g)), Err(ConfigError::Quantity(_))));
        assert!(sweep("speed", &[2], 1.0, &[]).is_err());
        let c: Grid = "c=0:1:3".parse().unwrap();
        assert!(matches!(sweep("speed", &[2], 1.0, &[c]), Err(ConfigError::GridAxis(_))));
    }

    #[test]
    fn every_quantity_evaluates() {
        let p = ModelParams::new(3, 1.0, 1.0, 0.2, 0.7).unwrap();
        for q in QUANTITIES {
            assert!(evaluate(q, &p).unwrap().is_finite(), "{q}");
        }
    }

    #[test]
    fn brachistochrone_examples() {
        let r = brachistochrone_records(&[2, 3, 4, 5], 1.0).unwrap();
        assert!((r[0].t_min_over_t - 1.0).abs() < 1e-15);
        assert!((r[1].t_min_over_t - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(r.windows(2).all(|w| w[1].t_min_over_t < w[0].t_min_over_t));
    }

    #[test]
    fn two_spin_rows() {
        let g: Grid = "c=0:1:5".parse().unwrap();
        let t = two_spin_table(&[Labeled::new("pi/6", PI / 6.0)], &g, 1.0);
        assert_eq!(t.rows.len(), 5);
        assert!((t.rows[0][3].unwrap() - 5.0).abs() < 1e-12);
        assert!(t.rows[4][2].is_none());
    }
}
