//! Evolution speed, Fubini-Study distance and the brachistochrone.
//!
//! Speeds are in units of FS distance per unit time with `J` kept explicit.
//! The metric is time-independent, so the speed is constant along every
//! trajectory and distances are `S = V t`.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::g_xi_xi_closed;
use crate::math::{golden_section_max, powi};
use crate::spin::{energy_moments, full_evolve_oracle, FullState, ModelParams};

/// Largest N for which [`speed_from_energy`] takes the brute-force route.
pub const ENERGY_ORACLE_MAX_SPINS: usize = 12;

/// `V = (|J|/2) √(N(N-1) sin²θ [N-1 - (N-3/2) sin²θ])`.
pub fn speed_closed(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    Ok(speed_at(params.n_spins, params.coupling, params.theta))
}

fn speed_at(n_spins: usize, coupling: f64, theta: f64) -> f64 {
    // (J/2)√(4 g_ξξ) = |J| √g_ξξ
    coupling.abs() * libm::sqrt(g_xi_xi_closed(n_spins, theta).max(0.0))
}

/// `2ΔE` from the energy variance; brute force over all 2^N configurations
/// for N ≤ 12, Dicke-basis moments above.
pub fn speed_from_energy(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let variance = if params.n_spins <= ENERGY_ORACLE_MAX_SPINS {
        let initial = FullState::product(params.n_spins, params.theta, params.phi)?;
        full_evolve_oracle(&initial, params)?.energy_moments(params.coupling).1
    } else {
        energy_moments(params)?.1
    };
    Ok(2.0 * libm::sqrt(variance))
}

/// `S = ξ V / |J|`.
pub fn distance(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    if params.xi == 0.0 {
        return Ok(0.0);
    }
    params.require_dynamics()?;
    Ok(params.xi / params.coupling.abs() * speed_at(params.n_spins, params.coupling, params.theta))
}

/// Fastest evolution at fixed N and the time it needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrachistochroneSolution {
    pub n_spins: usize,
    pub theta_max: f64,
    pub v_max: f64,
    /// Distance at θ = π/2, the minimum of `S` over the interior extremum.
    pub s_min: f64,
    pub t_min: f64,
    /// Ordinary evolution time `ξ/J`.
    pub t: f64,
    /// Metric coefficient of the optimal state circle, `g_ξξ(θ_max)`.
    pub optimal_metric_gxixi: f64,
}

impl BrachistochroneSolution {
    pub fn t_min_over_t(&self) -> f64 {
        t_min_ratio(self.n_spins)
    }
}

/// `t_min / t = √(2N-3) / (N-1)`.
pub fn t_min_ratio(n_spins: usize) -> f64 {
    let n = n_spins as f64;
    libm::sqrt(2.0 * n - 3.0) / (n - 1.0)
}

/// Polar angle of the fastest state, `sin²θ_max = (N-1)/(2N-3)`.
pub fn theta_of_max_speed(n_spins: usize) -> f64 {
    let n = n_spins as f64;
    libm::asin(libm::sqrt((n - 1.0) / (2.0 * n - 3.0)))
}

fn require_pair(n_spins: usize, min: usize) -> Result<()> {
    if n_spins < min {
        return Err(Error::Domain {
            name: "n_spins",
            value: n_spins as f64,
            reason: if min == 2 {
                "speed extremum needs N >= 2"
            } else {
                "interior speed maximum needs N >= 3"
            },
        });
    }
    Ok(())
}

pub fn brachistochrone(n_spins: usize, coupling: f64, xi: f64) -> Result<BrachistochroneSolution> {
    require_pair(n_spins, 2)?;
    if !(coupling.is_finite() && coupling != 0.0) {
        return Err(Error::Domain {
            name: "coupling",
            value: coupling,
            reason: "must be finite and nonzero",
        });
    }
    if !(xi.is_finite() && xi >= 0.0) {
        return Err(Error::Domain {
            name: "xi",
            value: xi,
            reason: "must be finite and non-negative",
        });
    }
    let n = n_spins as f64;
    let j = coupling.abs();
    let v_max = j * (n - 1.0) * libm::sqrt(n * (n - 1.0) / (8.0 * (2.0 * n - 3.0)));
    let s_min = xi / 2.0 * libm::sqrt(n * (n - 1.0) / 2.0);
    let t = xi / j;
    Ok(BrachistochroneSolution {
        n_spins,
        theta_max: theta_of_max_speed(n_spins),
        v_max,
        s_min,
        t_min: s_min / v_max,
        t,
        optimal_metric_gxixi: powi(v_max / j, 2),
    })
}

/// Outcome of locating the speed maximum numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgmaxReport {
    pub n_spins: usize,
    pub numeric: f64,
    pub closed: f64,
    pub deviation: f64,
    /// `V(θ_max) ≥ V(θ)` held at every probe point.
    pub dominates_probes: bool,
}

const ARGMAX_GRID: usize = 1000;

/// Grid search over (0, π/2] refined by golden section, compared against
/// `arcsin √((N-1)/(2N-3))`.
pub fn verify_speed_is_argmax(n_spins: usize) -> Result<ArgmaxReport> {
    require_pair(n_spins, 3)?;
    let v = |t: f64| speed_at(n_spins, 1.0, t);
    let half = PI / 2.0;
    let step = half / ARGMAX_GRID as f64;
    let best = (1..=ARGMAX_GRID)
        .map(|k| k as f64 * step)
        .max_by(|a, b| v(*a).total_cmp(&v(*b)))
        .unwrap_or(half);
    let lo = (best - step).max(0.0);
    let hi = (best + step).min(half);
    let numeric = golden_section_max(v, lo, hi, 1e-10);
    let closed = theta_of_max_speed(n_spins);
    let vmax = v(closed);
    let dominates_probes = (0..ARGMAX_GRID).all(|k| {
        // deterministic irrational stride covering (0, π)
        let t = PI * libm::fmod(0.5 + k as f64 * 0.618_033_988_749_894_8, 1.0);
        v(t) <= vmax * (1.0 + 1e-14)
    });
    Ok(ArgmaxReport {
        n_spins,
        numeric,
        closed,
        deviation: (numeric - closed).abs(),
        dominates_probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, j: f64, theta: f64, xi: f64) -> ModelParams {
        ModelParams::new(n, j, theta, 0.2, xi).unwrap()
    }

    #[test]
    fn speed_examples() {
        assert_eq!(speed_closed(&params(4, 1.0, 0.0, 1.0)).unwrap(), 0.0);
        assert!(speed_closed(&params(4, 1.0, PI, 1.0)).unwrap() < 1e-15);
        assert!((speed_closed(&params(2, 1.0, PI / 2.0, 1.0)).unwrap() - 0.5).abs() < 1e-15);
        for t in [0.2, 0.9, 1.4] {
            let a = speed_closed(&params(5, 1.0, t, 0.0)).unwrap();
            let b = speed_closed(&params(5, 1.0, PI - t, 0.0)).unwrap();
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn energy_speed_basics() {
        assert_eq!(speed_from_energy(&params(3, 1.0, 0.0, 0.5)).unwrap(), 0.0);
        let a = speed_from_energy(&params(3, 1.0, 0.8, 0.5)).unwrap();
        let b = speed_from_energy(&params(3, 2.0, 0.8, 0.5)).unwrap();
        assert!((b - 2.0 * a).abs() < 1e-13);
        // both routes agree
        let small = speed_from_energy(&params(12, 1.0, 1.1, 0.4)).unwrap();
        let (_, var) = energy_moments(&params(12, 1.0, 1.1, 0.4)).unwrap();
        assert!((small - 2.0 * libm::sqrt(var)).abs() < 1e-10 * small);
    }

    #[test]
    fn closed_speed_is_energy_spread() {
        // the metric-derived speed equals ΔE itself
        for n in 2..=8 {
            let p = params(n, 1.3, 0.7, 0.0);
            let (_, var) = energy_moments(&p).unwrap();
            let v = speed_closed(&p).unwrap();
            assert!((v - libm::sqrt(var)).abs() <= 1e-12 * v);
        }
    }

    #[test]
    fn brachistochrone_examples() {
        let b = brachistochrone(2, 1.0, 1.0).unwrap();
        assert!((b.t_min - b.t).abs() < 1e-15);
        assert!((b.theta_max - PI / 2.0).abs() < 1e-7);
        assert!((b.v_max - 0.5).abs() < 1e-15);
        let b = brachistochrone(3, 1.0, 1.0).unwrap();
        assert!((b.t_min_over_t() - libm::sqrt(3.0) / 2.0).abs() < 1e-15);
        assert!((b.t_min / b.t - b.t_min_over_t()).abs() < 1e-14);
        assert!(t_min_ratio(10_000) < 0.015);
        for n in 2..=20 {
            let b = brachistochrone(n, 0.7, 2.0).unwrap();
            let g = g_xi_xi_closed(n, b.theta_max);
            assert!((b.optimal_metric_gxixi - g).abs() < 1e-12 * g);
            let v = speed_closed(&params(n, 0.7, b.theta_max, 0.0)).unwrap();
            assert!((b.v_max - v).abs() < 1e-12 * v);
        }
        assert!(brachistochrone(1, 1.0, 1.0).is_err());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&params(3, 1.0, 1.0, 0.0)).unwrap(), 0.0);
        let s = distance(&params(5, 1.0, PI / 2.0, 1.7)).unwrap();
        assert!((s - 1.7 / 2.0 * libm::sqrt(10.0)).abs() < 1e-13);
        let a = distance(&params(4, 2.0, 0.6, 0.8)).unwrap();
        let b = distance(&params(4, 2.0, 0.6, 1.6)).unwrap();
        assert!((b - 2.0 * a).abs() < 1e-14);
    }

    #[test]
    fn argmax_examples() {
        let r = verify_speed_is_argmax(5).unwrap();
        assert!(r.deviation < 1e-6);
        assert!((libm::sin(r.closed).powi(2) - 4.0 / 7.0).abs() < 1e-14);
        assert!(r.dominates_probes);
        assert!(verify_speed_is_argmax(2).is_err());
    }
}
