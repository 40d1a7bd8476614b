//! The verification suite: every acceptance check, each compared against an
//! independent oracle, collected into a versioned JSON report.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use ising_geometry::dynamics::{
    brachistochrone, distance, speed_closed, speed_from_energy, t_min_ratio, theta_of_max_speed,
    verify_speed_is_argmax,
};
use ising_geometry::geometry::{
    calibrate_cross_term, euler_characteristic, fs_metric_closed_with, fs_metric_numeric, gaussian_curvature_closed,
    gaussian_curvature_numeric, initial_sphere_radius, Coord, DEFAULT_STEP,
};
use ising_geometry::math::phase_distance;
use ising_geometry::phases::{
    aa_phase_closed, aa_phase_from_curvature, aa_phase_numeric, dynamic_phase, geometric_phase_closed, topological_phase,
    total_phase, total_phase_period,
};
use ising_geometry::spin::{dicke_to_full, evolved_state, full_evolve_oracle, measured_period};
use ising_geometry::two_spin::{
    aa_phase_of_concurrence, concurrence_closed, critical_concurrence, critical_concurrence_numeric,
    curvature_of_concurrence, geometric_phase_of_concurrence, speed_distance_opttime_of_concurrence,
    wootters_concurrence, ConcurrencePoint, TOPOLOGICAL_PHASE,
};
use ising_geometry::{FullState, ModelParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{linspace, ConfigError};
use crate::figures::{generate, FigureId, FigureSpec, DEFAULT_SPINS, THETA_POINTS};

pub const SEED: u64 = 0x5eed_1515;
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DiscrepancyDocumented,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyDocumented => "discrepancy-documented",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    /// Topic the check belongs to.
    pub paper_anchor: &'static str,
    pub status: Status,
    pub measured: Option<f64>,
    pub expected: Option<f64>,
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, anchor: &'static str, status: Status) -> Self {
        Self {
            criterion,
            name: name.into(),
            paper_anchor: anchor,
            status,
            measured: None,
            expected: None,
            tolerance: None,
            detail: None,
        }
    }

    fn pass_if(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// `|measured - expected| <= tol`.
    fn value(criterion: u8, name: impl Into<String>, anchor: &'static str, measured: f64, expected: f64, tol: f64) -> Self {
        let ok = (measured - expected).abs() <= tol;
        Self {
            measured: Some(measured),
            expected: Some(expected),
            tolerance: Some(tol),
            ..Self::new(criterion, name, anchor, Self::pass_if(ok))
        }
    }

    /// A largest deviation that must stay within `tol`.
    fn deviation(criterion: u8, name: impl Into<String>, anchor: &'static str, dev: f64, tol: f64) -> Self {
        Self::value(criterion, name, anchor, dev, 0.0, tol)
    }

    /// `measured < limit`.
    fn below(criterion: u8, name: impl Into<String>, anchor: &'static str, measured: f64, limit: f64) -> Self {
        Self {
            measured: Some(measured),
            tolerance: Some(limit),
            ..Self::new(criterion, name, anchor, Self::pass_if(measured < limit))
        }
    }

    fn flag(criterion: u8, name: impl Into<String>, anchor: &'static str, ok: bool) -> Self {
        Self {
            measured: Some(if ok { 1.0 } else { 0.0 }),
            expected: Some(1.0),
            ..Self::new(criterion, name, anchor, Self::pass_if(ok))
        }
    }

    /// A claim that disagrees with what is measured. Agreement within `tol`
    /// would make the claim hold, so it is reported as a pass instead.
    fn discrepancy(
        criterion: u8,
        name: impl Into<String>,
        anchor: &'static str,
        measured: f64,
        claimed: f64,
        tol: f64,
        detail: impl Into<String>,
    ) -> Self {
        let agrees = (measured - claimed).abs() <= tol;
        Self {
            measured: Some(measured),
            expected: Some(claimed),
            tolerance: Some(tol),
            detail: Some(detail.into()),
            ..Self::new(
                criterion,
                name,
                anchor,
                if agrees { Status::Pass } else { Status::DiscrepancyDocumented },
            )
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn failed(criterion: u8, name: impl Into<String>, anchor: &'static str, err: impl std::fmt::Display) -> Self {
        Self::new(criterion, name, anchor, Status::Fail).with_detail(format!("evaluation error: {err}"))
    }
}

/// Named tolerances; overrides must name an existing entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances(BTreeMap<&'static str, f64>);

impl Default for Tolerances {
    fn default() -> Self {
        Self(BTreeMap::from([
            ("representation", 1e-12),
            ("representation_time_s", 5.0),
            ("metric", 1e-6),
            ("curvature", 1e-5),
            ("gauss_bonnet", 1e-3),
            ("gauss_bonnet_time_s", 10.0),
            ("geometric_phase", 1e-9),
            ("dynamic_phase", 1e-12),
            ("aa_phase", 1e-6),
            ("speed", 1e-10),
            ("argmax", 1e-6),
            ("concurrence", 1e-12),
            ("concurrence_chart", 1e-9),
            ("critical_concurrence", 1e-4),
            ("figure_symmetry", 1e-9),
            ("suite_time_s", 60.0),
        ]))
    }
}

impl Tolerances {
    pub fn with_overrides(overrides: &BTreeMap<String, f64>) -> Result<Self, ConfigError> {
        let mut t = Self::default();
        for (name, &value) in overrides {
            let slot = t
                .0
                .iter_mut()
                .find(|(k, _)| **k == name.as_str())
                .map(|(_, v)| v)
                .ok_or_else(|| ConfigError::TolName(name.clone()))?;
            if !(value > 0.0 && value.is_finite()) {
                return Err(ConfigError::TolValue {
                    name: name.clone(),
                    value,
                });
            }
            *slot = value;
        }
        Ok(t)
    }

    pub fn get(&self, name: &str) -> f64 {
        *self.0.get(name).unwrap_or_else(|| panic!("no tolerance named {name}"))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.keys().copied()
    }
}

fn params(n: usize, theta: f64, phi: f64, xi: f64) -> ModelParams {
    ModelParams::new(n, 1.0, theta, phi, xi).expect("suite parameters are in range")
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates so that a broken evaluation cannot pass
    values.into_iter().fold(0.0, |a: f64, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
}

pub fn criterion_1(tol: &Tolerances) -> Vec<Check> {
    let anchor = "representation-equivalence";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 2..=12 {
        for _ in 0..50 {
            let p = params(n, rng.gen_range(0.0..=PI), rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..4.0 * PI));
            let run = || -> ising_geometry::Result<f64> {
                let dicke = dicke_to_full(&evolved_state(&p)?)?;
                let oracle = full_evolve_oracle(&FullState::product(n, p.theta, p.phi)?, &p)?;
                Ok((1.0 - dicke.inner(&oracle)?.norm_sqr()).abs())
            };
            match run() {
                Ok(v) => worst = max_of([worst, v]),
                Err(e) => return vec![Check::failed(1, "Dicke vs full-space evolution fidelity", anchor, e)],
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    vec![
        Check::deviation(1, "Dicke vs full-space evolution infidelity, N=2..12", anchor, worst, tol.get("representation"))
            .with_detail("50 seeded random (theta, phi, xi) per N"),
        Check::below(1, "representation check runtime [s]", anchor, elapsed, tol.get("representation_time_s")),
    ]
}

pub fn criterion_2(tol: &Tolerances) -> Vec<Check> {
    let anchor = "fubini-study-metric";
    let t = tol.get("metric");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let calibration_point = params(3, 0.8, 0.1, 0.4);
    let (convention, calib_dev) = match calibrate_cross_term(&calibration_point, DEFAULT_STEP) {
        Ok(c) => c,
        Err(e) => return vec![Check::failed(2, "cross-term calibration", anchor, e)],
    };
    let diag = [Coord::Theta, Coord::Phi, Coord::Xi];
    let mut worst_diag: f64 = 0.0;
    let mut worst_cross: f64 = 0.0;
    for n in [2, 3, 5, 8] {
        for _ in 0..100 {
            let p = params(n, rng.gen_range(0.1..=PI - 0.1), rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI));
            let (closed, numeric) = match (fs_metric_closed_with(&p, convention), fs_metric_numeric(&p, DEFAULT_STEP)) {
                (Ok(c), Ok(m)) => (c, m),
                (Err(e), _) | (_, Err(e)) => return vec![Check::failed(2, "metric evaluation", anchor, e)],
            };
            for a in diag {
                worst_diag = max_of([worst_diag, (closed.get(a, a) - numeric.get(a, a)).abs()]);
                for b in diag.into_iter().filter(|&b| b != a) {
                    worst_cross = max_of([worst_cross, (closed.get(a, b) - numeric.get(a, b)).abs()]);
                }
            }
        }
    }
    vec![
        Check::deviation(2, "cross-term convention fit on the calibration point", anchor, calib_dev, t)
            .with_detail(format!("selected {} (coefficient {})", convention.name(), convention.coefficient())),
        Check::deviation(2, "diagonal metric vs finite-difference metric, N in {2,3,5,8}", anchor, worst_diag, t),
        Check::deviation(2, "off-diagonal metric under the calibrated convention", anchor, worst_cross, t)
            .with_detail("100 interior points per N, theta in [0.1, pi-0.1]"),
    ]
}

pub fn criterion_3(tol: &Tolerances) -> Vec<Check> {
    let anchor = "gaussian-curvature";
    let mut worst: f64 = 0.0;
    for n in 2..=6 {
        for theta in linspace(0.1, PI - 0.1, 60) {
            let p = params(n, theta, 0.0, 0.7);
            match (gaussian_curvature_closed(&p), gaussian_curvature_numeric(&p, DEFAULT_STEP)) {
                (Ok(c), Ok(m)) => worst = max_of([worst, (c.k - m.k).abs() / c.k.abs().max(1.0)]),
                (Err(e), _) | (_, Err(e)) => return vec![Check::failed(3, "curvature evaluation", anchor, e)],
            }
        }
    }
    let k_mid = gaussian_curvature_closed(&params(2, PI / 2.0, 0.0, 1.0)).map(|s| s.k).unwrap_or(f64::NAN);
    let all_negative_somewhere = (3..=12).all(|n| {
        linspace(0.1, PI - 0.1, 61)
            .into_iter()
            .any(|t| gaussian_curvature_closed(&params(n, t, 0.0, 1.0)).map(|s| s.k < 0.0).unwrap_or(false))
    });
    vec![
        Check::deviation(3, "closed vs Christoffel curvature (relative), N=2..6", anchor, worst, tol.get("curvature"))
            .with_detail("relative to max(|K|, 1) on a 60-point theta grid"),
        Check::value(3, "K(pi/2) for N=2", anchor, k_mid, 0.0, 1e-12),
        Check::flag(3, "negative curvature region exists for N=3..12", anchor, all_negative_somewhere),
    ]
}

pub fn criterion_4(tol: &Tolerances) -> Vec<Check> {
    let anchor = "gauss-bonnet";
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut all_two = true;
    let mut chis = Vec::new();
    for n in 2..=6usize {
        match euler_characteristic(n) {
            Ok(r) => {
                worst = max_of([worst, (r.bulk_integral - 4.0 * PI * (n as f64 - 1.0)).abs()]);
                all_two &= r.rounded == 2;
                chis.push(format!("N={n}: {:.9}", r.euler_characteristic));
            }
            Err(e) => return vec![Check::failed(4, "Gauss-Bonnet evaluation", anchor, e)],
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    vec![
        Check::deviation(4, "bulk integral vs 4*pi*(N-1), N=2..6", anchor, worst, tol.get("gauss_bonnet")),
        Check::flag(4, "Euler characteristic rounds to 2, N=2..6", anchor, all_two).with_detail(chis.join(", ")),
        Check::below(4, "Gauss-Bonnet runtime [s]", anchor, elapsed, tol.get("gauss_bonnet_time_s")),
    ]
}

pub fn criterion_5(tol: &Tolerances) -> Vec<Check> {
    let anchor = "geometric-phase";
    let mut worst_g: f64 = 0.0;
    let mut worst_dyn: f64 = 0.0;
    let mut skipped = 0usize;
    for n in [2, 3, 4] {
        for theta in linspace(0.0, PI, 20) {
            for xi in linspace(0.0, 2.0 * PI, 20) {
                let p = params(n, theta, 0.3, xi);
                let run = || -> ising_geometry::Result<(Option<f64>, f64)> {
                    let initial = FullState::product(n, theta, p.phi)?;
                    let evolved = full_evolve_oracle(&initial, &p)?;
                    let ov = initial.inner(&evolved)?;
                    let (mean, _) = evolved.energy_moments(p.coupling);
                    let oracle_dyn = -xi * mean / p.coupling;
                    let dyn_dev = (dynamic_phase(&p)?.value - oracle_dyn).abs();
                    if ov.norm() < 1e-9 {
                        return Ok((None, dyn_dev));
                    }
                    let g_dev = phase_distance(geometric_phase_closed(&p)?, ov.arg() - oracle_dyn);
                    Ok((Some(g_dev), dyn_dev))
                };
                match run() {
                    Ok((g, d)) => {
                        match g {
                            Some(g) => worst_g = max_of([worst_g, g]),
                            None => skipped += 1,
                        }
                        worst_dyn = max_of([worst_dyn, d]);
                    }
                    Err(e) => return vec![Check::failed(5, "phase evaluation", anchor, e)],
                }
            }
        }
    }
    let pole = max_of([0.0, PI].into_iter().flat_map(|theta| {
        linspace(0.0, 2.0 * PI, 20)
            .into_iter()
            .map(move |xi| geometric_phase_closed(&params(3, theta, 0.0, xi)).map_or(f64::NAN, |g| phase_distance(g, 0.0)))
    }));
    vec![
        Check::deviation(5, "closed geometric phase vs oracle arg(overlap) - dynamic phase (mod 2pi)", anchor, worst_g, tol.get("geometric_phase"))
            .with_detail(format!("20x20 (theta, xi) grid x N in {{2,3,4}}; {skipped} points with |overlap| < 1e-9 skipped")),
        Check::deviation(5, "dynamic phase vs -xi <H>/J from the full-space oracle", anchor, worst_dyn, tol.get("dynamic_phase")),
        Check::deviation(5, "geometric phase at theta in {0, pi} (mod 2pi)", anchor, pole, tol.get("dynamic_phase")),
    ]
}

pub fn criterion_6(tol: &Tolerances) -> Vec<Check> {
    let anchor = "aharonov-anandan-phase";
    let mut worst: f64 = 0.0;
    let mut crossings = Vec::new();
    for n in [2, 3, 4] {
        for theta in [0.3, 0.9, PI / 2.0, 2.2] {
            let p = params(n, theta, 0.0, 0.0);
            match (aa_phase_numeric(&p), aa_phase_closed(&p)) {
                (Ok(num), Ok(closed)) => {
                    worst = max_of([worst, phase_distance(num.phase.value, closed.value)]);
                    if !num.zero_crossings.is_empty() {
                        crossings.push(format!("N={n}, theta={theta:.4}: overlap zero at xi={:?}", num.zero_crossings));
                    }
                }
                (Err(e), _) | (_, Err(e)) => return vec![Check::failed(6, "AA phase evaluation", anchor, e)],
            }
        }
    }
    let mut detail = String::from("cycle length 2*pi");
    if !crossings.is_empty() {
        detail.push_str("; ");
        detail.push_str(&crossings.join("; "));
    }
    let top = topological_phase(2).map(|v| v.value).unwrap_or(f64::NAN);
    vec![
        Check::deviation(6, "numeric cycle integral vs -(pi/2)N(N-1)sin^2(theta) (mod 2pi)", anchor, worst, tol.get("aa_phase"))
            .with_detail(detail),
        Check::value(6, "two-spin topological phase", anchor, top, -2.0 * PI, 0.0),
        Check::value(6, "two-spin topological phase, concurrence chart", anchor, TOPOLOGICAL_PHASE, top, 0.0),
    ]
}

pub fn criterion_7(tol: &Tolerances) -> Vec<Check> {
    let anchor = "evolution-speed";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst_two: f64 = 0.0;
    let mut worst_one: f64 = 0.0;
    for n in 2..=12 {
        for _ in 0..10 {
            let p = ModelParams::new(n, rng.gen_range(0.5..2.0), rng.gen_range(0.05..PI - 0.05), rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..3.0))
                .expect("suite parameters are in range");
            match (speed_closed(&p), speed_from_energy(&p)) {
                (Ok(v), Ok(two_spread)) => {
                    worst_two = max_of([worst_two, (v - two_spread).abs() / two_spread]);
                    worst_one = max_of([worst_one, (v - two_spread / 2.0).abs() / (two_spread / 2.0)]);
                }
                (Err(e), _) | (_, Err(e)) => return vec![Check::failed(7, "speed evaluation", anchor, e)],
            }
        }
    }
    let vmax = brachistochrone(2, 1.7, 1.0).map(|b| b.v_max).unwrap_or(f64::NAN);
    let v_mid = speed_closed(&ModelParams::new(2, 1.7, PI / 2.0, 0.0, 0.0).expect("valid")).unwrap_or(f64::NAN);
    vec![
        Check::deviation(7, "metric speed vs 2*DeltaE (relative), N=2..12", anchor, worst_two, tol.get("speed"))
            .with_detail("the metric speed equals DeltaE, so the factor 2 of the asserted identity is not reproduced"),
        Check::deviation(7, "metric speed vs DeltaE (relative), N=2..12", anchor, worst_one, tol.get("speed")),
        Check::value(7, "V_max for N=2 at J=1.7", anchor, vmax, 1.7 / 2.0, 1e-12),
        Check::value(7, "V(pi/2) for N=2 at J=1.7", anchor, v_mid, 1.7 / 2.0, 1e-12),
    ]
}

pub fn criterion_8(tol: &Tolerances) -> Vec<Check> {
    let anchor = "brachistochrone";
    let mut worst: f64 = 0.0;
    for n in 2..=64 {
        match brachistochrone(n, 1.3, 2.0) {
            Ok(b) => {
                let formula = (2.0 * n as f64 - 3.0).sqrt() / (n as f64 - 1.0);
                worst = max_of([worst, (b.t_min / b.t - formula).abs()]);
            }
            Err(e) => return vec![Check::failed(8, "brachistochrone evaluation", anchor, e)],
        }
    }
    let ratios: Vec<f64> = (3..=64).map(t_min_ratio).collect();
    let below_one_decreasing = ratios.iter().all(|&r| r < 1.0) && ratios.windows(2).all(|w| w[1] < w[0]);
    let mut argmax_worst: f64 = 0.0;
    let mut dominates = true;
    for n in 3..=12 {
        match verify_speed_is_argmax(n) {
            Ok(r) => {
                argmax_worst = max_of([argmax_worst, r.deviation]);
                dominates &= r.dominates_probes;
            }
            Err(e) => return vec![Check::failed(8, "argmax evaluation", anchor, e)],
        }
    }
    vec![
        Check::deviation(8, "t_min/t vs sqrt(2N-3)/(N-1), N=2..64", anchor, worst, 1e-12),
        Check::value(8, "t_min/t at N=2", anchor, t_min_ratio(2), 1.0, 1e-15),
        Check::flag(8, "t_min/t below 1 and decreasing for N=3..64", anchor, below_one_decreasing),
        Check::below(8, "t_min/t at N=10^6", anchor, t_min_ratio(1_000_000), 0.01),
        Check::deviation(8, "numeric argmax of V vs arcsin sqrt((N-1)/(2N-3)), N=3..12", anchor, argmax_worst, tol.get("argmax")),
        Check::flag(8, "V(theta_max) dominates all probe angles, N=3..12", anchor, dominates),
        Check::value(8, "theta_max at N=2", anchor, theta_of_max_speed(2), PI / 2.0, 1e-15),
    ]
}

fn oracle_concurrence(theta: f64, xi: f64) -> ising_geometry::Result<f64> {
    let p = params(2, theta, 0.37, xi);
    let state = full_evolve_oracle(&FullState::product(2, theta, p.phi)?, &p)?;
    let a = state.amplitudes();
    let mut rho = ising_geometry::CMatrix::zeros(4);
    for r in 0..4 {
        for c in 0..4 {
            rho[(r, c)] = a[r] * a[c].conj();
        }
    }
    wootters_concurrence(&rho)
}

pub fn criterion_9(tol: &Tolerances) -> Vec<Check> {
    let anchor = "concurrence";
    let t = tol.get("concurrence");
    let mut worst: f64 = 0.0;
    let mut peak: f64 = 0.0;
    for theta in linspace(0.0, PI, 50) {
        for xi in linspace(0.0, PI, 50) {
            match oracle_concurrence(theta, xi) {
                Ok(c) => {
                    worst = max_of([worst, (c - concurrence_closed(theta, xi)).abs()]);
                    peak = peak.max(c);
                }
                Err(e) => return vec![Check::failed(9, "Wootters evaluation", anchor, e)],
            }
        }
    }
    let at_max = oracle_concurrence(PI / 2.0, PI / 2.0).unwrap_or(f64::NAN);
    let at_poles = max_of(
        [0.0, PI]
            .into_iter()
            .flat_map(|theta| linspace(0.0, PI, 50).into_iter().map(move |xi| oracle_concurrence(theta, xi).unwrap_or(f64::NAN))),
    );
    vec![
        Check::deviation(9, "Wootters concurrence vs sin^2(theta)|sin(xi)| on a 50x50 grid", anchor, worst, t),
        Check::value(9, "concurrence at (pi/2, pi/2)", anchor, at_max, 1.0, t),
        Check::flag(9, "concurrence never exceeds 1 on the grid", anchor, peak <= 1.0 + t),
        Check::deviation(9, "concurrence at theta in {0, pi}", anchor, at_poles, t),
    ]
}

pub fn criterion_10(tol: &Tolerances) -> Vec<Check> {
    let anchor = "concurrence-chart";
    let t = tol.get("concurrence_chart");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    // K, Φ_g, Φ_AA, V, S, τ
    let mut worst = [0.0f64; 6];
    let mut sampled = 0;
    while sampled < 200 {
        let theta = rng.gen_range(0.01..PI - 0.01);
        let xi = rng.gen_range(0.05..2.0 * PI - 0.05);
        if xi.sin().abs() <= 0.05 {
            continue;
        }
        sampled += 1;
        let j = 1.4;
        let p = ModelParams::new(2, j, theta, 0.0, xi).expect("valid");
        let run = || -> ising_geometry::Result<[f64; 6]> {
            let pt = ConcurrencePoint::from_angles(theta, xi)?;
            let (v, s, tau) = speed_distance_opttime_of_concurrence(&pt, j)?;
            let s_direct = distance(&p)?;
            let v_max = brachistochrone(2, j, xi)?.v_max;
            Ok([
                (curvature_of_concurrence(&pt)? - gaussian_curvature_closed(&p)?.k).abs(),
                phase_distance(geometric_phase_of_concurrence(&pt)?.value, geometric_phase_closed(&p)?),
                (aa_phase_of_concurrence(&pt).value - aa_phase_closed(&p)?.value).abs(),
                (v - speed_closed(&p)?).abs(),
                (s - s_direct).abs(),
                (tau - s_direct / v_max).abs(),
            ])
        };
        match run() {
            Ok(d) => {
                for (w, x) in worst.iter_mut().zip(d) {
                    *w = max_of([*w, x]);
                }
            }
            Err(e) => return vec![Check::failed(10, "concurrence-chart evaluation", anchor, e)],
        }
    }
    let names = ["K", "geometric phase (mod 2pi)", "AA phase", "speed", "distance", "optimal time"];
    let mut checks: Vec<Check> = names
        .iter()
        .zip(worst)
        .map(|(name, w)| Check::deviation(10, format!("{name}: concurrence chart vs (theta, xi)"), anchor, w, t))
        .collect();
    let k0 = max_of([0.5, 1.0, 2.0, 2.5, 4.0].into_iter().map(|xi| {
        ConcurrencePoint::new(0.0, xi)
            .and_then(|p| curvature_of_concurrence(&p))
            .map_or(f64::NAN, |k| (k - 5.0).abs())
    }));
    checks.push(Check::deviation(10, "K at C=0 equals 5", anchor, k0, 1e-12));
    for xi in [1.0, 2.0] {
        let (num, reference) = (critical_concurrence_numeric(xi, 1e-10), critical_concurrence(xi));
        checks.push(match (num, reference) {
            (Ok(a), Ok(b)) => Check::value(10, format!("argmin of geometric phase vs reference C_c at xi={xi}"), anchor, a, b, tol.get("critical_concurrence")),
            (Err(e), _) | (_, Err(e)) => Check::failed(10, "critical concurrence", anchor, e),
        });
    }
    checks
}

pub fn criterion_11(tol: &Tolerances) -> Vec<Check> {
    let anchor = "documented-discrepancy";
    let mut checks = Vec::new();

    // (a) the AA-curvature relation
    let mut worst: f64 = 0.0;
    let mut spots = Vec::new();
    for n in [3, 4, 5] {
        for theta in [0.4, 1.0, 1.3] {
            let p = params(n, theta, 0.0, 0.0);
            let dev = gaussian_curvature_closed(&p)
                .and_then(|k| aa_phase_from_curvature(n, k.k))
                .and_then(|relation| aa_phase_closed(&p).map(|direct| phase_distance(relation, direct.value)))
                .unwrap_or(f64::NAN);
            spots.push(format!("N={n}, theta={theta}: {dev:.4}"));
            worst = max_of([worst, dev]);
        }
    }
    checks.push(Check::discrepancy(
        11,
        "reference AA-curvature relation vs direct AA phase (mod 2pi)",
        anchor,
        worst,
        0.0,
        tol.get("aa_phase"),
        format!("largest deviation over spot points: {}", spots.join("; ")),
    ));

    // (b) radius of the initial-state sphere
    let n = 4;
    let claimed = 2.0 * (n as f64).sqrt();
    let from_metric = fs_metric_numeric(&params(n, 1.0, 0.4, 0.0), DEFAULT_STEP)
        .map(|g| g.get(Coord::Theta, Coord::Theta).sqrt())
        .unwrap_or(f64::NAN);
    checks.push(Check::discrepancy(
        11,
        "initial-state sphere radius: claimed 2*sqrt(N) vs metric, N=4",
        anchor,
        from_metric,
        claimed,
        tol.get("metric"),
        "the metric at xi=0 is a sphere of radius sqrt(N)/2",
    ));
    checks.push(Check::value(
        11,
        "initial-state sphere radius from the finite-difference metric vs sqrt(N)/2, N=4",
        anchor,
        from_metric,
        initial_sphere_radius(n),
        tol.get("metric"),
    ));

    // (c) periodicity in xi
    for n in [3, 5, 7] {
        let measured = measured_period(n).map(|m| m.amplitude).unwrap_or(f64::NAN);
        checks.push(Check::discrepancy(
            11,
            format!("state period for odd N={n}: claimed 2*pi"),
            anchor,
            measured,
            2.0 * PI,
            1e-12,
            "level phases (N-2p)^2/4 are quarter-integers for odd N, so the state repeats only after 8*pi",
        ));
        let shift = total_phase(&params(n, 1.0, 0.0, 0.9 + 4.0 * PI), None)
            .and_then(|b| total_phase(&params(n, 1.0, 0.0, 0.9), None).map(|a| phase_distance(b.value, a.value)))
            .unwrap_or(f64::NAN);
        checks.push(Check::discrepancy(
            11,
            format!("total-phase shift under xi -> xi + 4*pi for odd N={n}: claimed 0"),
            anchor,
            shift,
            0.0,
            1e-9,
            format!(
                "the total phase shifts by pi; measured total-phase period {}*pi",
                total_phase_period(n).map_or(f64::NAN, |t| t / PI)
            ),
        ));
    }
    let even_ok = [2, 4, 6].into_iter().all(|n| {
        measured_period(n).map(|m| (m.amplitude - 2.0 * PI).abs() < 1e-12).unwrap_or(false)
            && total_phase(&params(n, 1.0, 0.0, 0.9 + 4.0 * PI), None)
                .and_then(|b| total_phase(&params(n, 1.0, 0.0, 0.9), None).map(|a| phase_distance(b.value, a.value) < 1e-9))
                .unwrap_or(false)
    });
    checks.push(Check::flag(11, "even N: state period 2*pi and total phase 4*pi-periodic", anchor, even_ok));
    checks
}

pub fn criterion_12(tol: &Tolerances) -> Vec<Check> {
    let anchor = "figure-regeneration";
    let t = tol.get("figure_symmetry");
    let spec = FigureSpec::default();
    let tables: Vec<_> = FigureId::ALL.iter().map(|&id| (id, generate(id, &spec))).collect();
    let emitted = tables
        .iter()
        .all(|(id, tab)| !tab.rows.is_empty() && tab.rows.iter().any(|r| r[1..].iter().any(Option::is_some)) && tab.header.len() > 1 && !id.name().is_empty());
    let mut checks = vec![Check::flag(12, "all nine figure tables emit", anchor, emitted).with_detail(
        tables.iter().map(|(id, tab)| format!("{id}: {} rows", tab.rows.len())).collect::<Vec<_>>().join(", "),
    )];
    let table = |id: FigureId| &tables.iter().find(|(i, _)| *i == id).expect("generated").1;
    let symmetry = |id: FigureId| -> f64 {
        let tab = table(id);
        let last = tab.rows.len() - 1;
        max_of((0..tab.rows.len()).flat_map(|i| {
            (1..tab.header.len()).filter_map(move |c| match (tab.rows[i][c], tab.rows[last - i][c]) {
                (Some(a), Some(b)) => Some((a - b).abs()),
                (None, None) => None,
                _ => Some(f64::NAN),
            })
        }))
    };
    checks.push(Check::deviation(12, "K(theta) = K(pi - theta) across all series", anchor, symmetry(FigureId::CurvatureTheta), t));
    checks.push(Check::deviation(12, "V(theta) = V(pi - theta) across all series", anchor, symmetry(FigureId::SpeedTheta), t));
    let aa = table(FigureId::AaTheta);
    let mid = (THETA_POINTS - 1) / 2;
    let minima_ok = DEFAULT_SPINS.iter().all(|&n| {
        let col: Vec<f64> = aa.column(&format!("N={n}")).unwrap_or_default().into_iter().map(|v| v.unwrap_or(f64::NAN)).collect();
        let argmin = col.iter().enumerate().fold((0, f64::INFINITY), |a, (i, &v)| if v < a.1 { (i, v) } else { a });
        let nf = n as f64;
        argmin.0 == mid && (argmin.1 + PI / 2.0 * nf * (nf - 1.0)).abs() <= t
    });
    checks.push(Check::flag(12, "AA phase minima at theta = pi/2 with value -(pi/2)N(N-1)", anchor, minima_ok));
    let k0 = max_of(table(FigureId::KOfC).rows[0][1..].iter().map(|v| v.map_or(f64::NAN, |k| (k - 5.0).abs())));
    checks.push(Check::deviation(12, "k_of_c intercept at C=0 equals 5 for every series", anchor, k0, t));
    checks
}

pub type CriterionFn = fn(&Tolerances) -> Vec<Check>;

pub const CRITERIA: [CriterionFn; 12] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "discrepancy-documented")]
    pub discrepancy_documented: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub checks: Vec<Check>,
    pub counts: Counts,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let counts = Counts {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            discrepancy_documented: count(Status::DiscrepancyDocumented),
        };
        Self {
            schema: SCHEMA_VERSION,
            checks,
            counts,
        }
    }

    pub fn ok(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    /// One line per criterion: FAIL if any of its checks failed.
    pub fn summary_lines(&self) -> Vec<String> {
        (1..=12u8)
            .map(|k| {
                let checks: Vec<&Check> = self.checks.iter().filter(|c| c.criterion == k).collect();
                let failed: Vec<&str> = checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
                let documented = checks.iter().filter(|c| c.status == Status::DiscrepancyDocumented).count();
                let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
                let mut line = format!("{verdict} criterion {k}: {} checks", checks.len());
                if documented > 0 {
                    line.push_str(&format!(", {documented} discrepancy-documented"));
                }
                if !failed.is_empty() {
                    line.push_str(&format!(", failed: {}", failed.join("; ")));
                }
                line
            })
            .collect()
    }
}

/// Runs every criterion and appends the suite wall-time check.
pub fn run_all(tol: &Tolerances) -> Report {
    let start = Instant::now();
    let mut checks: Vec<Check> = CRITERIA.iter().flat_map(|f| f(tol)).collect();
    checks.push(Check::below(
        12,
        "verify suite wall time [s]",
        "figure-regeneration",
        start.elapsed().as_secs_f64(),
        tol.get("suite_time_s"),
    ));
    Report::new(checks)
}
