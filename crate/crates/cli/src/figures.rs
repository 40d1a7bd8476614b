//! Figure data: one table per figure, one column per series.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use ising_geometry::dynamics::speed_closed;
use ising_geometry::geometry::gaussian_curvature_closed;
use ising_geometry::phases::aa_phase_closed;
use ising_geometry::two_spin::{
    aa_phase_of_concurrence, curvature_of_concurrence, geometric_phase_of_concurrence,
    speed_distance_opttime_of_concurrence, ConcurrencePoint,
};
use ising_geometry::ModelParams;

use crate::config::{linspace, ConfigError, Grid, Labeled};
use crate::table::Table;

pub const THETA_POINTS: usize = 721;
pub const C_POINTS: usize = 501;
pub const DEFAULT_SPINS: [usize; 4] = [2, 3, 4, 5];

pub fn default_xi_series() -> Vec<Labeled> {
    vec![
        Labeled::new("pi/6", PI / 6.0),
        Labeled::new("pi/4", PI / 4.0),
        Labeled::new("pi/3", PI / 3.0),
        Labeled::new("pi/2", PI / 2.0),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    CurvatureTheta,
    AaTheta,
    SpeedTheta,
    KOfC,
    PhigOfC,
    AaOfC,
    VOfC,
    SOfC,
    TauOfC,
}

impl FigureId {
    pub const ALL: [FigureId; 9] = [
        FigureId::CurvatureTheta,
        FigureId::AaTheta,
        FigureId::SpeedTheta,
        FigureId::KOfC,
        FigureId::PhigOfC,
        FigureId::AaOfC,
        FigureId::VOfC,
        FigureId::SOfC,
        FigureId::TauOfC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::CurvatureTheta => "curvature_theta",
            FigureId::AaTheta => "aa_theta",
            FigureId::SpeedTheta => "speed_theta",
            FigureId::KOfC => "k_of_c",
            FigureId::PhigOfC => "phig_of_c",
            FigureId::AaOfC => "aa_of_c",
            FigureId::VOfC => "v_of_c",
            FigureId::SOfC => "s_of_c",
            FigureId::TauOfC => "tau_of_c",
        }
    }

    pub fn over_theta(self) -> bool {
        matches!(self, FigureId::CurvatureTheta | FigureId::AaTheta | FigureId::SpeedTheta)
    }

    pub fn file_name(self) -> String {
        format!("{}.csv", self.name())
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConfigError::Figure(s.to_string()))
    }
}

/// `all` selects every figure.
pub fn parse_selection(s: &str) -> Result<Vec<FigureId>, ConfigError> {
    if s == "all" {
        Ok(FigureId::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

/// Inputs shared by the figure generators.
#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub n_spins: Vec<usize>,
    pub coupling: f64,
    pub theta: Vec<f64>,
    pub xi: Vec<Labeled>,
    /// Overrides the common concurrence grid.
    pub c_grid: Option<Grid>,
}

impl Default for FigureSpec {
    fn default() -> Self {
        Self {
            n_spins: DEFAULT_SPINS.to_vec(),
            coupling: 1.0,
            theta: linspace(0.0, PI, THETA_POINTS),
            xi: default_xi_series(),
            c_grid: None,
        }
    }
}

impl FigureSpec {
    /// Common grid on `[0, min(1, max |sin ξ|)]`.
    pub fn c_points(&self) -> Vec<f64> {
        match &self.c_grid {
            Some(g) => g.points(),
            None => {
                let top = self.xi.iter().map(|x| x.value.sin().abs()).fold(0.0, f64::max).min(1.0);
                linspace(0.0, top, C_POINTS)
            }
        }
    }
}

pub fn generate(id: FigureId, spec: &FigureSpec) -> Table {
    if id.over_theta() {
        theta_figure(id, spec)
    } else {
        concurrence_figure(id, spec)
    }
}

fn theta_figure(id: FigureId, spec: &FigureSpec) -> Table {
    let mut table = Table::new(std::iter::once("theta".to_string()).chain(spec.n_spins.iter().map(|n| format!("N={n}"))));
    for &theta in &spec.theta {
        let mut row = vec![Some(theta)];
        for &n in &spec.n_spins {
            let cell = ModelParams::new(n, spec.coupling, theta, 0.0, 0.0).ok().and_then(|p| match id {
                FigureId::CurvatureTheta => gaussian_curvature_closed(&p).ok().map(|s| s.k),
                FigureId::AaTheta => aa_phase_closed(&p).ok().map(|v| v.value),
                FigureId::SpeedTheta => speed_closed(&p).ok(),
                _ => unreachable!("concurrence figure routed to theta generator"),
            });
            row.push(cell);
        }
        table.push(row);
    }
    table
}

fn concurrence_value(id: FigureId, point: &ConcurrencePoint, coupling: f64) -> Option<f64> {
    match id {
        FigureId::KOfC => curvature_of_concurrence(point).ok(),
        FigureId::PhigOfC => geometric_phase_of_concurrence(point).ok().map(|v| v.value),
        FigureId::AaOfC => Some(aa_phase_of_concurrence(point).value),
        FigureId::VOfC | FigureId::SOfC | FigureId::TauOfC => {
            let (v, s, tau) = speed_distance_opttime_of_concurrence(point, coupling).ok()?;
            Some(match id {
                FigureId::VOfC => v,
                FigureId::SOfC => s,
                _ => tau,
            })
        }
        _ => unreachable!("theta figure routed to concurrence generator"),
    }
}

fn concurrence_figure(id: FigureId, spec: &FigureSpec) -> Table {
    let mut table = Table::new(std::iter::once("C".to_string()).chain(spec.xi.iter().map(|x| format!("xi={}", x.label))));
    for c in spec.c_points() {
        let mut row = vec![Some(c)];
        for xi in &spec.xi {
            // points beyond |sin ξ| are outside this series' domain
            let cell = ConcurrencePoint::new(c, xi.value)
                .ok()
                .and_then(|p| concurrence_value(id, &p, spec.coupling));
            row.push(cell);
        }
        table.push(row);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert_eq!(parse_selection("all").unwrap().len(), 9);
        assert!(parse_selection("fig1").is_err());
    }

    #[test]
    fn curvature_series() {
        let t = generate(FigureId::CurvatureTheta, &FigureSpec::default());
        assert_eq!(t.header, ["theta", "N=2", "N=3", "N=4", "N=5"]);
        assert_eq!(t.rows.len(), THETA_POINTS);
        let col = t.column("N=2").unwrap();
        assert_eq!(col[0], None);
        assert_eq!(col[720], None);
        assert!(col[360].unwrap().abs() < 1e-12);
    }

    #[test]
    fn concurrence_series() {
        let spec = FigureSpec::default();
        let t = generate(FigureId::KOfC, &spec);
        assert_eq!(t.header[1], "xi=pi/6");
        assert_eq!(t.rows.len(), C_POINTS);
        for v in &t.rows[0][1..] {
            assert!((v.unwrap() - 5.0).abs() < 1e-12);
        }
        // sin(π/6) = 1/2 ends the first series halfway along the grid
        let col = t.column("xi=pi/6").unwrap();
        assert!(col[250].is_some());
        assert!(col[251].is_none());
        assert!(t.column("xi=pi/2").unwrap().iter().all(Option::is_some));
    }

    #[test]
    fn aa_theta_minimum() {
        let t = generate(FigureId::AaTheta, &FigureSpec::default());
        for n in DEFAULT_SPINS {
            let col: Vec<f64> = t.column(&format!("N={n}")).unwrap().into_iter().map(Option::unwrap).collect();
            let (idx, min) = col.iter().enumerate().fold((0, f64::INFINITY), |a, (i, &v)| if v < a.1 { (i, v) } else { a });
            let nf = n as f64;
            assert_eq!(idx, 360);
            assert!((min + PI / 2.0 * nf * (nf - 1.0)).abs() < 1e-12);
        }
    }
}
