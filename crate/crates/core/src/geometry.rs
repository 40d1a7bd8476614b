//! Fubini-Study geometry of the evolved N-spin state over (θ, φ, ξ).
//!
//! The metric is `g_μν = Re(⟨∂_μΨ|∂_νΨ⟩ - ⟨∂_μΨ|Ψ⟩⟨Ψ|∂_νΨ⟩)` with line
//! element `dS^2 = g_μν dζ^μ dζ^ν` (off-diagonal components counted twice).
//! Closed forms live next to a finite-difference route built directly from
//! state vectors, and the reduced (θ, ξ) surface carries the curvature,
//! Christoffel and Gauss-Bonnet machinery.

use alloc::vec::Vec;
use core::cell::RefCell;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math::{adaptive_simpson, dicke_weight, powi, richardson_derivative};
use crate::spin::{level_energy, ModelParams};

/// Default finite-difference step in every parameter.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Cutoff keeping Gauss-Bonnet quadrature away from the poles θ ∈ {0, π}.
pub const POLE_CUTOFF: f64 = 1e-6;

/// Metric coordinate order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coord {
    Theta = 0,
    Phi = 1,
    Xi = 2,
}

/// Fubini-Study metric tensor at a point of (θ, φ, ξ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSample {
    pub point: (f64, f64, f64),
    pub components: [[f64; 3]; 3],
}

impl MetricSample {
    pub fn get(&self, a: Coord, b: Coord) -> f64 {
        self.components[a as usize][b as usize]
    }

    pub fn g_theta_theta(&self) -> f64 {
        self.get(Coord::Theta, Coord::Theta)
    }

    pub fn g_phi_phi(&self) -> f64 {
        self.get(Coord::Phi, Coord::Phi)
    }

    pub fn g_xi_xi(&self) -> f64 {
        self.get(Coord::Xi, Coord::Xi)
    }

    pub fn g_phi_xi(&self) -> f64 {
        self.get(Coord::Phi, Coord::Xi)
    }

    /// Squared line element for a tangent vector (dθ, dφ, dξ).
    pub fn line_element(&self, d: [f64; 3]) -> f64 {
        let mut s = 0.0;
        for (i, di) in d.iter().enumerate() {
            for (j, dj) in d.iter().enumerate() {
                s += self.components[i][j] * di * dj;
            }
        }
        s
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.components[i][j] - self.components[j][i]).abs());
            }
        }
        worst
    }
}

/// Reading of the reference `(1/4) N(N-1) cosθ sin²θ dφ dξ` cross term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossTermConvention {
    /// The reference coefficient is the tensor component `g_φξ` itself,
    /// so the line element carries twice that coefficient.
    #[default]
    TensorComponent,
    /// The reference coefficient is the full line-element term, so
    /// `g_φξ` is half of it.
    LineElement,
}

impl CrossTermConvention {
    pub const ALL: [CrossTermConvention; 2] = [Self::TensorComponent, Self::LineElement];

    /// Factor multiplying `N(N-1) cosθ sin²θ` in `g_φξ`.
    pub fn coefficient(self) -> f64 {
        match self {
            Self::TensorComponent => 0.25,
            Self::LineElement => 0.125,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::TensorComponent => "tensor-component (g_phi_xi = N(N-1)cos(theta)sin^2(theta)/4)",
            Self::LineElement => "line-element (g_phi_xi = N(N-1)cos(theta)sin^2(theta)/8)",
        }
    }
}

/// `g_ξξ = (1/4) N(N-1) sin²θ [N-1 - (N-3/2) sin²θ]`.
pub fn g_xi_xi_closed(n_spins: usize, theta: f64) -> f64 {
    let n = n_spins as f64;
    let s2 = libm::sin(theta) * libm::sin(theta);
    0.25 * n * (n - 1.0) * s2 * (n - 1.0 - (n - 1.5) * s2)
}

/// `g_θθ = N/4`.
pub fn g_theta_theta_closed(n_spins: usize) -> f64 {
    n_spins as f64 / 4.0
}

/// Closed-form metric with the cross-term convention fixed by the
/// finite-difference oracle ([`CrossTermConvention::TensorComponent`]).
pub fn fs_metric_closed(params: &ModelParams) -> Result<MetricSample> {
    fs_metric_closed_with(params, CrossTermConvention::default())
}

pub fn fs_metric_closed_with(params: &ModelParams, convention: CrossTermConvention) -> Result<MetricSample> {
    params.validate()?;
    let n = params.n_spins as f64;
    let (st, ct) = (libm::sin(params.theta), libm::cos(params.theta));
    let mut g = [[0.0; 3]; 3];
    g[0][0] = g_theta_theta_closed(params.n_spins);
    g[1][1] = n / 4.0 * st * st;
    g[2][2] = g_xi_xi_closed(params.n_spins, params.theta);
    let cross = convention.coefficient() * n * (n - 1.0) * ct * st * st;
    g[1][2] = cross;
    g[2][1] = cross;
    Ok(MetricSample {
        point: (params.theta, params.phi, params.xi),
        components: g,
    })
}

/// Raw evolved Dicke amplitudes, valid for any real (θ, φ, ξ).
fn raw_state(n: usize, theta: f64, phi: f64, xi: f64) -> Vec<Complex64> {
    (0..=n)
        .map(|p| {
            let mag = libm::sqrt(dicke_weight(n, p, theta));
            Complex64::from_polar(mag, p as f64 * phi - xi * level_energy(n, p))
        })
        .collect()
}

fn vector_derivative<F: Fn(f64) -> Vec<Complex64>>(f: F, x: f64, h: f64) -> Vec<Complex64> {
    let central = |h: f64| -> Vec<Complex64> {
        let (a, b) = (f(x + h), f(x - h));
        a.iter().zip(&b).map(|(u, v)| (u - v) / (2.0 * h)).collect()
    };
    let d1 = central(h);
    let d2 = central(h / 2.0);
    d1.iter().zip(&d2).map(|(a, b)| (b * 4.0 - a) / 3.0).collect()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Finite-difference Fubini-Study metric from state-vector derivatives
/// (central differences with one Richardson refinement).
pub fn fs_metric_numeric(params: &ModelParams, step: f64) -> Result<MetricSample> {
    params.validate()?;
    if !(step > 0.0 && step.is_finite()) || params.theta - step <= 0.0 || params.theta + step >= PI {
        return Err(Error::Step {
            step,
            theta: params.theta,
        });
    }
    let n = params.n_spins;
    let (t, f, x) = (params.theta, params.phi, params.xi);
    let psi = raw_state(n, t, f, x);
    let d = [
        vector_derivative(|v| raw_state(n, v, f, x), t, step),
        vector_derivative(|v| raw_state(n, t, v, x), f, step),
        vector_derivative(|v| raw_state(n, t, f, v), x, step),
    ];
    let mut g = [[0.0; 3]; 3];
    for mu in 0..3 {
        for nu in 0..3 {
            let val = inner(&d[mu], &d[nu]) - inner(&d[mu], &psi) * inner(&psi, &d[nu]);
            g[mu][nu] = val.re;
        }
    }
    // symmetrize away O(roundoff) asymmetry
    for mu in 0..3 {
        for nu in (mu + 1)..3 {
            let s = 0.5 * (g[mu][nu] + g[nu][mu]);
            g[mu][nu] = s;
            g[nu][mu] = s;
        }
    }
    Ok(MetricSample {
        point: (t, f, x),
        components: g,
    })
}

/// Picks the cross-term convention whose closed form matches the numeric
/// metric at one calibration point.
pub fn calibrate_cross_term(params: &ModelParams, step: f64) -> Result<(CrossTermConvention, f64)> {
    let numeric = fs_metric_numeric(params, step)?.g_phi_xi();
    let mut best = (CrossTermConvention::default(), f64::INFINITY);
    for conv in CrossTermConvention::ALL {
        let dev = (fs_metric_closed_with(params, conv)?.g_phi_xi() - numeric).abs();
        if dev < best.1 {
            best = (conv, dev);
        }
    }
    Ok(best)
}

/// Gaussian curvature of the reduced (θ, ξ) surface at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureSample {
    pub point: (f64, f64),
    pub k: f64,
}

fn surface_domain(params: &ModelParams) -> Result<()> {
    params.validate()?;
    if params.n_spins < 2 {
        return Err(Error::Domain {
            name: "n_spins",
            value: params.n_spins as f64,
            reason: "the (theta, xi) surface degenerates for a single spin",
        });
    }
    if params.theta <= 0.0 || params.theta >= PI {
        return Err(Error::Singularity { theta: params.theta });
    }
    Ok(())
}

/// `K = (8/N)[2 - ((2N-3)cos²θ + N) / ((2N-3)cos²θ + 1)^2]`.
pub fn gaussian_curvature_closed(params: &ModelParams) -> Result<CurvatureSample> {
    surface_domain(params)?;
    Ok(CurvatureSample {
        point: (params.theta, params.xi),
        k: curvature_formula(params.n_spins, params.theta),
    })
}

pub(crate) fn curvature_formula(n_spins: usize, theta: f64) -> f64 {
    let n = n_spins as f64;
    let c2 = libm::cos(theta) * libm::cos(theta);
    let a = (2.0 * n - 3.0) * c2;
    8.0 / n * (2.0 - (a + n) / powi(a + 1.0, 2))
}

/// The two Christoffel symbols entering the curvature formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel {
    /// `Γ^ξ_θθ = -∂_ξ g_θθ / (2 g_ξξ)`
    pub xi_theta_theta: f64,
    /// `Γ^ξ_θξ = ∂_θ g_ξξ / (2 g_ξξ)`
    pub xi_theta_xi: f64,
}

/// Reduced 2D metric as a function of (θ, ξ); ξ enters only through the
/// functional form so the derivatives below see it explicitly.
fn surface_metric(n: usize, theta: f64, _xi: f64) -> (f64, f64) {
    (g_theta_theta_closed(n), g_xi_xi_closed(n, theta))
}

fn christoffel_at(n: usize, theta: f64, xi: f64, step: f64) -> Christoffel {
    let (_, gxx) = surface_metric(n, theta, xi);
    let d_xi_gtt = richardson_derivative(|v| surface_metric(n, theta, v).0, xi, step);
    let d_theta_gxx = richardson_derivative(|v| surface_metric(n, v, xi).1, theta, step);
    Christoffel {
        xi_theta_theta: -d_xi_gtt / (2.0 * gxx),
        xi_theta_xi: d_theta_gxx / (2.0 * gxx),
    }
}

fn check_curvature_step(params: &ModelParams, step: f64) -> Result<()> {
    if !(step > 0.0 && step.is_finite()) || params.theta - 2.0 * step <= 0.0 || params.theta + 2.0 * step >= PI {
        return Err(Error::Step {
            step,
            theta: params.theta,
        });
    }
    Ok(())
}

/// Christoffel symbols from finite differences of the closed-form metric.
pub fn christoffel_symbols(params: &ModelParams, step: f64) -> Result<Christoffel> {
    surface_domain(params)?;
    check_curvature_step(params, step)?;
    Ok(christoffel_at(params.n_spins, params.theta, params.xi, step))
}

/// Curvature from the Christoffel-symbol expression
/// `K = [∂_ξ(√(g_ξξ/g_θθ) Γ^ξ_θθ) - ∂_θ(√(g_ξξ/g_θθ) Γ^ξ_θξ)] / √(g_θθ g_ξξ)`,
/// every derivative taken by finite differences.
pub fn gaussian_curvature_numeric(params: &ModelParams, step: f64) -> Result<CurvatureSample> {
    surface_domain(params)?;
    check_curvature_step(params, step)?;
    let n = params.n_spins;
    let (theta, xi) = (params.theta, params.xi);
    let ratio = |t: f64, x: f64| {
        let (gtt, gxx) = surface_metric(n, t, x);
        libm::sqrt(gxx / gtt)
    };
    let term_xi = richardson_derivative(|x| ratio(theta, x) * christoffel_at(n, theta, x, step).xi_theta_theta, xi, step);
    let term_theta = richardson_derivative(|t| ratio(t, xi) * christoffel_at(n, t, xi, step).xi_theta_xi, theta, step);
    let (gtt, gxx) = surface_metric(n, theta, xi);
    Ok(CurvatureSample {
        point: (theta, xi),
        k: (term_xi - term_theta) / libm::sqrt(gtt * gxx),
    })
}

/// Integrand `K √(g_θθ g_ξξ)` of the bulk Gauss-Bonnet term.
pub fn gauss_bonnet_integrand(n_spins: usize, theta: f64) -> f64 {
    let area = libm::sqrt(g_theta_theta_closed(n_spins) * g_xi_xi_closed(n_spins, theta));
    if area == 0.0 {
        return 0.0;
    }
    curvature_formula(n_spins, theta) * area
}

fn require_surface_n(n_spins: usize) -> Result<()> {
    if n_spins < 2 {
        return Err(Error::Domain {
            name: "n_spins",
            value: n_spins as f64,
            reason: "Gauss-Bonnet needs N >= 2",
        });
    }
    Ok(())
}

/// `∫_0^π ∫_0^{2π} K √(g_θθ g_ξξ) dθ dξ` by nested adaptive Simpson on
/// `[ε, π-ε] × [0, 2π]`; the integrand vanishes at the poles.
pub fn gauss_bonnet_bulk(n_spins: usize, tol: f64) -> Result<f64> {
    require_surface_n(n_spins)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain {
            name: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    let inner_tol = tol / (4.0 * PI);
    let theta_integral = |_xi: f64| -> Result<f64> {
        adaptive_simpson(
            &|t| gauss_bonnet_integrand(n_spins, t),
            POLE_CUTOFF,
            PI - POLE_CUTOFF,
            inner_tol,
        )
    };
    let failure = RefCell::new(None);
    let outer = adaptive_simpson(
        &|xi| {
            theta_integral(xi).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            })
        },
        0.0,
        2.0 * PI,
        tol / 2.0,
    );
    match failure.into_inner() {
        Some(e) => Err(e),
        None => outer,
    }
}

/// `lim_{θ→0} √g_ξξ / (√g_θθ θ)`, extrapolated from the closed-form metric.
pub fn defect_limit_ratio(n_spins: usize) -> Result<f64> {
    require_surface_n(n_spins)?;
    let ratio = |t: f64| libm::sqrt(g_xi_xi_closed(n_spins, t)) / (libm::sqrt(g_theta_theta_closed(n_spins)) * t);
    // ratio(θ) = r0 + r2 θ² + O(θ⁴)
    let h = 1e-3;
    Ok((4.0 * ratio(h / 2.0) - ratio(h)) / 3.0)
}

/// Conical-defect sum `Λ = 2[2π - 2π lim √g_ξξ/(√g_θθ θ)]` for both poles.
pub fn angular_defects(n_spins: usize) -> Result<f64> {
    let r = defect_limit_ratio(n_spins)?;
    Ok(2.0 * (2.0 * PI - 2.0 * PI * r))
}

/// Bulk, defect and Euler characteristic of the reduced state surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussBonnetReport {
    pub n_spins: usize,
    pub bulk_integral: f64,
    pub defect_sum: f64,
    pub euler_characteristic: f64,
    pub rounded: i64,
}

pub const GAUSS_BONNET_TOL: f64 = 1e-8;

pub fn euler_characteristic(n_spins: usize) -> Result<GaussBonnetReport> {
    let bulk = gauss_bonnet_bulk(n_spins, GAUSS_BONNET_TOL)?;
    let defect = angular_defects(n_spins)?;
    let chi = (bulk + defect) / (2.0 * PI);
    Ok(GaussBonnetReport {
        n_spins,
        bulk_integral: bulk,
        defect_sum: defect,
        euler_characteristic: chi,
        rounded: libm::round(chi) as i64,
    })
}

/// Radius of the ξ = 0 sphere of initial states read off `g_θθ`
/// (the initial-state metric is `r^2 (dθ² + sin²θ dφ²)`).
pub fn initial_sphere_radius(n_spins: usize) -> f64 {
    libm::sqrt(g_theta_theta_closed(n_spins))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, theta: f64, xi: f64) -> ModelParams {
        ModelParams::new(n, 1.0, theta, 0.4, xi).unwrap()
    }

    #[test]
    fn numeric_g_theta_theta_is_quarter_n() {
        for n in [1usize, 2, 3, 7] {
            for theta in [0.2, 1.0, 2.9] {
                let g = fs_metric_numeric(&params(n, theta, 0.6), DEFAULT_STEP).unwrap();
                assert!((g.g_theta_theta() - n as f64 / 4.0).abs() < 1e-6, "N={n} θ={theta}");
            }
        }
    }

    #[test]
    fn numeric_g_xi_xi_two_spins_equator() {
        let g = fs_metric_numeric(&params(2, PI / 2.0, 1.0), DEFAULT_STEP).unwrap();
        assert!((g.g_xi_xi() - 0.25).abs() < 1e-6);
    }

    #[test]
    fn numeric_metric_is_xi_translation_invariant() {
        let a = fs_metric_numeric(&params(4, 0.9, 0.3), DEFAULT_STEP).unwrap();
        let b = fs_metric_numeric(&params(4, 0.9, 1.0), DEFAULT_STEP).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((a.components[i][j] - b.components[i][j]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn numeric_step_errors() {
        assert!(matches!(fs_metric_numeric(&params(3, 1.0, 0.0), 0.0), Err(Error::Step { .. })));
        assert!(matches!(fs_metric_numeric(&params(3, 5e-5, 0.0), 1e-4), Err(Error::Step { .. })));
        assert!(matches!(fs_metric_numeric(&params(3, PI, 0.0), 1e-4), Err(Error::Step { .. })));
    }

    #[test]
    fn closed_metric_examples() {
        let g = fs_metric_closed(&params(1, 1.2, 0.5)).unwrap();
        assert_eq!(g.g_xi_xi(), 0.0);
        assert_eq!(g.g_phi_xi(), 0.0);
        let g = fs_metric_closed(&params(3, PI / 4.0, 0.5)).unwrap();
        assert!((g.g_xi_xi() - 0.9375).abs() < 1e-14);
        let g = fs_metric_closed(&params(5, 0.0, 0.5)).unwrap();
        assert_eq!(g.g_xi_xi(), 0.0);
        assert_eq!(g.max_asymmetry(), 0.0);
    }

    #[test]
    fn oracle_selects_tensor_component_cross_term() {
        let (conv, dev) = calibrate_cross_term(&params(4, 0.7, 0.2), DEFAULT_STEP).unwrap();
        assert_eq!(conv, CrossTermConvention::TensorComponent);
        assert!(dev < 1e-6);
    }

    #[test]
    fn curvature_examples() {
        let k = gaussian_curvature_closed(&params(2, PI / 2.0, 0.0)).unwrap().k;
        assert!(k.abs() < 1e-15);
        // N=2 near the pole approaches K = 5
        let k = gaussian_curvature_closed(&params(2, 1e-8, 0.0)).unwrap().k;
        assert!((k - 5.0).abs() < 1e-12);
        for n in 2..=7 {
            for theta in [0.1, 0.5, 1.3] {
                let a = curvature_formula(n, theta);
                let b = curvature_formula(n, PI - theta);
                assert!((a - b).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn curvature_singular_at_poles() {
        assert!(matches!(gaussian_curvature_closed(&params(3, 0.0, 0.0)), Err(Error::Singularity { .. })));
        assert!(matches!(gaussian_curvature_closed(&params(3, PI, 0.0)), Err(Error::Singularity { .. })));
        assert!(gaussian_curvature_closed(&params(1, 1.0, 0.0)).is_err());
    }

    #[test]
    fn numeric_curvature_matches_closed() {
        let p = params(4, 1.0, 0.3);
        let kn = gaussian_curvature_numeric(&p, DEFAULT_STEP).unwrap().k;
        let kc = gaussian_curvature_closed(&p).unwrap().k;
        assert!((kn - kc).abs() <= 1e-5 * kc.abs());
        let k2 = gaussian_curvature_numeric(&p.with_xi(2.1), DEFAULT_STEP).unwrap().k;
        assert!((kn - k2).abs() < 1e-8);
        let ch = christoffel_symbols(&p, DEFAULT_STEP).unwrap();
        assert_eq!(ch.xi_theta_theta, 0.0);
    }

    #[test]
    fn gauss_bonnet_examples() {
        for (n, expect) in [(2usize, 4.0 * PI), (5, 16.0 * PI)] {
            let bulk = gauss_bonnet_bulk(n, 1e-8).unwrap();
            assert!((bulk - expect).abs() <= 1e-4 * expect, "N={n}: {bulk}");
        }
        for n in 2..=6 {
            assert!(gauss_bonnet_integrand(n, 1e-9).abs() < 1e-7);
            assert_eq!(gauss_bonnet_integrand(n, 0.0), 0.0);
        }
        assert!(gauss_bonnet_bulk(1, 1e-8).is_err());
    }

    #[test]
    fn defect_examples() {
        assert!(angular_defects(2).unwrap().abs() < 1e-10);
        assert!((angular_defects(3).unwrap() + 4.0 * PI).abs() < 1e-10);
        for n in 2..=10usize {
            assert!((defect_limit_ratio(n).unwrap() - (n - 1) as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn euler_characteristic_is_two() {
        for n in [2usize, 6] {
            let r = euler_characteristic(n).unwrap();
            assert_eq!(r.rounded, 2);
            assert!((r.euler_characteristic - 2.0).abs() < 1e-3);
        }
    }
}
