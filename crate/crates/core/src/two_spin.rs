//! Two spins: entanglement as a coordinate on the state manifold.
//!
//! For N = 2 the concurrence `C = sin²θ |sin ξ|` replaces θ as a chart
//! coordinate. The preimage `sin²θ = C/|sin ξ|` has two branches and the
//! chart takes θ ∈ [0, π/2]; every quantity here is even under θ → π - θ,
//! so the mirror branch gives identical values.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, singular_values, CMatrix};
use crate::math::{golden_section_min, powi};
use crate::phases::PhaseValue;

/// Below this `|sin ξ|` the concurrence chart is treated as degenerate.
pub const MIN_ABS_SIN_XI: f64 = 1e-12;

/// Density-matrix eigenvalues below `-NEGATIVITY_TOL` are rejected;
/// those in `[-NEGATIVITY_TOL, 0)` are treated as roundoff.
pub const NEGATIVITY_TOL: f64 = 1e-8;

/// A point `(C, ξ)` of the two-spin state manifold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrencePoint {
    pub c: f64,
    pub xi: f64,
    /// Reduced concurrence `C / |sin ξ|`.
    pub c_r: f64,
}

impl ConcurrencePoint {
    pub fn new(c: f64, xi: f64) -> Result<Self> {
        if !xi.is_finite() {
            return Err(Error::Domain {
                name: "xi",
                value: xi,
                reason: "must be finite",
            });
        }
        let s = libm::fabs(libm::sin(xi));
        if s <= MIN_ABS_SIN_XI {
            return Err(Error::CoordinateSingularity { c, xi });
        }
        // admit last-ulp overshoot from C computed as sin²θ |sin ξ|
        if !(c.is_finite() && c >= 0.0 && c <= s * (1.0 + 4.0 * f64::EPSILON)) {
            return Err(Error::Domain {
                name: "concurrence",
                value: c,
                reason: "must lie in [0, |sin xi|]",
            });
        }
        let c = c.min(s);
        Ok(Self { c, xi, c_r: c / s })
    }

    /// The point reached from polar angle θ after twisting time ξ.
    pub fn from_angles(theta: f64, xi: f64) -> Result<Self> {
        Self::new(concurrence_closed(theta, xi), xi)
    }

    pub fn abs_sin_xi(&self) -> f64 {
        libm::fabs(libm::sin(self.xi))
    }

    /// Chart preimage θ ∈ [0, π/2] with `sin²θ = C_r`.
    pub fn theta(&self) -> f64 {
        libm::asin(libm::sqrt(self.c_r))
    }
}

/// Amplitudes on |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinState {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl TwoSpinState {
    pub fn amplitudes(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn density(&self) -> CMatrix {
        CMatrix::projector(&self.amplitudes())
    }

    /// Pure-state concurrence `2|ad - bc|`.
    pub fn pure_concurrence(&self) -> f64 {
        2.0 * (self.a * self.d - self.b * self.c).norm()
    }
}

/// `a = e^{-iξ}cos²(θ/2)`, `b = c = e^{iφ} sinθ / 2`, `d = e^{i(2φ-ξ)} sin²(θ/2)`.
pub fn two_spin_state(theta: f64, phi: f64, xi: f64) -> Result<TwoSpinState> {
    if !(theta.is_finite() && phi.is_finite() && xi.is_finite()) || !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
            reason: "angles must be finite with theta in [0, pi]",
        });
    }
    let (ch, sh) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
    let mixed = Complex64::from_polar(0.5 * libm::sin(theta), phi);
    Ok(TwoSpinState {
        a: Complex64::from_polar(ch * ch, -xi),
        b: mixed,
        c: mixed,
        d: Complex64::from_polar(sh * sh, 2.0 * phi - xi),
    })
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// The values `λ_i` (square roots of the eigenvalues of `ρ ρ̃`) are taken as
/// singular values of `Aᵀ (σ_y⊗σ_y) A` with `ρ = A A†`, which keeps them
/// accurate to roundoff even when `ρ ρ̃` is nearly singular.
pub fn wootters_concurrence(rho: &CMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: rho.dim(),
        });
    }
    let herm = rho.hermiticity_defect();
    if herm > NEGATIVITY_TOL {
        return Err(Error::NonPhysical {
            reason: "matrix is not Hermitian",
            value: herm,
        });
    }
    let tr = rho.trace();
    if (tr - 1.0).norm() > NEGATIVITY_TOL {
        return Err(Error::NonPhysical {
            reason: "trace differs from one",
            value: tr.re,
        });
    }
    let (vals, vecs) = hermitian_eigen(rho);
    let lowest = vals[3];
    if lowest < -NEGATIVITY_TOL {
        return Err(Error::NonPhysical {
            reason: "negative eigenvalue",
            value: lowest,
        });
    }
    let mut factor = vecs;
    for (col, v) in vals.iter().enumerate() {
        let scale = libm::sqrt(v.max(0.0));
        for row in 0..4 {
            factor[(row, col)] *= scale;
        }
    }
    let tau = factor.transpose().matmul(&spin_flip()).matmul(&factor);
    let l = singular_values(&tau);
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// `σ_y ⊗ σ_y` in the |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩ basis.
fn spin_flip() -> CMatrix {
    let mut y = CMatrix::zeros(4);
    y[(0, 3)] = Complex64::new(-1.0, 0.0);
    y[(1, 2)] = Complex64::new(1.0, 0.0);
    y[(2, 1)] = Complex64::new(1.0, 0.0);
    y[(3, 0)] = Complex64::new(-1.0, 0.0);
    y
}

/// `C = sin²θ |sin ξ|`.
pub fn concurrence_closed(theta: f64, xi: f64) -> f64 {
    let s = libm::sin(theta);
    s * s * libm::fabs(libm::sin(xi))
}

fn require_interior(point: &ConcurrencePoint) -> Result<()> {
    if point.c <= 0.0 || point.c >= point.abs_sin_xi() {
        return Err(Error::CoordinateSingularity {
            c: point.c,
            xi: point.xi,
        });
    }
    Ok(())
}

/// Reference `dS²` in (C, ξ) coordinates: the cross coefficient
/// `-1/(4 tanξ (|sinξ| - C))` multiplies `dC dξ` once.
pub fn metric_concurrence_coords(point: &ConcurrencePoint, dc: f64, dxi: f64) -> Result<f64> {
    require_interior(point)?;
    let (c, xi) = (point.c, point.xi);
    let s = point.abs_sin_xi();
    let gap = s - c;
    let tan = libm::tan(xi);
    let sin2 = powi(libm::sin(xi), 2);
    let g_cc = 1.0 / (8.0 * c * gap);
    let cross = -1.0 / (4.0 * tan * gap);
    let g_xx = c / 4.0 * (1.0 / (2.0 * tan * tan * gap) + (2.0 * s - c) / sin2);
    Ok(g_cc * dc * dc + cross * dc * dxi + g_xx * dxi * dxi)
}

/// `dS² = dC_r² / (8 C_r (1 - C_r)) + (1/4) C_r (2 - C_r) dξ²`.
pub fn metric_reduced_coords(c_r: f64, dc_r: f64, dxi: f64) -> Result<f64> {
    if !(c_r > 0.0 && c_r < 1.0) {
        return Err(Error::CoordinateSingularity { c: c_r, xi: f64::NAN });
    }
    Ok(dc_r * dc_r / (8.0 * c_r * (1.0 - c_r)) + 0.25 * c_r * (2.0 - c_r) * dxi * dxi)
}

/// Radius `√(C_r (2 - C_r)) / 2` of the circle of constant reduced concurrence.
pub fn iso_reduced_circle_radius(c_r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c_r) {
        return Err(Error::Domain {
            name: "c_r",
            value: c_r,
            reason: "reduced concurrence lies in [0, 1]",
        });
    }
    Ok(0.5 * libm::sqrt(c_r * (2.0 - c_r)))
}

/// `K = 4[2 + |sinξ|(C - 3|sinξ|) / (C - 2|sinξ|)²]`.
pub fn curvature_of_concurrence(point: &ConcurrencePoint) -> Result<f64> {
    let s = point.abs_sin_xi();
    let den = powi(point.c - 2.0 * s, 2);
    if den == 0.0 {
        return Err(Error::Pole { n_spins: 2, k: f64::INFINITY });
    }
    Ok(4.0 * (2.0 + s * (point.c - 3.0 * s) / den))
}

/// Reference inequality `|sinξ|(C - 3|sinξ|) < -2(C - 2|sinξ|)²` for K < 0.
pub fn negativity_condition(point: &ConcurrencePoint) -> bool {
    let s = point.abs_sin_xi();
    s * (point.c - 3.0 * s) < -2.0 * powi(point.c - 2.0 * s, 2)
}

/// `Φ_g(C) = -arg[(2|sinξ| - C) e^{iξ} + C] + ξ(1 - C/(2|sinξ|))`, the
/// arctangent resolved with both arguments. The argument never crosses its
/// branch cut while C varies at fixed ξ, so the value is continuous in C.
pub fn geometric_phase_of_concurrence(point: &ConcurrencePoint) -> Result<PhaseValue> {
    Ok(PhaseValue::from_unwrapped(geometric_phase_value(point.c, point.xi)))
}

fn geometric_phase_value(c: f64, xi: f64) -> f64 {
    let s = libm::fabs(libm::sin(xi));
    let w = 2.0 * s - c;
    -libm::atan2(w * libm::sin(xi), w * libm::cos(xi) + c) + xi * (1.0 - c / (2.0 * s))
}

/// Reference critical concurrence
/// `C_c = sinξ - cot(ξ/2) √((sinξ/ξ)(2 - ξ sinξ - 2cosξ))`, valid for sin ξ > 0.
pub fn critical_concurrence(xi: f64) -> Result<f64> {
    let s = libm::sin(xi);
    if !(s > MIN_ABS_SIN_XI && xi > 0.0) {
        return Err(Error::Domain {
            name: "xi",
            value: xi,
            reason: "critical concurrence needs sin xi > 0",
        });
    }
    let inner = s / xi * (2.0 - xi * s - 2.0 * libm::cos(xi));
    Ok(s - libm::sqrt(inner.max(0.0)) / libm::tan(xi / 2.0))
}

/// Minimiser of `Φ_g(C)` over `[0, |sin ξ|]` by golden section.
pub fn critical_concurrence_numeric(xi: f64, tol: f64) -> Result<f64> {
    ConcurrencePoint::new(0.0, xi)?;
    let s = libm::fabs(libm::sin(xi));
    Ok(golden_section_min(|c| geometric_phase_value(c, xi), 0.0, s, tol))
}

/// `Φ_AA = -π C / |sin ξ|`.
pub fn aa_phase_of_concurrence(point: &ConcurrencePoint) -> PhaseValue {
    PhaseValue::from_unwrapped(-PI * point.c_r)
}

/// Two-spin topological phase, `-(π/2) N²` at N = 2.
pub const TOPOLOGICAL_PHASE: f64 = -2.0 * PI;

/// Speed, distance and optimal time `(V, S, τ)` at a point of the chart.
pub fn speed_distance_opttime_of_concurrence(point: &ConcurrencePoint, coupling: f64) -> Result<(f64, f64, f64)> {
    if !(coupling.is_finite() && coupling != 0.0) {
        return Err(Error::Domain {
            name: "coupling",
            value: coupling,
            reason: "must be finite and nonzero",
        });
    }
    let j = libm::fabs(coupling);
    let s = point.abs_sin_xi();
    let root = libm::sqrt((point.c * (2.0 * s - point.c)).max(0.0));
    let v = j / (2.0 * s) * root;
    let dist = point.xi / j * v;
    Ok((v, dist, dist / (j / 2.0)))
}

/// Coefficient of `dξ_opt²` on the optimal state line, `C(2|sinξ| - C)/(4 sin²ξ)`.
pub fn optimal_metric_concurrence(point: &ConcurrencePoint) -> f64 {
    let s = point.abs_sin_xi();
    point.c * (2.0 * s - point.c) / (4.0 * s * s)
}
