//! Total, dynamic and geometric phases of the twisted state, for open
//! evolutions and for cycles.
//!
//! The total phase is the argument of `⟨Ψ_i|Ψ(ξ)⟩`. It is computed with the
//! two-argument arctangent and unwrapped continuously along a ξ path when
//! one is supplied. Comparisons of cyclic quantities go through
//! [`phase_distance`](crate::math::phase_distance).

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math::{dicke_weight, wrap_phase};
use crate::spin::{level_energy, measured_period, ModelParams};

const TWO_PI: f64 = 2.0 * PI;

/// Overlaps with modulus below this leave the phase undefined.
pub const ZERO_OVERLAP: f64 = 1e-13;

/// A phase together with the number of 2π unwinds applied to reach it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseValue {
    pub value: f64,
    pub branch_count: i64,
}

impl PhaseValue {
    /// A principal-branch phase; `value` is wrapped into (-π, π].
    pub fn principal(value: f64) -> Self {
        Self {
            value: wrap_phase(value),
            branch_count: 0,
        }
    }

    /// An unwrapped phase; the branch count is inferred from the value.
    pub fn from_unwrapped(value: f64) -> Self {
        let principal = wrap_phase(value);
        Self {
            value,
            branch_count: libm::round((value - principal) / TWO_PI) as i64,
        }
    }

    /// Principal part in (-π, π].
    pub fn principal_value(&self) -> f64 {
        self.value - TWO_PI * self.branch_count as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseDecomposition {
    pub total: PhaseValue,
    pub dynamic: PhaseValue,
    pub geometric: PhaseValue,
}

/// `(Σ w_p cos(ξE_p), Σ w_p sin(ξE_p))`, so that the overlap is `C - iS`.
pub fn overlap_sums(n_spins: usize, theta: f64, xi: f64) -> (f64, f64) {
    let mut c = 0.0;
    let mut s = 0.0;
    for p in 0..=n_spins {
        let w = dicke_weight(n_spins, p, theta);
        let a = xi * level_energy(n_spins, p);
        c += w * libm::cos(a);
        s += w * libm::sin(a);
    }
    (c, s)
}

fn overlap_value(params: &ModelParams, xi: f64) -> Complex64 {
    let (c, s) = overlap_sums(params.n_spins, params.theta, xi);
    Complex64::new(c, -s)
}

fn defined_arg(z: Complex64, xi: f64) -> Result<f64> {
    let m = z.norm();
    if m < ZERO_OVERLAP {
        return Err(Error::UndefinedPhase { xi, magnitude: m });
    }
    Ok(libm::atan2(z.im, z.re))
}

/// Total phase `arg⟨Ψ_i|Ψ(ξ)⟩`.
///
/// Without a path the principal value is returned. With a path the phase is
/// unwrapped continuously from the first sample; the path must end at
/// `params.xi`.
pub fn total_phase(params: &ModelParams, unwrap_path: Option<&[f64]>) -> Result<PhaseValue> {
    params.validate()?;
    let Some(path) = unwrap_path else {
        return Ok(PhaseValue::principal(defined_arg(overlap_value(params, params.xi), params.xi)?));
    };
    match path.last() {
        Some(&last) if (last - params.xi).abs() <= 1e-12 * params.xi.abs().max(1.0) => {}
        _ => return Err(Error::Path { xi: params.xi }),
    }
    let mut prev = defined_arg(overlap_value(params, path[0]), path[0])?;
    let mut acc = prev;
    for &xi in &path[1..] {
        if !xi.is_finite() {
            return Err(Error::Path { xi });
        }
        let cur = defined_arg(overlap_value(params, xi), xi)?;
        acc += wrap_phase(cur - prev);
        prev = cur;
    }
    Ok(PhaseValue::from_unwrapped(acc))
}

/// Outcome of unwrapping along a path that may pass through overlap zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSweep {
    pub xi: Vec<f64>,
    /// `None` where the overlap vanishes.
    pub phases: Vec<Option<PhaseValue>>,
    /// Locations where the phase was undefined; unwrapping restarts after each.
    pub zero_crossings: Vec<f64>,
}

/// Unwrapped total phase along `path`; overlap zeros split the path and
/// restart the branch count instead of failing.
pub fn total_phase_sweep(params: &ModelParams, path: &[f64]) -> Result<PhaseSweep> {
    params.validate()?;
    let mut phases = Vec::with_capacity(path.len());
    let mut zero_crossings = Vec::new();
    let mut state: Option<(f64, f64)> = None; // (previous principal, accumulated)
    for &xi in path {
        if !xi.is_finite() {
            return Err(Error::Path { xi });
        }
        match defined_arg(overlap_value(params, xi), xi) {
            Ok(cur) => {
                let acc = match state {
                    Some((prev, acc)) => acc + wrap_phase(cur - prev),
                    None => cur,
                };
                state = Some((cur, acc));
                phases.push(Some(PhaseValue::from_unwrapped(acc)));
            }
            Err(_) => {
                zero_crossings.push(xi);
                state = None;
                phases.push(None);
            }
        }
    }
    Ok(PhaseSweep {
        xi: path.to_vec(),
        phases,
        zero_crossings,
    })
}

/// The single-argument form `-arctan(S/C)`, meaningful only modulo π.
pub fn total_phase_arctan_ratio(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let (c, s) = overlap_sums(params.n_spins, params.theta, params.xi);
    Ok(-libm::atan(s / c))
}

/// Smallest ξ-shift under which the total phase repeats modulo 2π.
pub fn total_phase_period(n_spins: usize) -> Result<f64> {
    Ok(measured_period(n_spins)?.amplitude)
}

/// Mean collective energy over J: `(N/4)(N cos²θ + sin²θ)`.
pub fn mean_energy_over_coupling(n_spins: usize, theta: f64) -> f64 {
    let n = n_spins as f64;
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    n / 4.0 * (n * c * c + s * s)
}

/// `Φ_dyn = -(ξN/4)(N cos²θ + sin²θ)`, unwrapped.
pub fn dynamic_phase(params: &ModelParams) -> Result<PhaseValue> {
    params.validate()?;
    Ok(PhaseValue::from_unwrapped(
        -params.xi * mean_energy_over_coupling(params.n_spins, params.theta),
    ))
}

/// Geometric phase as total minus dynamic.
pub fn geometric_phase(params: &ModelParams) -> Result<PhaseDecomposition> {
    let total = total_phase(params, None)?;
    let dynamic = dynamic_phase(params)?;
    Ok(PhaseDecomposition {
        total,
        dynamic,
        geometric: PhaseValue::from_unwrapped(total.value - dynamic.value),
    })
}

/// Closed-form geometric phase built from the overlap sums, with the
/// two-argument arctangent resolving the branch of the ratio.
pub fn geometric_phase_closed(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let (c, s) = overlap_sums(params.n_spins, params.theta, params.xi);
    if libm::hypot(c, s) < ZERO_OVERLAP {
        return Err(Error::UndefinedPhase {
            xi: params.xi,
            magnitude: libm::hypot(c, s),
        });
    }
    Ok(libm::atan2(-s, c) + params.xi * mean_energy_over_coupling(params.n_spins, params.theta))
}

/// How `Im⟨Ψ|∂_ξΨ⟩` is obtained inside the numeric phase integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Derivative {
    /// Per-level phase derivatives `-i E_p c_p`.
    #[default]
    Exact,
    /// Central difference of neighbouring grid states, spacing equal to the
    /// quadrature step.
    CentralDifference,
}

fn raw_amplitudes(weights: &[f64], n: usize, xi: f64) -> Vec<Complex64> {
    weights
        .iter()
        .enumerate()
        .map(|(p, &w)| Complex64::from_polar(libm::sqrt(w), -xi * level_energy(n, p)))
        .collect()
}

/// `Φ_g = arg⟨Ψ_i|Ψ(ξ)⟩ - Im ∫_0^ξ ⟨Ψ|∂_ξ'Ψ⟩ dξ'` by the trapezoid rule.
pub fn geometric_phase_numeric(params: &ModelParams, steps: usize, derivative: Derivative) -> Result<PhaseValue> {
    params.validate()?;
    if steps < 10 {
        return Err(Error::Domain {
            name: "steps",
            value: steps as f64,
            reason: "need at least 10 quadrature steps",
        });
    }
    let n = params.n_spins;
    let weights: Vec<f64> = (0..=n).map(|p| dicke_weight(n, p, params.theta)).collect();
    let h = params.xi / steps as f64;
    let connection = |xi: f64| -> f64 {
        match derivative {
            Derivative::Exact => -weights.iter().enumerate().map(|(p, w)| w * level_energy(n, p)).sum::<f64>(),
            Derivative::CentralDifference => {
                if h == 0.0 {
                    return 0.0;
                }
                let here = raw_amplitudes(&weights, n, xi);
                let up = raw_amplitudes(&weights, n, xi + h);
                let down = raw_amplitudes(&weights, n, xi - h);
                let z: Complex64 = here
                    .iter()
                    .zip(up.iter().zip(&down))
                    .map(|(a, (u, d))| a.conj() * (u - d) / (2.0 * h))
                    .sum();
                z.im
            }
        }
    };
    let mut integral = 0.5 * (connection(0.0) + connection(params.xi));
    for k in 1..steps {
        integral += connection(k as f64 * h);
    }
    integral *= h;
    let total = defined_arg(overlap_value(params, params.xi), params.xi)?;
    Ok(PhaseValue::from_unwrapped(total - integral))
}

/// Bracket `4(N-1)(N+2)cos²θ - (N-3)(N-2)sin²2θ + 4(3N-2)` of the short-time
/// expansion.
fn short_time_bracket(n_spins: usize, theta: f64) -> f64 {
    let n = n_spins as f64;
    let c = libm::cos(theta);
    let s2 = libm::sin(2.0 * theta);
    4.0 * (n - 1.0) * (n + 2.0) * c * c - (n - 3.0) * (n - 2.0) * s2 * s2 + 4.0 * (3.0 * n - 2.0)
}

/// Reference second-order small-ξ expansion of the overlap.
pub fn short_time_overlap(params: &ModelParams) -> Result<Complex64> {
    params.validate()?;
    let (n, xi) = (params.n_spins as f64, params.xi);
    let re = 1.0 + xi * xi * n * (n - 1.0) / 64.0 * short_time_bracket(params.n_spins, params.theta);
    let im = -xi * mean_energy_over_coupling(params.n_spins, params.theta);
    Ok(Complex64::new(re, im))
}

/// Reference small-ξ geometric phase.
pub fn short_time_geometric_phase(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let (n, xi) = (params.n_spins as f64, params.xi);
    let e = mean_energy_over_coupling(params.n_spins, params.theta);
    let den = 4.0 + xi * xi * n * (n - 1.0) / 16.0 * short_time_bracket(params.n_spins, params.theta);
    Ok(-libm::atan(4.0 * xi * e / den) + xi * e)
}

/// Log-log slope of `|short_time_overlap - overlap|` over ξ ∈ [1e-4, 1e-2].
pub fn short_time_error_order(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    const SAMPLES: usize = 9;
    let mut xs = Vec::with_capacity(SAMPLES);
    let mut ys = Vec::with_capacity(SAMPLES);
    for k in 0..SAMPLES {
        let xi = libm::pow(10.0, -4.0 + 2.0 * k as f64 / (SAMPLES - 1) as f64);
        let p = params.with_xi(xi);
        let err = (short_time_overlap(&p)? - overlap_value(&p, xi)).norm();
        if err == 0.0 {
            continue;
        }
        xs.push(libm::log(xi));
        ys.push(libm::log(err));
    }
    if xs.len() < 2 {
        return Ok(f64::INFINITY);
    }
    let m = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// Cycle length used for the AA phase. It is an integer multiple of the
/// projective period for every N and the amplitude period for even N.
pub const AA_CYCLE: f64 = TWO_PI;

/// Geometric phase accumulated over one cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclePhase {
    pub phase: PhaseValue,
    pub period: f64,
    /// ξ values where the overlap vanished and the total phase jumped.
    pub zero_crossings: Vec<f64>,
}

fn require_many(n_spins: usize) -> Result<()> {
    if n_spins < 2 {
        return Err(Error::Domain {
            name: "n_spins",
            value: n_spins as f64,
            reason: "cyclic phases need N >= 2",
        });
    }
    Ok(())
}

/// `∫_0^T dΦ_tot + ∫_0^T ⟨H⟩/J dξ`, the first term from continuous
/// unwrapping of the overlap argument and the second by the trapezoid rule
/// over the evolved-state energy.
pub fn aa_phase_numeric(params: &ModelParams) -> Result<CyclePhase> {
    params.validate()?;
    require_many(params.n_spins)?;
    let n = params.n_spins;
    let steps = 4096usize.max(64 * n * n);
    let h = AA_CYCLE / steps as f64;
    let weights: Vec<f64> = (0..=n).map(|p| dicke_weight(n, p, params.theta)).collect();
    let energy = |xi: f64| -> f64 {
        raw_amplitudes(&weights, n, xi)
            .iter()
            .enumerate()
            .map(|(p, c)| c.norm_sqr() * level_energy(n, p))
            .sum()
    };

    let mut zero_crossings = Vec::new();
    let mut prev: Option<f64> = None;
    let mut winding = 0.0;
    let mut energy_integral = 0.5 * (energy(0.0) + energy(AA_CYCLE));
    for k in 0..=steps {
        let xi = k as f64 * h;
        if k > 0 && k < steps {
            energy_integral += energy(xi);
        }
        match defined_arg(overlap_value(params, xi), xi) {
            Ok(cur) => {
                if let Some(p) = prev {
                    winding += wrap_phase(cur - p);
                }
                prev = Some(cur);
            }
            // the phase jumps by ±π through a zero; both signs agree mod 2π
            Err(_) => zero_crossings.push(xi),
        }
    }
    energy_integral *= h;
    Ok(CyclePhase {
        phase: PhaseValue::from_unwrapped(winding + energy_integral),
        period: AA_CYCLE,
        zero_crossings,
    })
}

/// `Φ_AA = -(π/2) N (N-1) sin²θ`.
pub fn aa_phase_closed(params: &ModelParams) -> Result<PhaseValue> {
    params.validate()?;
    require_many(params.n_spins)?;
    let n = params.n_spins as f64;
    let s = libm::sin(params.theta);
    Ok(PhaseValue::from_unwrapped(-PI / 2.0 * n * (n - 1.0) * s * s))
}

/// `Φ_top = -(π/2) N²`.
pub fn topological_phase(n_spins: usize) -> Result<PhaseValue> {
    if n_spins == 0 {
        return Err(Error::Domain {
            name: "n_spins",
            value: 0.0,
            reason: "need at least one spin",
        });
    }
    let n = n_spins as f64;
    Ok(PhaseValue::from_unwrapped(-PI / 2.0 * n * n))
}

/// Reference rational expression of the AA phase in terms of the
/// curvature, evaluated verbatim.
pub fn aa_phase_from_curvature(n_spins: usize, k: f64) -> Result<f64> {
    require_many(n_spins)?;
    let n = n_spins as f64;
    let pole = n * k - 16.0;
    if pole.abs() <= 1e-12 * 16.0 {
        return Err(Error::Pole { n_spins, k });
    }
    let num = -56.0 + 3.0 * n * (16.0 - (n - 1.0) * k);
    Ok(PI * n * (n - 1.0) / 2.0 * num / ((2.0 * n - 3.0) * pole))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::phase_distance;
    use crate::spin::energy_moments;

    fn params(n: usize, theta: f64, xi: f64) -> ModelParams {
        ModelParams::new(n, 1.0, theta, 0.0, xi).unwrap()
    }

    #[test]
    fn phase_value_branches() {
        let v = PhaseValue::from_unwrapped(7.0);
        assert_eq!(v.branch_count, 1);
        assert!((v.principal_value() - (7.0 - TWO_PI)).abs() < 1e-15);
        assert_eq!(PhaseValue::principal(-PI).value, PI);
    }

    #[test]
    fn total_phase_examples() {
        assert_eq!(total_phase(&params(5, 1.0, 0.0), None).unwrap().value, 0.0);
        for xi in [0.3, 1.5, 3.0] {
            let v = total_phase(&params(2, PI / 2.0, xi), None).unwrap().value;
            assert!((v + xi / 2.0).abs() < 1e-14);
        }
        for n in [2usize, 4, 6] {
            let a = total_phase(&params(n, 0.8, 1.3), None).unwrap().value;
            let b = total_phase(&params(n, 0.8, 1.3 + 4.0 * PI), None).unwrap().value;
            assert!(phase_distance(a, b) < 1e-10);
        }
    }

    #[test]
    fn total_phase_unwraps_along_path() {
        // θ = 0: overlap e^{-iξN²/4}, so the unwrapped phase is linear
        let p = params(4, 0.0, 3.0);
        let path: Vec<f64> = (0..=300).map(|k| k as f64 * 0.01).collect();
        let v = total_phase(&p, Some(&path)).unwrap();
        assert!((v.value + 12.0).abs() < 1e-10);
        assert_eq!(v.branch_count, -2);
        assert!(matches!(total_phase(&p, Some(&path[..10])), Err(Error::Path { .. })));
    }

    #[test]
    fn overlap_zero_is_undefined_and_sweeps_restart() {
        let p = params(2, PI / 2.0, PI);
        assert!(matches!(total_phase(&p, None), Err(Error::UndefinedPhase { .. })));
        let path = [PI - 0.2, PI - 0.1, PI, PI + 0.1, PI + 0.2];
        let s = total_phase_sweep(&p, &path).unwrap();
        assert_eq!(s.zero_crossings, [PI]);
        assert!(s.phases[2].is_none());
        assert_eq!(s.phases[3].unwrap().branch_count, 0);
    }

    #[test]
    fn arctan_ratio_agrees_mod_pi() {
        use crate::math::phase_distance_mod_pi;
        for xi in [0.4, 2.0, 5.5] {
            let p = params(3, 1.2, xi);
            let a = total_phase_arctan_ratio(&p).unwrap();
            let b = total_phase(&p, None).unwrap().value;
            assert!(phase_distance_mod_pi(a, b) < 1e-12);
        }
    }

    #[test]
    fn dynamic_phase_examples() {
        assert!((dynamic_phase(&params(3, PI / 2.0, 0.7)).unwrap().value + 0.7 * 3.0 / 4.0).abs() < 1e-15);
        assert!((dynamic_phase(&params(3, 0.0, 0.7)).unwrap().value + 0.7 * 9.0 / 4.0).abs() < 1e-15);
        let a = dynamic_phase(&params(4, 0.5, 0.6)).unwrap().value;
        let b = dynamic_phase(&params(4, 0.5, 1.2)).unwrap().value;
        assert!((2.0 * a - b).abs() < 1e-14);
        for n in 1..=6 {
            let p = params(n, 1.1, 0.9);
            let (mean, _) = energy_moments(&p).unwrap();
            assert!((dynamic_phase(&p).unwrap().value + p.xi * mean).abs() < 1e-12);
        }
    }

    #[test]
    fn geometric_phase_examples() {
        for n in 1..=5 {
            for xi in [0.5, 2.0, 7.0] {
                let d = geometric_phase(&params(n, 0.0, xi)).unwrap();
                assert!(phase_distance(d.geometric.value, 0.0) < 1e-12);
            }
            assert_eq!(geometric_phase(&params(n, 1.0, 0.0)).unwrap().geometric.value, 0.0);
        }
        let p = params(2, PI / 2.0, PI / 2.0);
        let d = geometric_phase(&p).unwrap();
        assert!(phase_distance(d.geometric.value, geometric_phase_closed(&p).unwrap()) < 1e-9);
        // -π/4 total, -π/4 dynamic
        assert!(d.geometric.value.abs() < 1e-14);
    }

    #[test]
    fn numeric_geometric_phase_matches() {
        let p = params(3, 1.1, 2.3);
        let closed = geometric_phase_closed(&p).unwrap();
        let num = geometric_phase_numeric(&p, 10_000, Derivative::Exact).unwrap();
        assert!(phase_distance(num.value, closed) < 1e-8);
        let cd = geometric_phase_numeric(&p, 10_000, Derivative::CentralDifference).unwrap();
        assert!(phase_distance(cd.value, closed) < 1e-6);
        let eig = geometric_phase_numeric(&params(4, 0.0, 1.0), 100, Derivative::Exact).unwrap();
        assert!(phase_distance(eig.value, 0.0) < 1e-12);
        assert!(geometric_phase_numeric(&p, 9, Derivative::Exact).is_err());
    }

    #[test]
    fn numeric_geometric_phase_is_second_order() {
        let p = params(3, 1.1, 2.3);
        let closed = geometric_phase_closed(&p).unwrap();
        let e1 = phase_distance(geometric_phase_numeric(&p, 200, Derivative::CentralDifference).unwrap().value, closed);
        let e2 = phase_distance(geometric_phase_numeric(&p, 400, Derivative::CentralDifference).unwrap().value, closed);
        assert!(e1 / e2 >= 4.0 - 1e-3, "{e1} {e2}");
    }

    #[test]
    fn short_time_expansion() {
        assert_eq!(short_time_overlap(&params(3, 1.0, 0.0)).unwrap(), Complex64::new(1.0, 0.0));
        let p = params(4, 0.7, 0.0);
        let h = 1e-6;
        let slope = short_time_overlap(&p.with_xi(h)).unwrap().im / h;
        let (mean, _) = energy_moments(&p).unwrap();
        assert!((slope + mean).abs() < 1e-12);
        let order = short_time_error_order(&params(2, PI / 2.0, 0.0)).unwrap();
        assert!(order >= 2.0 - 1e-3, "{order}");
    }

    #[test]
    fn aa_phase_examples() {
        assert!(aa_phase_closed(&params(4, 0.0, 0.0)).unwrap().value.abs() < 1e-15);
        assert!((aa_phase_closed(&params(2, PI / 2.0, 0.0)).unwrap().value + PI).abs() < 1e-14);
        assert!((aa_phase_closed(&params(3, PI / 2.0, 0.0)).unwrap().value + 3.0 * PI).abs() < 1e-14);
        let num = aa_phase_numeric(&params(2, PI / 2.0, 0.0)).unwrap();
        assert!(phase_distance(num.phase.value, -PI) < 1e-6);
        assert_eq!(num.zero_crossings.len(), 1);
        assert!(phase_distance(aa_phase_numeric(&params(3, 0.0, 0.0)).unwrap().phase.value, 0.0) < 1e-6);
    }

    #[test]
    fn aa_numeric_matches_closed_on_grid() {
        for n in [2usize, 3, 4] {
            for theta in [0.3, 0.9, PI / 2.0, 2.2] {
                let p = params(n, theta, 0.0);
                let a = aa_phase_numeric(&p).unwrap().phase.value;
                let b = aa_phase_closed(&p).unwrap().value;
                assert!(phase_distance(a, b) < 1e-6, "N={n} θ={theta}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn topological_examples() {
        assert!((topological_phase(2).unwrap().value + TWO_PI).abs() < 1e-15);
        let odd = topological_phase(3).unwrap().value;
        assert!((odd + 4.5 * PI).abs() < 1e-14);
        assert!((libm::fmod(odd, PI)).abs() > 0.1);
        assert!((topological_phase(4).unwrap().value + 8.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn curvature_relation_verbatim() {
        assert!((aa_phase_from_curvature(2, 0.0).unwrap() + 2.5 * PI).abs() < 1e-14);
        assert!(matches!(aa_phase_from_curvature(4, 4.0), Err(Error::Pole { .. })));
        assert!(aa_phase_from_curvature(1, 0.0).is_err());
    }
}
