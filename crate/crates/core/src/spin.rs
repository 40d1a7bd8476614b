//! N spin-1/2 particles under `H = J (Σ S_z^i)^2` with ħ = 1.
//!
//! Two representations are kept side by side. [`DickeState`] stores the
//! N+1 amplitudes on normalized Dicke vectors `|N, p⟩` (p = number of
//! down-spins) and is what every closed-form routine uses. [`FullState`]
//! stores all 2^N configuration amplitudes and serves as a brute-force
//! oracle for N ≤ [`FULL_ORACLE_MAX_SPINS`].
//!
//! Configuration encoding for [`FullState`]: bit value 0 is up, 1 is down,
//! and spin index 0 (the first spin) is the most significant bit.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::math::{binomial, binomial_exact, dicke_weight};

/// Largest spin count accepted by the full-Hilbert-space oracle.
pub const FULL_ORACLE_MAX_SPINS: usize = 14;

const NORM_TOL: f64 = 1e-12;

/// Model and point parameters: N, J, initial angles (θ, φ) and ξ = J t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub n_spins: usize,
    pub coupling: f64,
    pub theta: f64,
    pub phi: f64,
    pub xi: f64,
}

impl ModelParams {
    /// Validated constructor. φ is reduced into [0, 2π).
    pub fn new(n_spins: usize, coupling: f64, theta: f64, phi: f64, xi: f64) -> Result<Self> {
        let p = Self {
            n_spins,
            coupling,
            theta,
            phi: phi.rem_euclid_2pi(),
            xi,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_spins == 0 {
            return Err(Error::Domain {
                name: "n_spins",
                value: 0.0,
                reason: "at least one spin required",
            });
        }
        if !(0.0..=PI).contains(&self.theta) {
            return Err(Error::Domain {
                name: "theta",
                value: self.theta,
                reason: "must lie in [0, pi]",
            });
        }
        if !self.phi.is_finite() {
            return Err(Error::Domain {
                name: "phi",
                value: self.phi,
                reason: "must be finite",
            });
        }
        if !self.xi.is_finite() || self.xi < 0.0 {
            return Err(Error::Domain {
                name: "xi",
                value: self.xi,
                reason: "must be finite and non-negative",
            });
        }
        if !self.coupling.is_finite() {
            return Err(Error::Domain {
                name: "coupling",
                value: self.coupling,
                reason: "must be finite",
            });
        }
        Ok(())
    }

    /// Additional check for routines that divide by J.
    pub fn require_dynamics(&self) -> Result<()> {
        self.validate()?;
        if self.coupling == 0.0 {
            return Err(Error::Domain {
                name: "coupling",
                value: 0.0,
                reason: "must be nonzero for dynamics",
            });
        }
        Ok(())
    }

    pub fn with_xi(self, xi: f64) -> Self {
        Self { xi, ..self }
    }

    pub fn with_theta(self, theta: f64) -> Self {
        Self { theta, ..self }
    }

    pub fn with_phi(self, phi: f64) -> Self {
        Self { phi, ..self }
    }

    /// Physical time t = ξ / J.
    pub fn time(&self) -> f64 {
        self.xi / self.coupling
    }
}

trait RemEuclid2Pi {
    fn rem_euclid_2pi(self) -> f64;
}

impl RemEuclid2Pi for f64 {
    fn rem_euclid_2pi(self) -> f64 {
        let r = libm::fmod(self, 2.0 * PI);
        if r < 0.0 {
            r + 2.0 * PI
        } else {
            r
        }
    }
}

/// `(N - 2p)^2 / 4`: eigenvalue of `(Σ S_z)^2` on Dicke level p.
pub fn level_energy(n_spins: usize, p: usize) -> f64 {
    let m = n_spins as f64 - 2.0 * p as f64;
    m * m / 4.0
}

/// Amplitudes over the normalized Dicke basis `|N, p⟩`, p = 0..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeState {
    amplitudes: Vec<Complex64>,
}

impl DickeState {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Dimension { expected: 2, got: 0 });
        }
        let s = Self { amplitudes };
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain {
                name: "norm",
                value: norm,
                reason: "Dicke amplitudes must be normalized",
            });
        }
        Ok(s)
    }

    pub fn n_spins(&self) -> usize {
        self.amplitudes.len() - 1
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.amplitudes.len() != other.amplitudes.len() {
            return Err(Error::Dimension {
                expected: self.amplitudes.len(),
                got: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `⟨(Σ S_z)^2⟩` and `⟨(Σ S_z)^4⟩` in this state.
    pub fn collective_moments(&self) -> (f64, f64) {
        let n = self.n_spins();
        self.amplitudes
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(m1, m2), (p, c)| {
                let e = level_energy(n, p);
                let w = c.norm_sqr();
                (m1 + w * e, m2 + w * e * e)
            })
    }
}

/// Amplitudes over all 2^N spin configurations.
#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    n_spins: usize,
    amplitudes: Vec<Complex64>,
}

impl FullState {
    pub fn from_amplitudes(n_spins: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_oracle_size(n_spins)?;
        if amplitudes.len() != 1 << n_spins {
            return Err(Error::Dimension {
                expected: 1 << n_spins,
                got: amplitudes.len(),
            });
        }
        Ok(Self { n_spins, amplitudes })
    }

    /// Uncorrelated product state `⊗ (cos(θ/2)|↑⟩ + e^{iφ} sin(θ/2)|↓⟩)`,
    /// built configuration by configuration.
    pub fn product(n_spins: usize, theta: f64, phi: f64) -> Result<Self> {
        check_oracle_size(n_spins)?;
        let up = Complex64::new(libm::cos(theta / 2.0), 0.0);
        let down = Complex64::from_polar(libm::sin(theta / 2.0), phi);
        let amplitudes = (0..1usize << n_spins)
            .map(|cfg| {
                (0..n_spins).fold(Complex64::new(1.0, 0.0), |acc, spin| {
                    if spin_is_down(cfg, n_spins, spin) {
                        acc * down
                    } else {
                        acc * up
                    }
                })
            })
            .collect();
        Ok(Self { n_spins, amplitudes })
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.amplitudes.len() != other.amplitudes.len() {
            return Err(Error::Dimension {
                expected: self.amplitudes.len(),
                got: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Projection onto the normalized Dicke basis.
    pub fn to_dicke(&self) -> DickeState {
        let n = self.n_spins;
        let mut amps = vec![Complex64::new(0.0, 0.0); n + 1];
        for (cfg, a) in self.amplitudes.iter().enumerate() {
            amps[cfg.count_ones() as usize] += *a;
        }
        for (p, a) in amps.iter_mut().enumerate() {
            *a /= libm::sqrt(binomial(n, p));
        }
        DickeState { amplitudes: amps }
    }

    /// Weight carried by the permutation-symmetric sector.
    pub fn symmetric_occupancy(&self) -> f64 {
        self.to_dicke().norm_sqr()
    }

    /// Brute-force mean and variance of `H = J (Σ S_z)^2`, configuration by configuration.
    pub fn energy_moments(&self, coupling: f64) -> (f64, f64) {
        let n = self.n_spins;
        let (m1, m2) = self
            .amplitudes
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(m1, m2), (cfg, a)| {
                let e = coupling * config_collective_sz_sqr(cfg, n);
                let w = a.norm_sqr();
                (m1 + w * e, m2 + w * e * e)
            });
        (m1, (m2 - m1 * m1).max(0.0))
    }
}

fn check_oracle_size(n_spins: usize) -> Result<()> {
    if n_spins == 0 {
        return Err(Error::Domain {
            name: "n_spins",
            value: 0.0,
            reason: "at least one spin required",
        });
    }
    if n_spins > FULL_ORACLE_MAX_SPINS {
        return Err(Error::TooManySpins {
            n_spins,
            max: FULL_ORACLE_MAX_SPINS,
        });
    }
    Ok(())
}

fn spin_is_down(cfg: usize, n_spins: usize, spin: usize) -> bool {
    (cfg >> (n_spins - 1 - spin)) & 1 == 1
}

/// `(Σ S_z)^2` on a configuration, computed spin by spin.
fn config_collective_sz_sqr(cfg: usize, n_spins: usize) -> f64 {
    let m: f64 = (0..n_spins)
        .map(|s| if spin_is_down(cfg, n_spins, s) { -0.5 } else { 0.5 })
        .sum();
    m * m
}

/// One level of the Ising spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumLevel {
    /// p = number of flipped spins relative to the fully polarized state (p ≤ N/2)
    pub flips: usize,
    pub eigenvalue: f64,
    pub degeneracy: u128,
}

/// Distinct eigenvalues `J (N-2p)^2/4` with their degeneracies.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpectrum {
    pub n_spins: usize,
    pub levels: Vec<SpectrumLevel>,
}

impl HamiltonianSpectrum {
    pub fn new(n_spins: usize, coupling: f64) -> Result<Self> {
        if n_spins == 0 {
            return Err(Error::Domain {
                name: "n_spins",
                value: 0.0,
                reason: "at least one spin required",
            });
        }
        let levels = (0..=n_spins / 2)
            .map(|p| {
                let c = binomial_exact(n_spins, p).ok_or(Error::Overflow { n: n_spins, k: p })?;
                let degeneracy = if 2 * p == n_spins {
                    c
                } else {
                    c.checked_mul(2).ok_or(Error::Overflow { n: n_spins, k: p })?
                };
                Ok(SpectrumLevel {
                    flips: p,
                    eigenvalue: coupling * level_energy(n_spins, p),
                    degeneracy,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n_spins, levels })
    }

    pub fn total_degeneracy(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(0u128, |acc, l| acc.checked_add(l.degeneracy))
    }
}

/// Product initial state (ξ = 0) in the Dicke basis:
/// `c_p = √C(N,p) cos^{N-p}(θ/2) sin^p(θ/2) e^{ipφ}`.
pub fn build_initial_state(params: &ModelParams) -> Result<DickeState> {
    params.validate()?;
    let n = params.n_spins;
    let amplitudes = (0..=n)
        .map(|p| Complex64::from_polar(libm::sqrt(dicke_weight(n, p, params.theta)), p as f64 * params.phi))
        .collect();
    Ok(DickeState { amplitudes })
}

/// Applies `e^{-iHt}`: `c_p ← c_p e^{-iξ(N-2p)^2/4}`.
pub fn evolve(state: &DickeState, params: &ModelParams) -> Result<DickeState> {
    params.validate()?;
    if state.n_spins() != params.n_spins {
        return Err(Error::Dimension {
            expected: params.n_spins + 1,
            got: state.amplitudes.len(),
        });
    }
    let n = params.n_spins;
    let amplitudes = state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(p, c)| c * Complex64::from_polar(1.0, -params.xi * level_energy(n, p)))
        .collect();
    Ok(DickeState { amplitudes })
}

/// The evolved state `|Ψ(ξ)⟩` in the Dicke basis.
pub fn evolved_state(params: &ModelParams) -> Result<DickeState> {
    evolve(&build_initial_state(params)?, params)
}

/// Expands Dicke amplitudes onto all 2^N configurations (`c_p / √C(N,p)` each).
pub fn dicke_to_full(state: &DickeState) -> Result<FullState> {
    let n = state.n_spins();
    check_oracle_size(n)?;
    let scaled: Vec<Complex64> = state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(p, c)| c / libm::sqrt(binomial(n, p)))
        .collect();
    let amplitudes = (0..1usize << n).map(|cfg| scaled[cfg.count_ones() as usize]).collect();
    Ok(FullState { n_spins: n, amplitudes })
}

/// Brute-force propagation: every configuration picks up `e^{-iξ m^2}`
/// with `m = (n_up - n_down)/2` counted spin by spin.
pub fn full_evolve_oracle(state: &FullState, params: &ModelParams) -> Result<FullState> {
    params.validate()?;
    if state.n_spins != params.n_spins {
        return Err(Error::Dimension {
            expected: 1 << params.n_spins,
            got: state.amplitudes.len(),
        });
    }
    let n = state.n_spins;
    let amplitudes = state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(cfg, a)| a * Complex64::from_polar(1.0, -params.xi * config_collective_sz_sqr(cfg, n)))
        .collect();
    Ok(FullState { n_spins: n, amplitudes })
}

/// Transition amplitude `⟨Ψ_i|Ψ(ξ)⟩`, computed as a Dicke-basis inner product.
pub fn overlap(params: &ModelParams) -> Result<Complex64> {
    let initial = build_initial_state(params)?;
    let evolved = evolve(&initial, params)?;
    initial.inner(&evolved)
}

/// Mean and variance of H in the (time-independent) energy distribution.
pub fn energy_moments(params: &ModelParams) -> Result<(f64, f64)> {
    let state = build_initial_state(params)?;
    let (m1, m2) = state.collective_moments();
    let j = params.coupling;
    let mean = j * m1;
    let var = j * j * (m2 - m1 * m1);
    Ok((mean, var.max(0.0)))
}

/// Reduced density matrix of spins `a`, `b` (0-based, spin 0 = most
/// significant bit). Rows/columns ordered `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩` with
/// spin `a` first.
pub fn reduced_two_spin_density(state: &FullState, spin_a: usize, spin_b: usize) -> Result<CMatrix> {
    let n = state.n_spins;
    for &idx in &[spin_a, spin_b] {
        if idx >= n {
            return Err(Error::SpinIndex { index: idx, n_spins: n });
        }
    }
    if spin_a == spin_b || n < 2 {
        return Err(Error::SpinIndex { index: spin_b, n_spins: n });
    }
    let bit_a = n - 1 - spin_a;
    let bit_b = n - 1 - spin_b;
    let mask = (1usize << bit_a) | (1usize << bit_b);
    let with_pair = |env: usize, idx: usize| env | (((idx >> 1) & 1) << bit_a) | ((idx & 1) << bit_b);
    let mut rho = CMatrix::zeros(4);
    // env runs over the traced-out spins with both pair bits cleared
    for env in (0..1usize << n).filter(|cfg| cfg & mask == 0) {
        for row in 0..4usize {
            let ar = state.amplitudes[with_pair(env, row)];
            for col in 0..4usize {
                rho[(row, col)] += ar * state.amplitudes[with_pair(env, col)].conj();
            }
        }
    }
    Ok(rho)
}

/// Evolution periods detected on the candidate lattice ξ = kπ/4, k = 1..=32.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuredPeriod {
    /// Smallest ξ with `|Ψ(ξ)⟩ = |Ψ(0)⟩` amplitude by amplitude.
    pub amplitude: f64,
    /// Smallest ξ with `|Ψ(ξ)⟩ = e^{iα}|Ψ(0)⟩` (the projective-ray period).
    pub ray: f64,
}

/// Detects the state periods of the N-spin evolution.
///
/// A generic point (θ = 1, φ = 0.3) populates every Dicke level, so the
/// periods found are those of the model rather than of a special state.
pub fn measured_period(n_spins: usize) -> Result<MeasuredPeriod> {
    let base = ModelParams::new(n_spins, 1.0, 1.0, 0.3, 0.0)?;
    let initial = build_initial_state(&base)?;
    let mut amplitude = None;
    let mut ray = None;
    for k in 1..=32u32 {
        let xi = k as f64 * PI / 4.0;
        let evolved = evolve(&initial, &base.with_xi(xi))?;
        let max_dev = initial
            .amplitudes
            .iter()
            .zip(&evolved.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if amplitude.is_none() && max_dev <= 1e-12 {
            amplitude = Some(xi);
        }
        if ray.is_none() && (1.0 - initial.inner(&evolved)?.norm()).abs() <= 1e-12 {
            ray = Some(xi);
        }
        if amplitude.is_some() && ray.is_some() {
            break;
        }
    }
    // (N-2p)^2/4 is a multiple of 1/4, so 8π is always a period
    Ok(MeasuredPeriod {
        amplitude: amplitude.unwrap_or(8.0 * PI),
        ray: ray.unwrap_or(8.0 * PI),
    })
}
