use thiserror::Error;

/// Errors raised by the state, geometry, phase and two-spin routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{name}` out of domain: {value} ({reason})")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("full Hilbert space oracle supports at most {max} spins, got {n_spins}")]
    TooManySpins { n_spins: usize, max: usize },

    #[error("spin index {index} invalid for {n_spins} spins (pair indices must be distinct)")]
    SpinIndex { index: usize, n_spins: usize },

    #[error("state dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("finite-difference step {step} invalid at theta = {theta}")]
    Step { step: f64, theta: f64 },

    #[error("curvature is singular at theta = {theta}")]
    Singularity { theta: f64 },

    #[error("quadrature did not reach tolerance {tol} (estimate {estimate})")]
    Convergence { tol: f64, estimate: f64 },

    #[error("phase undefined: |overlap| = {magnitude:e} at xi = {xi}")]
    UndefinedPhase { xi: f64, magnitude: f64 },

    #[error("unwrap path must be finite, non-empty and end at the target (offending xi = {xi})")]
    Path { xi: f64 },

    #[error("pole of the AA-curvature relation at N*K = 16 (N = {n_spins}, K = {k})")]
    Pole { n_spins: usize, k: f64 },

    #[error("coordinate chart singular at C = {c}, xi = {xi}")]
    CoordinateSingularity { c: f64, xi: f64 },

    #[error("non-physical density matrix: {reason} ({value:e})")]
    NonPhysical { reason: &'static str, value: f64 },

    #[error("binomial coefficient C({n}, {k}) overflows u128")]
    Overflow { n: usize, k: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
