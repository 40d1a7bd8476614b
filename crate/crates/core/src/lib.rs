//! Quantum geometry of the one-axis twisting model `H = J (Σ S_z)^2`.
//!
//! The crate evolves N-spin product states under collective twisting and
//! exposes the Fubini-Study metric, curvature and Gauss-Bonnet data of the
//! evolved-state manifold, the total/dynamic/geometric and cyclic phases,
//! quantum speed and brachistochrone solutions, and the two-spin
//! specialisation parametrised by concurrence.
//!
//! Everything is `no_std` with `alloc`; floating-point special functions come
//! from `libm`. Units have `ħ = 1` and the dimensionless time is `ξ = J t`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod math;
pub mod phases;
pub mod spin;
pub mod two_spin;

pub use error::{Error, Result};
pub use geometry::{CrossTermConvention, CurvatureSample, GaussBonnetReport, MetricSample};
pub use linalg::CMatrix;
pub use spin::{DickeState, FullState, HamiltonianSpectrum, ModelParams};
