//! Finite-temperature Casimir forces and pressures between a gold probe and
//! semiconductor plates.
//!
//! * [`materials`]: permittivity models on the imaginary frequency axis.
//! * [`lifshitz`]: Matsubara sums, plate–plate energies and pressures,
//!   sphere–plate forces (proximity force approximation), difference
//!   quantities and the closed-form zero-frequency gaps.
//! * [`experiment`]: cantilever sensitivity and dynamic-mode observables.
//! * [`cli`]: configuration, sweeps, reports and their file formats.

pub mod cli;
pub mod constants;
pub mod error;
pub mod experiment;
pub mod lifshitz;
pub mod materials;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
