//! Closed-form zero-frequency gaps between the finite-static-permittivity and
//! dc-conducting descriptions of a low-carrier-density plate.
//!
//! Only the l = 0 Matsubara term differs between the two descriptions: the
//! plate's r_TM(0) is (ε₀−1)/(ε₀+1) in one and 1 in the other, r_TE(0)
//! vanishes in both, and the l = 0 k⊥ integral is a trilogarithm.

use std::f64::consts::PI;

use super::reflection::zero_frequency;
use super::Geometry;
use crate::constants::K_B;
use crate::error::{ensure_positive, Error, Result};
use crate::materials::PermittivityModel;
use crate::special::polylog3;

fn static_reflection(eps0: f64) -> Result<f64> {
    if eps0.is_nan() || eps0 <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "static permittivity must exceed 1, got {eps0}"
        )));
    }
    if eps0.is_infinite() {
        return Ok(1.0);
    }
    Ok((eps0 - 1.0) / (eps0 + 1.0))
}

/// Li₃(r_probe) − Li₃(r_probe · r_plate) with r_plate = (ε₀−1)/(ε₀+1).
/// For a metallic probe (r_probe = 1) this is ζ(3) − Li₃(r_plate).
pub fn zero_frequency_gap_factor(probe_tm0: f64, eps0: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&probe_tm0) {
        return Err(Error::InvalidParameter(format!(
            "probe zero-frequency TM amplitude must lie in [0, 1], got {probe_tm0}"
        )));
    }
    let r = static_reflection(eps0)?;
    Ok(polylog3(probe_tm0)? - polylog3(probe_tm0 * r)?)
}

/// ΔF_a − ΔF_b = −(k_B T R / 8z²) [ζ(3) − Li₃((ε₀−1)/(ε₀+1))], N.
pub fn zero_freq_gap_force(radius: f64, z: f64, temperature: f64, eps0: f64) -> Result<f64> {
    ensure_positive("sphere radius", radius)?;
    ensure_positive("separation", z)?;
    ensure_positive("temperature", temperature)?;
    let braces = zero_frequency_gap_factor(1.0, eps0)?;
    Ok(-K_B * temperature * radius / (8.0 * z * z) * braces)
}

/// ΔP_a − ΔP_b = −(k_B T / 8π z³) [ζ(3) − Li₃((ε₀−1)/(ε₀+1))], Pa.
pub fn zero_freq_gap_pressure(z: f64, temperature: f64, eps0: f64) -> Result<f64> {
    ensure_positive("separation", z)?;
    ensure_positive("temperature", temperature)?;
    let braces = zero_frequency_gap_factor(1.0, eps0)?;
    Ok(-K_B * temperature / (8.0 * PI * z * z * z) * braces)
}

/// Zero-frequency gap for an arbitrary probe facing a plate of static
/// permittivity `eps0`: force (N) for a sphere, pressure (Pa) for plates.
pub fn model_gap(
    probe: &PermittivityModel,
    eps0: f64,
    geometry: Geometry,
    z: f64,
    temperature: f64,
) -> Result<f64> {
    ensure_positive("separation", z)?;
    ensure_positive("temperature", temperature)?;
    let (probe_tm0, _) = zero_frequency(probe);
    let braces = zero_frequency_gap_factor(probe_tm0, eps0)?;
    match geometry {
        Geometry::SpherePlate { radius } => {
            ensure_positive("sphere radius", radius)?;
            Ok(-K_B * temperature * radius / (8.0 * z * z) * braces)
        }
        Geometry::PlatePlate => Ok(-K_B * temperature / (8.0 * PI * z * z * z) * braces),
    }
}
