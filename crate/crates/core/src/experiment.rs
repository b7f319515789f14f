//! Measurable quantities of the cantilever experiments: thermal-noise force
//! sensitivity, resonance-frequency shifts in the dynamic technique, and the
//! mapping of a sphere–plate force gradient onto a plate–plate pressure.

use std::f64::consts::PI;

use log::warn;

use crate::constants::K_B;
use crate::error::{ensure_positive, Error, Result};
use crate::lifshitz::{difference_force, MatsubaraGrid};
use crate::materials::PermittivityModel;

/// Derivative step as a fraction of the separation.
pub const GRADIENT_STEP_FRACTION: f64 = 1.0 / 200.0;

/// Largest |∂F/∂z| / k for which the linearised shift formula is trusted.
pub const LINEAR_REGIME_LIMIT: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CantileverParams {
    /// Spring constant, N/m.
    pub k: f64,
    /// Resonance frequency, Hz.
    pub f_r: f64,
    /// Quality factor.
    pub q: f64,
    /// Equivalent noise bandwidth, Hz.
    pub bandwidth: f64,
    /// Temperature, K.
    pub temperature: f64,
    /// Effective mass, kg. Derived from k and f_r when absent.
    pub mass: Option<f64>,
}

impl CantileverParams {
    pub fn new(k: f64, f_r: f64, q: f64, bandwidth: f64, temperature: f64) -> Result<Self> {
        let p = Self {
            k,
            f_r,
            q,
            bandwidth,
            temperature,
            mass: None,
        };
        p.validate()?;
        Ok(p)
    }

    /// The setup at 77 K: k = 0.03 N/m, f_r = 1130.9 Hz, Q = 5889.2, B = 0.3 Hz.
    pub fn reference() -> Self {
        Self {
            k: 0.03,
            f_r: 1130.9,
            q: 5889.2,
            bandwidth: 0.3,
            temperature: 77.0,
            mass: None,
        }
    }

    pub fn with_mass(mut self, mass: f64) -> Result<Self> {
        self.mass = Some(mass);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("spring constant", self.k)?;
        ensure_positive("resonance frequency", self.f_r)?;
        ensure_positive("quality factor", self.q)?;
        ensure_positive("bandwidth", self.bandwidth)?;
        ensure_positive("temperature", self.temperature)?;
        if let Some(m) = self.mass {
            ensure_positive("effective mass", m)?;
            let omega = (self.k / m).sqrt();
            if (omega - self.omega_r()).abs() > 1e-9 * self.omega_r() {
                return Err(Error::InvalidParameter(format!(
                    "sqrt(k/M) = {omega} rad/s disagrees with 2π f_r = {} rad/s",
                    self.omega_r()
                )));
            }
        }
        Ok(())
    }

    /// ω_r = 2π f_r, rad/s.
    pub fn omega_r(&self) -> f64 {
        2.0 * PI * self.f_r
    }

    /// M = k / ω_r², kg.
    pub fn effective_mass(&self) -> f64 {
        self.mass.unwrap_or_else(|| self.k / (self.omega_r() * self.omega_r()))
    }
}

/// δF_min = sqrt(2 k_B T k B / (π Q f_r)), N.
pub fn min_detectable_force(p: &CantileverParams) -> Result<f64> {
    p.validate()?;
    Ok((2.0 * K_B * p.temperature * p.k * p.bandwidth / (PI * p.q * p.f_r)).sqrt())
}

/// Shift of the resonance, in Hz, caused by a force gradient:
/// Δω = −(ω_r / 2k) ∂F/∂z, reported as Δω / 2π. Applied to the gradient of a
/// difference force it gives the shift between the two plate sections.
pub fn resonance_shift(p: &CantileverParams, force_gradient: f64) -> Result<f64> {
    p.validate()?;
    if !force_gradient.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "force gradient must be finite, got {force_gradient}"
        )));
    }
    if force_gradient.abs() / p.k >= LINEAR_REGIME_LIMIT {
        warn!(
            "|dF/dz|/k = {:.3e} is outside the linearised regime (< {LINEAR_REGIME_LIMIT})",
            force_gradient.abs() / p.k
        );
    }
    let d_omega = -p.omega_r() / (2.0 * p.k) * force_gradient;
    Ok(d_omega / (2.0 * PI))
}

/// P = −(1/2πR) ∂F/∂z, Pa.
pub fn pressure_from_force_gradient(radius: f64, d_force_dz: f64) -> Result<f64> {
    ensure_positive("sphere radius", radius)?;
    Ok(-d_force_dz / (2.0 * PI * radius))
}

/// Five-point central difference [−f(x+2h) + 8f(x+h) − 8f(x−h) + f(x−2h)] / 12h.
pub fn five_point_derivative<F>(mut f: F, x: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    ensure_positive("derivative step", h)?;
    let f_p2 = f(x + 2.0 * h)?;
    let f_p1 = f(x + h)?;
    let f_m1 = f(x - h)?;
    let f_m2 = f(x - 2.0 * h)?;
    Ok((-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * h))
}

/// ∂ΔF/∂z of the difference force at `z`, five-point stencil with step z/200.
pub fn difference_force_gradient(
    sphere: &PermittivityModel,
    high: &PermittivityModel,
    low: &PermittivityModel,
    radius: f64,
    z: f64,
    grid: &MatsubaraGrid,
) -> Result<f64> {
    ensure_positive("separation", z)?;
    five_point_derivative(
        |zz| Ok(difference_force(sphere, high, low, radius, zz, grid)?.value),
        z,
        z * GRADIENT_STEP_FRACTION,
    )
}
