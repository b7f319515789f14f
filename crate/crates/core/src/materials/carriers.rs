//! Free-carrier relations linking carrier density and conductivity to Drude parameters.

use crate::constants::{E_CHARGE, EPS0};
use crate::error::{ensure_positive, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarrierParams {
    /// Carrier density, m⁻³.
    pub n: f64,
    /// Effective mass, kg.
    pub m_eff: f64,
    /// dc conductivity, S/m.
    pub sigma: Option<f64>,
}

impl CarrierParams {
    pub fn new(n: f64, m_eff: f64, sigma: Option<f64>) -> Result<Self> {
        ensure_positive("carrier density", n)?;
        ensure_positive("effective mass", m_eff)?;
        if let Some(s) = sigma {
            ensure_positive("conductivity", s)?;
        }
        Ok(Self { n, m_eff, sigma })
    }
}

/// ω_p = sqrt(n e² / (ε₀ m_eff)), rad/s.
pub fn plasma_frequency(params: &CarrierParams) -> Result<f64> {
    ensure_positive("carrier density", params.n)?;
    ensure_positive("effective mass", params.m_eff)?;
    Ok((params.n * E_CHARGE * E_CHARGE / (EPS0 * params.m_eff)).sqrt())
}

/// τ = σ / (ε₀ ω_p²), seconds.
pub fn scattering_time(sigma: f64, omega_p: f64) -> Result<f64> {
    ensure_positive("conductivity", sigma)?;
    ensure_positive("plasma frequency", omega_p)?;
    Ok(sigma / (EPS0 * omega_p * omega_p))
}
