//! Fresnel reflection amplitudes on the imaginary frequency axis.
//!
//! Sign convention: r_TM = (εq − k)/(εq + k) and r_TE = (k − q)/(k + q) with
//! q = sqrt(k⊥² + ξ²/c²), k = sqrt(k⊥² + εξ²/c²). Both are non-negative for
//! ε ≥ 1; only products of amplitudes from the two bodies enter the Lifshitz
//! formulas.

use crate::constants::C;
use crate::error::{Error, Result};
use crate::materials::{static_permittivity, Permittivity, PermittivityModel, ZeroFrequencyTe};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionPair {
    pub r_tm: f64,
    pub r_te: f64,
}

/// Amplitudes for finite ε at ξ > 0, written in cancellation-free form.
/// `xi_c` is ξ/c and `q` the vacuum normal wave number (both in 1/m).
#[inline]
pub(crate) fn finite_amplitudes(eps: f64, xi_c: f64, q: f64) -> (f64, f64) {
    let xi_c2 = xi_c * xi_c;
    let k_med = (q * q + (eps - 1.0) * xi_c2).sqrt();
    let tm_den = eps * q + k_med;
    let r_tm = (eps - 1.0) * ((eps + 1.0) * q * q - xi_c2) / (tm_den * tm_den);
    let te_den = k_med + q;
    let r_te = (eps - 1.0) * xi_c2 / (te_den * te_den);
    (r_tm, r_te)
}

/// Amplitudes at ξ > 0 for a permittivity value.
#[inline]
pub(crate) fn amplitudes(eps: Permittivity, xi_c: f64, q: f64) -> (f64, f64) {
    match eps {
        Permittivity::Infinite => (1.0, 1.0),
        Permittivity::Finite(e) => finite_amplitudes(e, xi_c, q),
    }
}

/// Zero-frequency TE amplitude as a function of k⊥.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum ZeroTe {
    Constant(f64),
    /// kₚ²/(sqrt(k² + kₚ²) + k)² with kₚ = ω_p/c.
    Plasma { k_p: f64 },
}

impl ZeroTe {
    #[inline]
    pub(crate) fn at(&self, k_perp: f64) -> f64 {
        match *self {
            ZeroTe::Constant(r) => r,
            ZeroTe::Plasma { k_p } => {
                let den = (k_perp * k_perp + k_p * k_p).sqrt() + k_perp;
                k_p * k_p / (den * den)
            }
        }
    }
}

/// (r_TM, r_TE) at ξ = 0 for a material model. r_TM does not depend on k⊥.
pub(crate) fn zero_frequency(model: &PermittivityModel) -> (f64, ZeroTe) {
    if model.is_perfect_conductor() {
        return (1.0, ZeroTe::Constant(1.0));
    }
    match static_permittivity(model) {
        Permittivity::Infinite => {
            let te = match (model.zero_frequency_te(), model.drude()) {
                (ZeroFrequencyTe::PlasmaLimit, Some(d)) => ZeroTe::Plasma {
                    k_p: d.omega_p() / C,
                },
                _ => ZeroTe::Constant(0.0),
            };
            (1.0, te)
        }
        Permittivity::Finite(e0) => ((e0 - 1.0) / (e0 + 1.0), ZeroTe::Constant(0.0)),
    }
}

fn check_arguments(xi: f64, k_perp: f64) -> Result<()> {
    if !(xi >= 0.0 && xi.is_finite()) || !(k_perp >= 0.0 && k_perp.is_finite()) {
        return Err(Error::Domain(format!(
            "reflection needs finite xi >= 0 and k_perp >= 0, got xi = {xi}, k_perp = {k_perp}"
        )));
    }
    if xi == 0.0 && k_perp == 0.0 {
        return Err(Error::Domain(
            "reflection undefined at xi = k_perp = 0 (no propagation direction)".into(),
        ));
    }
    Ok(())
}

/// Reflection amplitudes for a bare permittivity value.
///
/// At ξ = 0 the infinite marker gives r_TM = 1 and r_TE = 0 (Drude
/// convention); a finite static value gives r_TM = (ε−1)/(ε+1), r_TE = 0.
pub fn reflection_coefficients(eps: Permittivity, xi: f64, k_perp: f64) -> Result<ReflectionPair> {
    check_arguments(xi, k_perp)?;
    if let Permittivity::Finite(e) = eps {
        if !(e >= 1.0) || e.is_infinite() {
            return Err(Error::Domain(format!("permittivity must be finite and >= 1, got {e}")));
        }
    }
    if xi == 0.0 {
        let r_tm = match eps {
            Permittivity::Infinite => 1.0,
            Permittivity::Finite(e) => (e - 1.0) / (e + 1.0),
        };
        return Ok(ReflectionPair { r_tm, r_te: 0.0 });
    }
    let xi_c = xi / C;
    let q = (k_perp * k_perp + xi_c * xi_c).sqrt();
    let (r_tm, r_te) = amplitudes(eps, xi_c, q);
    Ok(ReflectionPair { r_tm, r_te })
}

/// Reflection amplitudes of a material model, honouring its zero-frequency
/// TE convention and the perfect-conductor limit.
pub fn model_reflection(model: &PermittivityModel, xi: f64, k_perp: f64) -> Result<ReflectionPair> {
    check_arguments(xi, k_perp)?;
    if xi == 0.0 {
        let (r_tm, te) = zero_frequency(model);
        return Ok(ReflectionPair {
            r_tm,
            r_te: te.at(k_perp),
        });
    }
    reflection_coefficients(model.permittivity_at(xi)?, xi, k_perp)
}
