//! Matsubara summation with the transverse-momentum integral on a
//! Gauss–Laguerre rule.
//!
//! With y = 2 q z the k⊥ integrals become
//!
//!   ∫ k⊥ dk⊥ ln(1 − x e^{−2qz})              = (1/4z²) ∫_{y_l}^∞ y ln(1 − x e^{−y}) dy
//!   ∫ k⊥ dk⊥ q x e^{−2qz}/(1 − x e^{−2qz})   = (1/8z³) ∫_{y_l}^∞ y² x e^{−y}/(1 − x e^{−y}) dy
//!
//! with y_l = 2 z ξ_l / c and x the product of the two reflection amplitudes.
//! Shifting y = y_l + t leaves an e^{−t} weight. At ξ = 0 the amplitudes are
//! usually independent of k⊥ and the integrals reduce to −Li₃(x) and 2 Li₃(x).

use super::reflection::{amplitudes, zero_frequency, ZeroTe};
use super::MatsubaraGrid;
use crate::constants::{C, K_B};
use crate::error::Result;
use crate::materials::{Permittivity, PermittivityModel};
use crate::quadrature::GaussLaguerre;
use crate::special::polylog3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Quantity {
    /// Free energy per unit area, J/m².
    Energy,
    /// Pressure, Pa.
    Pressure,
}

/// Result of one truncated Matsubara sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Series {
    pub value: f64,
    pub terms: usize,
    pub last_ratio: f64,
    pub converged: bool,
}

/// The bodies entering one sum: a probe facing either one plate, or the
/// difference between two plates.
pub(crate) struct Bodies<'a> {
    pub probe: &'a PermittivityModel,
    pub high: &'a PermittivityModel,
    pub low: Option<&'a PermittivityModel>,
}

/// ln(1 − u)/u with the u → 0 limit.
#[inline]
fn log_ratio(u: f64) -> f64 {
    if u == 0.0 {
        -1.0
    } else {
        (-u).ln_1p() / u
    }
}

/// e^{t} × kernel(y_l + t). `scale` is e^{−y_l}.
#[inline]
fn scaled_kernel(quantity: Quantity, y: f64, t: f64, x: f64, scale: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let u = x * scale * (-t).exp();
    match quantity {
        Quantity::Energy => y * x * scale * log_ratio(u),
        Quantity::Pressure => y * y * x * scale / (1.0 - u),
    }
}

/// ∫₀^∞ kernel dy for a k⊥-independent amplitude product.
fn closed_form(quantity: Quantity, x: f64) -> Result<f64> {
    let li3 = polylog3(x)?;
    Ok(match quantity {
        Quantity::Energy => -li3,
        Quantity::Pressure => 2.0 * li3,
    })
}

/// One Matsubara term as (probe–high minus probe–low, magnitude scale).
fn zero_term(quantity: Quantity, bodies: &Bodies<'_>, z: f64, rule: &GaussLaguerre) -> Result<(f64, f64)> {
    let (p_tm, p_te) = zero_frequency(bodies.probe);
    let (h_tm, h_te) = zero_frequency(bodies.high);
    let low = bodies.low.map(zero_frequency);

    let mut high_sum = closed_form(quantity, p_tm * h_tm)?;
    let mut low_sum = match low {
        Some((l_tm, _)) => closed_form(quantity, p_tm * l_tm)?,
        None => 0.0,
    };

    // TE: closed form unless an amplitude varies with k⊥ (plasma limit).
    let te_pair = |other: ZeroTe| -> Result<f64> {
        let vanishing = |te: ZeroTe| te == ZeroTe::Constant(0.0);
        match (p_te, other) {
            (ZeroTe::Constant(a), ZeroTe::Constant(b)) => closed_form(quantity, a * b),
            _ if vanishing(p_te) || vanishing(other) => Ok(0.0),
            _ => Ok(rule.integrate(|t| {
                let k = t / (2.0 * z);
                scaled_kernel(quantity, t, t, p_te.at(k) * other.at(k), 1.0)
            })),
        }
    };
    high_sum += te_pair(h_te)?;
    if let Some((_, l_te)) = low {
        low_sum += te_pair(l_te)?;
    }
    Ok((high_sum - low_sum, high_sum.abs() + low_sum.abs()))
}

fn finite_term(
    quantity: Quantity,
    bodies: &Bodies<'_>,
    xi: f64,
    z: f64,
    rule: &GaussLaguerre,
) -> Result<(f64, f64)> {
    let xi_c = xi / C;
    let y_l = 2.0 * z * xi_c;
    let scale = (-y_l).exp();
    let eps_p = bodies.probe.permittivity_at(xi)?;
    let eps_h = bodies.high.permittivity_at(xi)?;
    let eps_l: Option<Permittivity> = bodies.low.map(|m| m.permittivity_at(xi)).transpose()?;

    let mut diff = 0.0;
    let mut high_abs = 0.0;
    let mut low_abs = 0.0;
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        if w == 0.0 {
            continue;
        }
        let y = y_l + t;
        let q = y / (2.0 * z);
        let (p_tm, p_te) = amplitudes(eps_p, xi_c, q);
        let (h_tm, h_te) = amplitudes(eps_h, xi_c, q);
        let high = scaled_kernel(quantity, y, t, p_tm * h_tm, scale)
            + scaled_kernel(quantity, y, t, p_te * h_te, scale);
        let low = match eps_l {
            Some(e) => {
                let (l_tm, l_te) = amplitudes(e, xi_c, q);
                scaled_kernel(quantity, y, t, p_tm * l_tm, scale)
                    + scaled_kernel(quantity, y, t, p_te * l_te, scale)
            }
            None => 0.0,
        };
        diff += w * (high - low);
        high_abs += w * high;
        low_abs += w * low;
    }
    Ok((diff, high_abs.abs() + low_abs.abs()))
}

/// Runs the truncated sum Σ'_l and applies the physical prefactor.
///
/// Truncation: after each l ≥ 1 the term's magnitude scale (the sum of the
/// constituent single-plate integrals, so a sign change in a difference
/// integrand cannot stop the sum early) is compared with the accumulated
/// scale; the sum stops once the ratio drops to `rel_tol`.
pub(crate) fn matsubara_series(
    quantity: Quantity,
    bodies: &Bodies<'_>,
    z: f64,
    grid: &MatsubaraGrid,
) -> Result<Series> {
    let rule = GaussLaguerre::new(grid.nodes())?;
    let (t0, s0) = zero_term(quantity, bodies, z, &rule)?;
    let mut sum = 0.5 * t0;
    let mut scale_sum = 0.5 * s0;
    let mut last_ratio = f64::INFINITY;
    let mut terms = 1;
    let mut converged = false;
    for l in 1..grid.l_max_cap() {
        let xi = grid.frequency(l);
        let (t, s) = finite_term(quantity, bodies, xi, z, &rule)?;
        sum += t;
        scale_sum += s;
        terms += 1;
        last_ratio = if scale_sum > 0.0 { s / scale_sum } else { 0.0 };
        if s <= grid.rel_tol() * scale_sum {
            converged = true;
            break;
        }
    }
    let t = grid.temperature();
    let prefactor = match quantity {
        Quantity::Energy => K_B * t / (2.0 * std::f64::consts::PI) / (4.0 * z * z),
        Quantity::Pressure => -K_B * t / std::f64::consts::PI / (8.0 * z * z * z),
    };
    Ok(Series {
        value: prefactor * sum,
        terms,
        last_ratio,
        converged,
    })
}
