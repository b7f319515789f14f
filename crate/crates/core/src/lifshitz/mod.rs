//! Finite-temperature Lifshitz theory for two half-spaces.
//!
//! Free energies and pressures between parallel plates, the sphere–plate
//! force in the proximity force approximation, and difference quantities in
//! which one probe faces two plate materials. Attractive forces and
//! pressures are negative.

mod curve;
mod gap;
mod reflection;
mod series;

pub use curve::{
    linear_grid, log_grid, sweep, Curve, CurveKind, CurveMetadata, CurvePoint, ForceCurve,
    PressureCurve, Setup,
};
pub use gap::{model_gap, zero_freq_gap_force, zero_freq_gap_pressure, zero_frequency_gap_factor};
pub use reflection::{model_reflection, reflection_coefficients, ReflectionPair};

use std::f64::consts::PI;

use log::warn;
use series::{matsubara_series, Bodies, Quantity, Series};

use crate::constants::{HBAR, K_B};
use crate::error::{ensure_positive, Error, Result};
use crate::materials::PermittivityModel;
use crate::quadrature::DEFAULT_NODES;

pub const DEFAULT_REL_TOL: f64 = 1e-9;
pub const DEFAULT_L_MAX_CAP: usize = 20_000;
/// Largest z/R for which the proximity force approximation is accepted
/// without a warning.
pub const PFA_MAX_RATIO: f64 = 0.01;

/// ξ_l = 2π k_B T l / ħ.
pub fn matsubara_frequency(l: i64, temperature: f64) -> Result<f64> {
    if l < 0 {
        return Err(Error::Domain(format!("Matsubara index must be >= 0, got {l}")));
    }
    ensure_positive("temperature", temperature)?;
    Ok(2.0 * PI * K_B * temperature * l as f64 / HBAR)
}

/// Temperature, truncation policy and k⊥ quadrature order of a Matsubara sum.
/// The l = 0 term carries weight 1/2, every other term weight 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraGrid {
    temperature: f64,
    rel_tol: f64,
    l_max_cap: usize,
    nodes: usize,
}

impl MatsubaraGrid {
    pub fn new(temperature: f64) -> Result<Self> {
        Self::with_policy(temperature, DEFAULT_REL_TOL, DEFAULT_L_MAX_CAP)
    }

    pub fn with_policy(temperature: f64, rel_tol: f64, l_max_cap: usize) -> Result<Self> {
        ensure_positive("temperature", temperature)?;
        if !(rel_tol > 0.0 && rel_tol < 1e-3) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol must lie in (0, 1e-3), got {rel_tol}"
            )));
        }
        if l_max_cap < 100 {
            return Err(Error::InvalidParameter(format!(
                "l_max_cap must be >= 100, got {l_max_cap}"
            )));
        }
        Ok(Self {
            temperature,
            rel_tol,
            l_max_cap,
            nodes: DEFAULT_NODES,
        })
    }

    /// Sets the Gauss–Laguerre order used for the k⊥ integral.
    pub fn with_nodes(mut self, nodes: usize) -> Result<Self> {
        if !(8..=1000).contains(&nodes) {
            return Err(Error::InvalidParameter(format!(
                "quadrature node count must be in [8, 1000], got {nodes}"
            )));
        }
        self.nodes = nodes;
        Ok(self)
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn l_max_cap(&self) -> usize {
        self.l_max_cap
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn frequency(&self, l: usize) -> f64 {
        2.0 * PI * K_B * self.temperature * l as f64 / HBAR
    }

    pub fn weight(l: usize) -> f64 {
        if l == 0 {
            0.5
        } else {
            1.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    PlatePlate,
    SpherePlate { radius: f64 },
}

/// Two bounding materials and the geometry they are arranged in.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfspacePair {
    pub side_a: PermittivityModel,
    pub side_b: PermittivityModel,
    pub geometry: Geometry,
}

impl HalfspacePair {
    pub fn plates(side_a: PermittivityModel, side_b: PermittivityModel) -> Self {
        Self {
            side_a,
            side_b,
            geometry: Geometry::PlatePlate,
        }
    }

    pub fn sphere_plate(sphere: PermittivityModel, plate: PermittivityModel, radius: f64) -> Result<Self> {
        ensure_positive("sphere radius", radius)?;
        Ok(Self {
            side_a: sphere,
            side_b: plate,
            geometry: Geometry::SpherePlate { radius },
        })
    }

    fn radius(&self) -> Result<f64> {
        match self.geometry {
            Geometry::SpherePlate { radius } => Ok(radius),
            Geometry::PlatePlate => Err(Error::InvalidParameter(
                "sphere-plate force requested for a plate-plate pair".into(),
            )),
        }
    }
}

/// A converged Lifshitz value with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    /// Matsubara terms summed, including l = 0.
    pub terms: usize,
    /// Magnitude of the last term relative to the accumulated sum.
    pub last_ratio: f64,
}

fn finish(series: Series, factor: f64) -> Result<Evaluation> {
    if series.converged {
        Ok(Evaluation {
            value: factor * series.value,
            terms: series.terms,
            last_ratio: series.last_ratio,
        })
    } else {
        Err(Error::NotConverged {
            terms: series.terms,
            last_ratio: series.last_ratio,
            partial: factor * series.value,
        })
    }
}

fn check_separation(z: f64) -> Result<()> {
    if z.is_finite() && z > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("separation must be > 0, got {z}")))
    }
}

pub(crate) fn check_pfa(z: f64, radius: f64) -> Result<()> {
    ensure_positive("sphere radius", radius)?;
    if z / radius > PFA_MAX_RATIO {
        warn!(
            "z/R = {:.3e} exceeds {PFA_MAX_RATIO}; proximity force approximation error grows as z/R",
            z / radius
        );
    }
    Ok(())
}

/// Lifshitz free energy per unit area between two plates, J/m².
pub fn free_energy_per_area(pair: &HalfspacePair, z: f64, grid: &MatsubaraGrid) -> Result<Evaluation> {
    check_separation(z)?;
    let bodies = Bodies {
        probe: &pair.side_a,
        high: &pair.side_b,
        low: None,
    };
    finish(matsubara_series(Quantity::Energy, &bodies, z, grid)?, 1.0)
}

/// Sphere–plate force 2πR · E(z), N.
pub fn sphere_plate_force(pair: &HalfspacePair, z: f64, grid: &MatsubaraGrid) -> Result<Evaluation> {
    check_separation(z)?;
    let radius = pair.radius()?;
    check_pfa(z, radius)?;
    let bodies = Bodies {
        probe: &pair.side_a,
        high: &pair.side_b,
        low: None,
    };
    finish(
        matsubara_series(Quantity::Energy, &bodies, z, grid)?,
        2.0 * PI * radius,
    )
}

/// ΔF = F_high − F_low for one sphere above two plate sections, evaluated as
/// a single log-ratio sum that shares q_l and the sphere's amplitudes.
pub fn difference_force(
    sphere: &PermittivityModel,
    high: &PermittivityModel,
    low: &PermittivityModel,
    radius: f64,
    z: f64,
    grid: &MatsubaraGrid,
) -> Result<Evaluation> {
    check_separation(z)?;
    check_pfa(z, radius)?;
    let bodies = Bodies {
        probe: sphere,
        high,
        low: Some(low),
    };
    finish(
        matsubara_series(Quantity::Energy, &bodies, z, grid)?,
        2.0 * PI * radius,
    )
}

/// Casimir pressure between two plates, Pa.
pub fn plate_plate_pressure(pair: &HalfspacePair, z: f64, grid: &MatsubaraGrid) -> Result<Evaluation> {
    check_separation(z)?;
    let bodies = Bodies {
        probe: &pair.side_a,
        high: &pair.side_b,
        low: None,
    };
    finish(matsubara_series(Quantity::Pressure, &bodies, z, grid)?, 1.0)
}

/// ΔP = P_high − P_low between one plate and two plate sections, one pass.
pub fn difference_pressure(
    plate: &PermittivityModel,
    high: &PermittivityModel,
    low: &PermittivityModel,
    z: f64,
    grid: &MatsubaraGrid,
) -> Result<Evaluation> {
    check_separation(z)?;
    let bodies = Bodies {
        probe: plate,
        high,
        low: Some(low),
    };
    finish(matsubara_series(Quantity::Pressure, &bodies, z, grid)?, 1.0)
}
