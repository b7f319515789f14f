//! Separation sweeps.

use rayon::prelude::*;
use serde::Serialize;

use super::series::{matsubara_series, Bodies, Quantity};
use super::{check_pfa, check_separation, Geometry, MatsubaraGrid};
use crate::error::{Error, Result};
use crate::materials::PermittivityModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    /// Sphere–plate force, N.
    Force,
    /// Plate–plate pressure, Pa.
    Pressure,
}

impl CurveKind {
    pub fn unit(&self) -> &'static str {
        match self {
            CurveKind::Force => "N",
            CurveKind::Pressure => "Pa",
        }
    }
}

/// What is being swept: a probe facing one plate, or the difference between
/// two plate sections.
#[derive(Debug, Clone)]
pub struct Setup {
    pub probe: PermittivityModel,
    pub high: PermittivityModel,
    pub low: Option<PermittivityModel>,
    pub geometry: Geometry,
}

impl Setup {
    pub fn kind(&self) -> CurveKind {
        match self.geometry {
            Geometry::SpherePlate { .. } => CurveKind::Force,
            Geometry::PlatePlate => CurveKind::Pressure,
        }
    }

    /// Evaluates one separation. Non-convergence is reported in the point
    /// rather than as an error so a sweep can still emit its diagnostics.
    pub fn evaluate(&self, z: f64, grid: &MatsubaraGrid) -> Result<CurvePoint> {
        check_separation(z)?;
        let bodies = Bodies {
            probe: &self.probe,
            high: &self.high,
            low: self.low.as_ref(),
        };
        let (quantity, factor) = match self.geometry {
            Geometry::SpherePlate { radius } => {
                check_pfa(z, radius)?;
                (Quantity::Energy, 2.0 * std::f64::consts::PI * radius)
            }
            Geometry::PlatePlate => (Quantity::Pressure, 1.0),
        };
        let s = matsubara_series(quantity, &bodies, z, grid)?;
        Ok(CurvePoint {
            z,
            value: factor * s.value,
            terms: s.terms,
            last_ratio: s.last_ratio,
            converged: s.converged,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    /// Separation, m.
    pub z: f64,
    /// Signed value (negative = attractive), N or Pa.
    pub value: f64,
    pub terms: usize,
    pub last_ratio: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveMetadata {
    pub probe: String,
    pub high: String,
    pub low: Option<String>,
    pub temperature: f64,
    pub radius: Option<f64>,
    pub max_terms: usize,
    pub worst_last_ratio: f64,
    pub all_converged: bool,
}

/// Force or pressure versus separation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curve {
    pub kind: CurveKind,
    pub points: Vec<CurvePoint>,
    pub metadata: CurveMetadata,
}

pub type ForceCurve = Curve;
pub type PressureCurve = Curve;

impl Curve {
    pub fn separations(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.z).collect()
    }

    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.value).collect()
    }
}

/// Evaluates `setup` at every separation in parallel. Each point is an
/// independent sequential sum and results are collected in grid order, so
/// the output does not depend on the number of worker threads.
pub fn sweep(setup: &Setup, separations: &[f64], grid: &MatsubaraGrid) -> Result<Curve> {
    if separations.is_empty() {
        return Err(Error::InvalidParameter("empty separation grid".into()));
    }
    if separations.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "separations must be strictly increasing".into(),
        ));
    }
    let points = separations
        .par_iter()
        .map(|&z| setup.evaluate(z, grid))
        .collect::<Result<Vec<_>>>()?;
    let metadata = CurveMetadata {
        probe: setup.probe.label().to_string(),
        high: setup.high.label().to_string(),
        low: setup.low.as_ref().map(|m| m.label().to_string()),
        temperature: grid.temperature(),
        radius: match setup.geometry {
            Geometry::SpherePlate { radius } => Some(radius),
            Geometry::PlatePlate => None,
        },
        max_terms: points.iter().map(|p| p.terms).max().unwrap_or(0),
        worst_last_ratio: points.iter().map(|p| p.last_ratio).fold(0.0, f64::max),
        all_converged: points.iter().all(|p| p.converged),
    };
    Ok(Curve {
        kind: setup.kind(),
        points,
        metadata,
    })
}

fn check_range(min: f64, max: f64, n: usize) -> Result<()> {
    if !(min > 0.0 && max > min && max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "grid needs 0 < min < max, got [{min}, {max}]"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("grid needs >= 2 points, got {n}")));
    }
    Ok(())
}

/// `n` log-spaced points from `min` to `max` inclusive.
pub fn log_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    check_range(min, max, n)?;
    let ratio = (max / min).ln();
    let mut v: Vec<f64> = (0..n)
        .map(|i| min * (ratio * i as f64 / (n - 1) as f64).exp())
        .collect();
    v[0] = min;
    v[n - 1] = max;
    Ok(v)
}

/// `n` evenly spaced points from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    check_range(min, max, n)?;
    let step = (max - min) / (n - 1) as f64;
    let mut v: Vec<f64> = (0..n).map(|i| min + step * i as f64).collect();
    v[n - 1] = max;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_hit_endpoints() {
        let g = log_grid(1e-7, 3e-7, 41).unwrap();
        assert_eq!(g.len(), 41);
        assert_eq!((g[0], g[40]), (1e-7, 3e-7));
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        let l = linear_grid(1.0, 2.0, 3).unwrap();
        assert_eq!(l, vec![1.0, 1.5, 2.0]);
        assert!(log_grid(3.0, 1.0, 5).is_err());
        assert!(linear_grid(1.0, 2.0, 1).is_err());
    }
}
