//! Model (a) versus model (b) comparison.

use serde::Serialize;

use super::config::{LowFreqModel, SweepConfig};
use crate::error::{Error, Result};
use crate::lifshitz::{model_gap, sweep, CurveKind};
use crate::materials::{static_permittivity, Permittivity};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportRow {
    pub z: f64,
    /// Difference quantity with finite static permittivity.
    pub delta_a: f64,
    /// Difference quantity with dc conductivity.
    pub delta_b: f64,
    /// delta_a − delta_b.
    pub gap_numeric: f64,
    pub gap_analytic: f64,
    pub relative_deviation: f64,
    pub terms_a: usize,
    pub terms_b: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub kind: CurveKind,
    /// Static permittivity of the low-density section under model (a).
    pub eps0: f64,
    pub rows: Vec<ReportRow>,
    pub max_relative_deviation: f64,
    pub all_converged: bool,
}

impl ComparisonReport {
    /// True when every row converged and stays within `tolerance`.
    pub fn passes(&self, tolerance: f64) -> bool {
        self.all_converged && self.max_relative_deviation < tolerance
    }
}

/// Runs the configured sweep under both low-frequency models and compares
/// the numerical gap with its closed form.
///
/// The high-density section must be conducting so that only the low
/// section changes between the two models.
pub fn compare_models(config: &SweepConfig) -> Result<ComparisonReport> {
    let setup_a = config.setup_for(LowFreqModel::A)?;
    let setup_b = config.setup_for(LowFreqModel::B)?;
    let low = setup_a.low.as_ref().ok_or_else(|| {
        Error::InvalidParameter("compare needs a low-density plate section".into())
    })?;
    let eps0 = match static_permittivity(low) {
        Permittivity::Finite(e) => e,
        Permittivity::Infinite => {
            return Err(Error::InvalidParameter(format!(
                "low section '{}' already has an infinite static permittivity; \
                 both models coincide",
                low.label()
            )))
        }
    };
    if setup_a.high != setup_b.high {
        return Err(Error::InvalidParameter(format!(
            "high section '{}' is not conducting; models (a) and (b) would change both sections",
            setup_a.high.label()
        )));
    }

    let grid = config.grid()?;
    let separations = config.separations()?;
    let a = sweep(&setup_a, &separations, &grid)?;
    let b = sweep(&setup_b, &separations, &grid)?;

    let mut rows = Vec::with_capacity(separations.len());
    for (pa, pb) in a.points.iter().zip(&b.points) {
        let gap_numeric = pa.value - pb.value;
        let gap_analytic = model_gap(
            &setup_a.probe,
            eps0,
            setup_a.geometry,
            pa.z,
            config.temperature,
        )?;
        let relative_deviation = if gap_analytic == 0.0 {
            gap_numeric.abs()
        } else {
            ((gap_numeric - gap_analytic) / gap_analytic).abs()
        };
        rows.push(ReportRow {
            z: pa.z,
            delta_a: pa.value,
            delta_b: pb.value,
            gap_numeric,
            gap_analytic,
            relative_deviation,
            terms_a: pa.terms,
            terms_b: pb.terms,
            converged: pa.converged && pb.converged,
        });
    }
    let max_relative_deviation = rows
        .iter()
        .map(|r| r.relative_deviation)
        .fold(0.0, f64::max);
    Ok(ComparisonReport {
        kind: a.kind,
        eps0,
        all_converged: rows.iter().all(|r| r.converged),
        rows,
        max_relative_deviation,
    })
}
