//! CSV and JSON emission.
//!
//! Numbers are written in scientific notation with 12 significant digits.
//! Both formats embed the resolved configuration and a schema tag; there are
//! no timestamps, so identical inputs give byte-identical files.
//!
//! Curve CSV columns: `z_m, value, magnitude, terms, last_ratio, converged`.
//! Comparison CSV columns: `z_m, delta_a, delta_b, gap_numeric, gap_analytic,
//! gap_magnitude, relative_deviation, terms_a, terms_b, converged`.
//! Permittivity CSV columns: `xi_rad_s, xi_ev, eps`.

use std::io::Write;

use serde_json::{json, Map, Value};

use super::config::{Format, SweepConfig};
use super::report::ComparisonReport;
use super::units::{round12, sci};
use crate::error::{Error, Result};
use crate::lifshitz::{Curve, CurveKind};

pub const CURVE_SCHEMA: &str = "casimir-curve/1";
pub const REPORT_SCHEMA: &str = "casimir-compare/1";
pub const PERMITTIVITY_SCHEMA: &str = "casimir-permittivity/1";

/// One row of a permittivity table. `xi = 0` is the static value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermittivityRow {
    pub xi: f64,
    pub xi_ev: f64,
    pub eps: f64,
}

fn kind_name(kind: CurveKind) -> &'static str {
    match kind {
        CurveKind::Force => "force",
        CurveKind::Pressure => "pressure",
    }
}

fn header(w: &mut dyn Write, schema: &str, pairs: &[(&str, String)]) -> Result<()> {
    writeln!(w, "# schema = {schema}")?;
    for (k, v) in pairs {
        writeln!(w, "# {k} = {v}")?;
    }
    Ok(())
}

fn config_object(pairs: &[(&str, String)]) -> Value {
    Value::Object(
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect::<Map<_, _>>(),
    )
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round12(x))
    } else {
        Value::String(x.to_string())
    }
}

fn finish_json(w: &mut dyn Write, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(w, "{text}")?;
    Ok(())
}

pub fn write_curve(w: &mut dyn Write, curve: &Curve, config: &SweepConfig) -> Result<()> {
    let mut pairs = config.resolved_pairs();
    pairs.push(("probe_label", curve.metadata.probe.clone()));
    pairs.push(("high_label", curve.metadata.high.clone()));
    if let Some(low) = &curve.metadata.low {
        pairs.push(("low_label", low.clone()));
    }
    match config.format {
        Format::Csv => {
            header(w, CURVE_SCHEMA, &pairs)?;
            writeln!(w, "# unit = {}", curve.kind.unit())?;
            writeln!(w, "# all_converged = {}", curve.metadata.all_converged)?;
            writeln!(w, "z_m,value,magnitude,terms,last_ratio,converged")?;
            for p in &curve.points {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    sci(p.z),
                    sci(p.value),
                    sci(p.value.abs()),
                    p.terms,
                    sci(p.last_ratio),
                    p.converged
                )?;
            }
            Ok(())
        }
        Format::Json => {
            let points: Vec<Value> = curve
                .points
                .iter()
                .map(|p| {
                    json!({
                        "z_m": num(p.z),
                        "value": num(p.value),
                        "magnitude": num(p.value.abs()),
                        "terms": p.terms,
                        "last_ratio": num(p.last_ratio),
                        "converged": p.converged,
                    })
                })
                .collect();
            finish_json(
                w,
                &json!({
                    "schema": CURVE_SCHEMA,
                    "quantity": kind_name(curve.kind),
                    "unit": curve.kind.unit(),
                    "config": config_object(&pairs),
                    "all_converged": curve.metadata.all_converged,
                    "points": points,
                }),
            )
        }
    }
}

pub fn write_report(w: &mut dyn Write, report: &ComparisonReport, config: &SweepConfig) -> Result<()> {
    let mut pairs = config.resolved_pairs();
    pairs.retain(|(k, _)| *k != "model");
    match config.format {
        Format::Csv => {
            header(w, REPORT_SCHEMA, &pairs)?;
            writeln!(w, "# unit = {}", report.kind.unit())?;
            writeln!(w, "# eps0 = {}", sci(report.eps0))?;
            writeln!(w, "# all_converged = {}", report.all_converged)?;
            writeln!(
                w,
                "z_m,delta_a,delta_b,gap_numeric,gap_analytic,gap_magnitude,relative_deviation,terms_a,terms_b,converged"
            )?;
            for r in &report.rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{},{}",
                    sci(r.z),
                    sci(r.delta_a),
                    sci(r.delta_b),
                    sci(r.gap_numeric),
                    sci(r.gap_analytic),
                    sci(r.gap_numeric.abs()),
                    sci(r.relative_deviation),
                    r.terms_a,
                    r.terms_b,
                    r.converged
                )?;
            }
            writeln!(w, "# max_relative_deviation = {}", sci(report.max_relative_deviation))?;
            Ok(())
        }
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "z_m": num(r.z),
                        "delta_a": num(r.delta_a),
                        "delta_b": num(r.delta_b),
                        "gap_numeric": num(r.gap_numeric),
                        "gap_analytic": num(r.gap_analytic),
                        "gap_magnitude": num(r.gap_numeric.abs()),
                        "relative_deviation": num(r.relative_deviation),
                        "terms_a": r.terms_a,
                        "terms_b": r.terms_b,
                        "converged": r.converged,
                    })
                })
                .collect();
            finish_json(
                w,
                &json!({
                    "schema": REPORT_SCHEMA,
                    "quantity": kind_name(report.kind),
                    "unit": report.kind.unit(),
                    "config": config_object(&pairs),
                    "eps0": num(report.eps0),
                    "rows": rows,
                    "summary": {
                        "max_relative_deviation": num(report.max_relative_deviation),
                        "all_converged": report.all_converged,
                    },
                }),
            )
        }
    }
}

pub fn write_permittivity(
    w: &mut dyn Write,
    material: &str,
    rows: &[PermittivityRow],
    format: Format,
) -> Result<()> {
    let pairs = [("material", material.to_string())];
    match format {
        Format::Csv => {
            header(w, PERMITTIVITY_SCHEMA, &pairs)?;
            writeln!(w, "xi_rad_s,xi_ev,eps")?;
            for r in rows {
                writeln!(w, "{},{},{}", sci(r.xi), sci(r.xi_ev), sci(r.eps))?;
            }
            Ok(())
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({"xi_rad_s": num(r.xi), "xi_ev": num(r.xi_ev), "eps": num(r.eps)}))
                .collect();
            finish_json(
                w,
                &json!({
                    "schema": PERMITTIVITY_SCHEMA,
                    "config": config_object(&pairs),
                    "rows": rows,
                }),
            )
        }
    }
}
