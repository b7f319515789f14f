//! Sweep configuration.
//!
//! A config file is flat TOML whose physical values are strings with unit
//! suffixes. Command-line flags overlay the file, and the result is resolved
//! into SI units and validated once.
//!
//! ```toml
//! quantity = "force"
//! z_min = "100 nm"
//! z_max = "300 nm"
//! points = 41
//! spacing = "log"
//! temperature = "300 K"
//! radius = "100 um"
//! sphere = "gold-drude"
//! high = "si-doped-n1"
//! low = "si-dielectric"
//! model = "a"
//!
//! [materials.my-gold]
//! optical_table = "au.dat"
//! omega_p = "9 eV"
//! gamma = "35 meV"
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::units::{parse_angular_frequency, parse_length, parse_temperature, sci};
use crate::error::{Error, Result};
use crate::lifshitz::{
    CurveKind, Geometry, MatsubaraGrid, Setup, DEFAULT_L_MAX_CAP, DEFAULT_REL_TOL,
};
use crate::materials::{
    build_material, lookup, static_permittivity, DrudeParams, MaterialSpec, OpticalDataTable,
    Permittivity, PermittivityModel, ZeroFrequencyTe,
};
use crate::quadrature::DEFAULT_NODES;

/// Name under which `--optical-table` data is addressable.
pub const TABULATED_NAME: &str = "tabulated";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Low-frequency description of the plate sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowFreqModel {
    /// Finite static permittivity.
    A,
    /// dc conductivity included: ε(0) → ∞.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

macro_rules! keyword_enum {
    ($ty:ty, $what:literal, $($text:literal => $variant:expr),+ $(,)?) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s.trim().to_ascii_lowercase().as_str() {
                    $($text => Ok($variant),)+
                    other => Err(Error::Parse(format!(
                        concat!("unknown ", $what, " '{}' (expected {})"),
                        other,
                        [$($text),+].join(" | ")
                    ))),
                }
            }
        }
    };
}

keyword_enum!(Spacing, "spacing", "linear" => Spacing::Linear, "log" => Spacing::Log);
keyword_enum!(LowFreqModel, "model", "a" => LowFreqModel::A, "b" => LowFreqModel::B);
keyword_enum!(Format, "format", "csv" => Format::Csv, "json" => Format::Json);
keyword_enum!(CurveKind, "quantity", "force" => CurveKind::Force, "pressure" => CurveKind::Pressure);
keyword_enum!(
    ZeroFrequencyTe,
    "zero-frequency TE rule",
    "vanishing" => ZeroFrequencyTe::Vanishing,
    "plasma" => ZeroFrequencyTe::PlasmaLimit,
);

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        })
    }
}

impl fmt::Display for LowFreqModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowFreqModel::A => "a",
            LowFreqModel::B => "b",
        })
    }
}

/// User-defined material, either a catalog entry with new Drude parameters
/// or an optical-data table with an optional Drude term.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomMaterial {
    pub base: Option<String>,
    pub optical_table: Option<PathBuf>,
    pub omega_p: Option<String>,
    pub gamma: Option<String>,
}

/// Config file contents and flag overrides before validation.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub quantity: Option<String>,
    pub z_min: Option<String>,
    pub z_max: Option<String>,
    pub points: Option<usize>,
    pub spacing: Option<String>,
    pub temperature: Option<String>,
    pub radius: Option<String>,
    pub sphere: Option<String>,
    pub high: Option<String>,
    pub low: Option<String>,
    pub model: Option<String>,
    pub te_zero: Option<String>,
    pub rel_tol: Option<f64>,
    pub l_max_cap: Option<usize>,
    pub nodes: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub optical_table: Option<PathBuf>,
    #[serde(default)]
    pub materials: BTreeMap<String, CustomMaterial>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    /// Reads a config file. Relative table paths are taken relative to the
    /// file's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
        let mut raw = Self::parse(&text)?;
        if let Some(dir) = path.parent() {
            let rebase = |p: &mut PathBuf| {
                if p.is_relative() {
                    *p = dir.join(&*p);
                }
            };
            if let Some(p) = raw.optical_table.as_mut() {
                rebase(p);
            }
            for m in raw.materials.values_mut() {
                if let Some(p) = m.optical_table.as_mut() {
                    rebase(p);
                }
            }
        }
        Ok(raw)
    }

    /// Fields set in `other` replace those in `self`.
    pub fn overlay(mut self, other: RawConfig) -> Self {
        macro_rules! take {
            ($($f:ident),+) => { $( if other.$f.is_some() { self.$f = other.$f; } )+ };
        }
        take!(
            quantity, z_min, z_max, points, spacing, temperature, radius, sphere, high, low,
            model, te_zero, rel_tol, l_max_cap, nodes, format, out, optical_table
        );
        self.materials.extend(other.materials);
        self
    }
}

/// A validated sweep configuration in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub quantity: CurveKind,
    pub z_min: f64,
    pub z_max: f64,
    pub n_points: usize,
    pub spacing: Spacing,
    pub temperature: f64,
    pub sphere_radius: f64,
    pub sphere: String,
    pub high: String,
    pub low: Option<String>,
    pub low_freq_model: LowFreqModel,
    pub te_zero: ZeroFrequencyTe,
    pub rel_tol: f64,
    pub l_max_cap: usize,
    pub nodes: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub optical_table: Option<PathBuf>,
    pub materials: BTreeMap<String, CustomMaterial>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            quantity: CurveKind::Force,
            z_min: 100e-9,
            z_max: 300e-9,
            n_points: 41,
            spacing: Spacing::Log,
            temperature: 300.0,
            sphere_radius: 100e-6,
            sphere: "gold-drude".into(),
            high: "si-doped-n1".into(),
            low: Some("si-dielectric".into()),
            low_freq_model: LowFreqModel::A,
            te_zero: ZeroFrequencyTe::Vanishing,
            rel_tol: DEFAULT_REL_TOL,
            l_max_cap: DEFAULT_L_MAX_CAP,
            nodes: DEFAULT_NODES,
            format: Format::Csv,
            out: None,
            optical_table: None,
            materials: BTreeMap::new(),
        }
    }
}

fn non_empty(field: &str, s: String) -> Result<String> {
    if s.trim().is_empty() {
        Err(Error::InvalidParameter(format!("{field} must not be empty")))
    } else {
        Ok(s.trim().to_string())
    }
}

impl SweepConfig {
    pub fn resolve(raw: RawConfig) -> Result<Self> {
        let mut c = Self::default();
        if let Some(s) = raw.quantity {
            c.quantity = s.parse()?;
        }
        if let Some(s) = raw.z_min {
            c.z_min = parse_length(&s)?;
        }
        if let Some(s) = raw.z_max {
            c.z_max = parse_length(&s)?;
        }
        if let Some(n) = raw.points {
            c.n_points = n;
        }
        if let Some(s) = raw.spacing {
            c.spacing = s.parse()?;
        }
        if let Some(s) = raw.temperature {
            c.temperature = parse_temperature(&s)?;
        }
        if let Some(s) = raw.radius {
            c.sphere_radius = parse_length(&s)?;
        }
        if let Some(s) = raw.sphere {
            c.sphere = non_empty("sphere", s)?;
        }
        if let Some(s) = raw.high {
            c.high = non_empty("high", s)?;
        }
        if let Some(s) = raw.low {
            let s = s.trim();
            c.low = match s {
                "" | "none" => None,
                other => Some(other.to_string()),
            };
        }
        if let Some(s) = raw.model {
            c.low_freq_model = s.parse()?;
        }
        if let Some(s) = raw.te_zero {
            c.te_zero = s.parse()?;
        }
        if let Some(v) = raw.rel_tol {
            c.rel_tol = v;
        }
        if let Some(v) = raw.l_max_cap {
            c.l_max_cap = v;
        }
        if let Some(v) = raw.nodes {
            c.nodes = v;
        }
        if let Some(s) = raw.format {
            c.format = s.parse()?;
        }
        c.out = raw.out;
        c.optical_table = raw.optical_table;
        c.materials = raw.materials;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("z_min", self.z_min),
            ("z_max", self.z_max),
            ("temperature", self.temperature),
            ("radius", self.sphere_radius),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        if self.z_min >= self.z_max {
            return Err(Error::InvalidParameter(format!(
                "z_min ({}) must be below z_max ({})",
                self.z_min, self.z_max
            )));
        }
        if self.n_points < 2 {
            return Err(Error::InvalidParameter(format!(
                "points must be >= 2, got {}",
                self.n_points
            )));
        }
        self.grid()?;
        Ok(())
    }

    pub fn grid(&self) -> Result<MatsubaraGrid> {
        MatsubaraGrid::with_policy(self.temperature, self.rel_tol, self.l_max_cap)?
            .with_nodes(self.nodes)
    }

    pub fn separations(&self) -> Result<Vec<f64>> {
        match self.spacing {
            Spacing::Log => crate::lifshitz::log_grid(self.z_min, self.z_max, self.n_points),
            Spacing::Linear => crate::lifshitz::linear_grid(self.z_min, self.z_max, self.n_points),
        }
    }

    pub fn geometry(&self) -> Geometry {
        match self.quantity {
            CurveKind::Force => Geometry::SpherePlate {
                radius: self.sphere_radius,
            },
            CurveKind::Pressure => Geometry::PlatePlate,
        }
    }

    /// Resolves a material name: custom entries first, then the optical
    /// table, then the catalog.
    pub fn material(&self, name: &str) -> Result<PermittivityModel> {
        if let Some(custom) = self.materials.get(name) {
            return custom_material(name, custom);
        }
        if name == TABULATED_NAME {
            let path = self.optical_table.as_ref().ok_or_else(|| {
                Error::UnknownMaterial(format!("{name} (no optical table given)"))
            })?;
            let table = OpticalDataTable::load(path)?;
            return Ok(
                build_material(&MaterialSpec::Tabulated { table, drude: None })?.with_label(name)
            );
        }
        build_material(&lookup(name)?)
    }

    /// Plate-section model under the configured low-frequency description.
    fn plate(&self, name: &str, model: LowFreqModel) -> Result<PermittivityModel> {
        let m = self.material(name)?;
        let finite_static = matches!(static_permittivity(&m), Permittivity::Finite(_));
        Ok(match model {
            LowFreqModel::B if finite_static && !m.is_perfect_conductor() => {
                m.with_dc_conductivity()
            }
            _ => m,
        })
    }

    fn probe(&self) -> Result<PermittivityModel> {
        let m = self.material(&self.sphere)?;
        match self.te_zero {
            ZeroFrequencyTe::Vanishing => Ok(m),
            rule => m.with_zero_frequency_te(rule),
        }
    }

    /// The bodies of the sweep under `model`.
    pub fn setup_for(&self, model: LowFreqModel) -> Result<Setup> {
        Ok(Setup {
            probe: self.probe()?,
            high: self.plate(&self.high, model)?,
            low: self
                .low
                .as_deref()
                .map(|n| self.plate(n, model))
                .transpose()?,
            geometry: self.geometry(),
        })
    }

    pub fn setup(&self) -> Result<Setup> {
        self.setup_for(self.low_freq_model)
    }

    /// Every resolved setting as (key, value-with-unit), in a fixed order.
    pub fn resolved_pairs(&self) -> Vec<(&'static str, String)> {
        let quantity = match self.quantity {
            CurveKind::Force => "force",
            CurveKind::Pressure => "pressure",
        };
        let te = match self.te_zero {
            ZeroFrequencyTe::Vanishing => "vanishing",
            ZeroFrequencyTe::PlasmaLimit => "plasma",
        };
        let mut pairs = vec![
            ("quantity", quantity.to_string()),
            ("z_min", format!("{} m", sci(self.z_min))),
            ("z_max", format!("{} m", sci(self.z_max))),
            ("points", self.n_points.to_string()),
            ("spacing", self.spacing.to_string()),
            ("temperature", format!("{} K", sci(self.temperature))),
            ("radius", format!("{} m", sci(self.sphere_radius))),
            ("sphere", self.sphere.clone()),
            ("high", self.high.clone()),
            ("low", self.low.clone().unwrap_or_else(|| "none".into())),
            ("model", self.low_freq_model.to_string()),
            ("te_zero", te.to_string()),
            ("rel_tol", sci(self.rel_tol)),
            ("l_max_cap", self.l_max_cap.to_string()),
            ("nodes", self.nodes.to_string()),
        ];
        if let Some(p) = &self.optical_table {
            pairs.push(("optical_table", p.display().to_string()));
        }
        pairs
    }
}

fn custom_material(name: &str, m: &CustomMaterial) -> Result<PermittivityModel> {
    let drude = match (&m.omega_p, &m.gamma) {
        (Some(wp), Some(g)) => Some(DrudeParams::new(
            parse_angular_frequency(wp)?,
            parse_angular_frequency(g)?,
        )?),
        (None, None) => None,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "material '{name}': omega_p and gamma must be given together"
            )))
        }
    };
    let spec = match (&m.optical_table, &m.base) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidParameter(format!(
                "material '{name}': give either base or optical_table, not both"
            )))
        }
        (Some(path), None) => MaterialSpec::Tabulated {
            table: OpticalDataTable::load(path)?,
            drude,
        },
        (None, Some(base)) => match (lookup(base)?, drude) {
            (MaterialSpec::SiDielectric | MaterialSpec::SiDoped(_), Some(d)) => {
                MaterialSpec::SiDoped(d)
            }
            (MaterialSpec::GoldDrude | MaterialSpec::DrudeMetal(_), Some(d)) => {
                MaterialSpec::DrudeMetal(d)
            }
            (spec, None) => spec,
            (_, Some(_)) => {
                return Err(Error::InvalidParameter(format!(
                    "material '{name}': Drude override not supported for base '{base}'"
                )))
            }
        },
        (None, None) => match drude {
            Some(d) => MaterialSpec::DrudeMetal(d),
            None => {
                return Err(Error::InvalidParameter(format!(
                    "material '{name}' needs a base, an optical_table or Drude parameters"
                )))
            }
        },
    };
    Ok(build_material(&spec)?.with_label(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = SweepConfig::resolve(RawConfig::default()).unwrap();
        assert_eq!(c, SweepConfig::default());
        let z = c.separations().unwrap();
        assert_eq!(z.len(), 41);
        assert!((z[0] - 100e-9).abs() < 1e-21 && (z[40] - 300e-9).abs() < 1e-21);
    }

    #[test]
    fn file_then_flags() {
        let raw = RawConfig::parse(
            r#"
            z_min = "120 nm"
            temperature = "340 K"
            high = "vo2-metal"
            low = "vo2-insulator"
            model = "b"
            "#,
        )
        .unwrap();
        let flags = RawConfig {
            temperature: Some("300K".into()),
            ..Default::default()
        };
        let c = SweepConfig::resolve(raw.overlay(flags)).unwrap();
        assert_eq!(c.temperature, 300.0);
        assert!((c.z_min - 120e-9).abs() < 1e-20);
        assert_eq!(c.low_freq_model, LowFreqModel::B);
        let s = c.setup().unwrap();
        assert!(s.low.unwrap().is_dc_conducting());
        assert!(!s.high.is_dc_conducting());
    }

    #[test]
    fn rejects_bad_values() {
        let bad = |raw: RawConfig| SweepConfig::resolve(raw).is_err();
        assert!(bad(RawConfig {
            z_min: Some("300 nm".into()),
            z_max: Some("100 nm".into()),
            ..Default::default()
        }));
        assert!(bad(RawConfig {
            points: Some(1),
            ..Default::default()
        }));
        assert!(bad(RawConfig {
            temperature: Some("300".into()),
            ..Default::default()
        }));
        assert!(bad(RawConfig {
            model: Some("c".into()),
            ..Default::default()
        }));
        assert!(RawConfig::parse("unknown_key = 1").is_err());
    }

    #[test]
    fn unknown_material_surfaces() {
        let c = SweepConfig {
            high: "unobtainium".into(),
            ..Default::default()
        };
        assert!(matches!(c.setup(), Err(Error::UnknownMaterial(_))));
    }

    #[test]
    fn custom_drude_override() {
        let raw = RawConfig::parse(
            r#"
            high = "my-si"
            [materials.my-si]
            base = "si-dielectric"
            omega_p = "2e15 rad/s"
            gamma = "2.4e14 rad/s"
            "#,
        )
        .unwrap();
        let c = SweepConfig::resolve(raw).unwrap();
        let m = c.material("my-si").unwrap();
        assert_eq!(m.label(), "my-si");
        let reference = build_material(&lookup("si-doped-n1").unwrap()).unwrap();
        for xi in [1e13, 1e15, 1e17] {
            assert_eq!(m.permittivity_at(xi).unwrap(), reference.permittivity_at(xi).unwrap());
        }
    }
}
