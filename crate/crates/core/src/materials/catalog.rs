//! Named material catalog.
//!
//! | name            | model                                                   |
//! |-----------------|---------------------------------------------------------|
//! | `gold-drude`    | Drude metal, ω_p = 9.0 eV, γ = 0.035 eV                 |
//! | `si-dielectric` | single-resonance Si core, ε(0) = 11.66 (model a)        |
//! | `si-doped-n1`   | Si core + Drude(2.0e15, 2.4e14 rad/s)                   |
//! | `si-doped-n2`   | Si core + Drude(6.3e14, 1.8e13 rad/s)                   |
//! | `si-doped-n`    | Si core + Drude(3.5e13, 1.8e13 rad/s), low-density Si   |
//! | `vo2-insulator` | 7 oscillators + tail, ε_∞ = 4.26, ω_∞ = 15 eV           |
//! | `vo2-metal`     | 4 oscillators + tail + Drude(3.33 eV, 0.66 eV)          |
//!
//! The gold and Si-core entries are analytic stand-ins for tabulated optical
//! data; a measured table can be substituted through [`MaterialSpec::Tabulated`].

use super::{
    Background, DrudeParams, HighFreqTail, OpticalDataTable, OscillatorParams, PermittivityModel,
};
use crate::constants::ev_to_rad_s;
use crate::error::{Error, Result};

pub mod params {
    //! Catalog parameter values.

    pub const GOLD_OMEGA_P_EV: f64 = 9.0;
    pub const GOLD_GAMMA_EV: f64 = 0.035;

    pub const SI_STATIC: f64 = 11.66;
    pub const SI_OMEGA_UV: f64 = 6.6e15;
    /// Conductivity effective mass of electrons in n-type Si, in units of mₑ.
    pub const SI_EFFECTIVE_MASS_RATIO: f64 = 0.26;

    /// (ω_p, γ) in rad/s.
    pub const SI_N1_DRUDE: (f64, f64) = (2.0e15, 2.4e14);
    pub const SI_N2_DRUDE: (f64, f64) = (6.3e14, 1.8e13);
    pub const SI_N_DRUDE: (f64, f64) = (3.5e13, 1.8e13);

    /// (ω in eV, Γ, s), insulating phase.
    pub const VO2_INSULATOR_OSCILLATORS: [(f64, f64, f64); 7] = [
        (1.02, 0.55, 0.79),
        (1.30, 0.55, 0.474),
        (1.50, 0.50, 0.483),
        (2.75, 0.22, 0.536),
        (3.49, 0.47, 1.316),
        (3.76, 0.38, 1.060),
        (5.1, 0.385, 0.99),
    ];
    pub const VO2_INSULATOR_EPS_INF: f64 = 4.26;

    /// (ω in eV, Γ, s), metallic phase.
    pub const VO2_METAL_OSCILLATORS: [(f64, f64, f64); 4] = [
        (0.86, 0.95, 1.816),
        (2.8, 0.23, 0.972),
        (3.48, 0.28, 1.04),
        (4.6, 0.34, 1.05),
    ];
    pub const VO2_METAL_EPS_INF: f64 = 3.95;
    pub const VO2_METAL_OMEGA_P_EV: f64 = 3.33;
    pub const VO2_METAL_GAMMA_EV: f64 = 0.66;

    pub const VO2_OMEGA_INF_EV: f64 = 15.0;
}

/// A request for a catalog material.
#[derive(Debug, Clone, PartialEq)]
pub enum MaterialSpec {
    GoldDrude,
    /// Drude metal with user-supplied parameters.
    DrudeMetal(DrudeParams),
    SiDielectric,
    SiDoped(DrudeParams),
    Vo2Insulator,
    Vo2Metal,
    Tabulated {
        table: OpticalDataTable,
        drude: Option<DrudeParams>,
    },
}

const NAMES: [&str; 7] = [
    "gold-drude",
    "si-dielectric",
    "si-doped-n1",
    "si-doped-n2",
    "si-doped-n",
    "vo2-insulator",
    "vo2-metal",
];

/// Names accepted by [`lookup`].
pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

fn drude(pair: (f64, f64)) -> DrudeParams {
    DrudeParams {
        omega_p: pair.0,
        gamma: pair.1,
    }
}

/// Resolves a catalog name to its specification.
pub fn lookup(name: &str) -> Result<MaterialSpec> {
    Ok(match name {
        "gold-drude" | "gold" | "au" => MaterialSpec::GoldDrude,
        "si-dielectric" => MaterialSpec::SiDielectric,
        "si-doped-n1" => MaterialSpec::SiDoped(drude(params::SI_N1_DRUDE)),
        "si-doped-n2" => MaterialSpec::SiDoped(drude(params::SI_N2_DRUDE)),
        "si-doped-n" => MaterialSpec::SiDoped(drude(params::SI_N_DRUDE)),
        "vo2-insulator" => MaterialSpec::Vo2Insulator,
        "vo2-metal" => MaterialSpec::Vo2Metal,
        other => return Err(Error::UnknownMaterial(other.to_string())),
    })
}

fn si_core() -> Result<Background> {
    Background::single_resonance(params::SI_STATIC, params::SI_OMEGA_UV)
}

fn oscillator_background(table: &[(f64, f64, f64)], eps_inf: f64) -> Result<Background> {
    let oscillators = table
        .iter()
        .map(|&(w, g, s)| OscillatorParams::from_ev(w, g, s))
        .collect::<Result<Vec<_>>>()?;
    let tail = HighFreqTail::new(eps_inf, ev_to_rad_s(params::VO2_OMEGA_INF_EV))?;
    Ok(Background::Oscillators { oscillators, tail })
}

/// Builds the permittivity model for a catalog specification.
pub fn build_material(spec: &MaterialSpec) -> Result<PermittivityModel> {
    let model = match spec {
        MaterialSpec::GoldDrude => PermittivityModel::new(
            "gold-drude",
            None,
            Some(DrudeParams::from_ev(
                params::GOLD_OMEGA_P_EV,
                params::GOLD_GAMMA_EV,
            )?),
        ),
        MaterialSpec::DrudeMetal(d) => {
            let d = DrudeParams::new(d.omega_p, d.gamma)?;
            PermittivityModel::new("drude-metal", None, Some(d))
        }
        MaterialSpec::SiDielectric => PermittivityModel::new("si-dielectric", Some(si_core()?), None),
        MaterialSpec::SiDoped(d) => {
            let d = DrudeParams::new(d.omega_p, d.gamma)?;
            let label = match (d.omega_p, d.gamma) {
                p if p == params::SI_N1_DRUDE => "si-doped-n1".to_string(),
                p if p == params::SI_N2_DRUDE => "si-doped-n2".to_string(),
                p if p == params::SI_N_DRUDE => "si-doped-n".to_string(),
                (w, g) => format!("si-doped(wp={w:e},gamma={g:e})"),
            };
            PermittivityModel::new(label, Some(si_core()?), Some(d))
        }
        MaterialSpec::Vo2Insulator => PermittivityModel::new(
            "vo2-insulator",
            Some(oscillator_background(
                &params::VO2_INSULATOR_OSCILLATORS,
                params::VO2_INSULATOR_EPS_INF,
            )?),
            None,
        ),
        MaterialSpec::Vo2Metal => PermittivityModel::new(
            "vo2-metal",
            Some(oscillator_background(
                &params::VO2_METAL_OSCILLATORS,
                params::VO2_METAL_EPS_INF,
            )?),
            Some(DrudeParams::from_ev(
                params::VO2_METAL_OMEGA_P_EV,
                params::VO2_METAL_GAMMA_EV,
            )?),
        ),
        MaterialSpec::Tabulated { table, drude } => {
            let drude = drude
                .map(|d| DrudeParams::new(d.omega_p, d.gamma))
                .transpose()?;
            PermittivityModel::new("tabulated", Some(Background::Tabulated(table.clone())), drude)
        }
    };
    Ok(model)
}
